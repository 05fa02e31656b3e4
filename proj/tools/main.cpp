#include <iostream>
#include <vector>

#include "contactlab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return contactlab::cli_main(args, std::cout, std::cerr);
}
