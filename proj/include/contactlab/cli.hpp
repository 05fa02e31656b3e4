#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace contactlab {

/// Runs the command-line interface against explicit argv-style arguments.
/// Exit status: 0 success, 1 mathematical failure (e.g. nonzero contact
/// residual or a failed identity), 2 input error (parsing, bad flags).
/// Output is deterministic for fixed arguments: identical runs produce
/// byte-identical bytes on `out`.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace contactlab
