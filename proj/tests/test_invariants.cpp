#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "contactlab/errors.hpp"
#include "contactlab/invariants.hpp"

using namespace contactlab;

TEST_CASE("Euler identity catalog") {
    // CP^3: chi_top = 4 from the Betti numbers, c1 = 4H so c1^3 = 64
    CHECK(euler_identity_check({"CP3", 4, 1, 64}));
    // flag threefold: xi^3 = 9 - 3 = 6, c1 = 2 xi gives 48, chi_top = 6
    CHECK(euler_identity_check({"flag", 6, 1, 48}));
    // CP^1 x abelian surface: Kunneth gives all zeros
    CHECK(euler_identity_check({"CP1xA", 0, 0, 0}));
    // perturbed control
    CHECK_FALSE(euler_identity_check({"control", 4, 1, 72}));

    CHECK_THROWS_AS(euler_identity_check({"bad", 4, 1, 63}), NotContactCompatible);
}

TEST_CASE("builtin catalog passes and every single-field perturbation fails") {
    for (const ThreefoldInvariants& inv : builtin_threefolds()) {
        CHECK(euler_identity_check(inv));
        ThreefoldInvariants t = inv;
        for (long d : {-1L, 1L}) {
            t = inv;
            t.chi_top += d;
            CHECK_FALSE(euler_identity_check(t));
            t = inv;
            t.chi_o += d;
            CHECK_FALSE(euler_identity_check(t));
            t = inv;
            t.c1_cubed += 8 * d;  // stay divisible by 8
            CHECK_FALSE(euler_identity_check(t));
        }
    }
}

TEST_CASE("symbolic derivation identity") {
    CHECK(chern_relation_identity_holds());
}

TEST_CASE("catalog file round trip") {
    std::string path = "threefolds_test.json";
    {
        std::ofstream out(path);
        out << R"([{"name": "CP3", "chi_top": 4, "chi_O": 1, "c1_cubed": 64},
                   {"name": "custom", "chi_top": 12, "chi_O": 1, "c1_cubed": 0}])";
    }
    auto entries = load_threefold_catalog(path);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].name == "CP3");
    CHECK(euler_identity_check(entries[0]));
    CHECK(euler_identity_check(entries[1]));  // 12 = 12*1 - 0
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_threefold_catalog("does_not_exist.json"), InputError);
    {
        std::ofstream out(path);
        out << "{\"not\": \"an array\"}";
    }
    CHECK_THROWS_AS(load_threefold_catalog(path), InputError);
    std::remove(path.c_str());
}
