#pragma once

#include <string>
#include <vector>

namespace contactlab {

/// Chern/Euler data of a contact threefold; catalog entries, not derived
/// from manifold descriptions.
struct ThreefoldInvariants {
    std::string name;
    long chi_top = 0;   // topological Euler characteristic
    long chi_o = 0;     // holomorphic Euler characteristic
    long c1_cubed = 0;  // c1(X)^3
};

/// chi_top == 12 * chi(O) - c1^3 / 8. Throws NotContactCompatible when c1^3
/// is not divisible by 8 (contact forces c1 = -2L).
bool euler_identity_check(const ThreefoldInvariants& inv);

// CP^3, the flag threefold P(T_CP2), and CP^1 x abelian surface.
const std::vector<ThreefoldInvariants>& builtin_threefolds();

std::vector<ThreefoldInvariants> load_threefold_catalog(const std::string& path);

/// Symbolic consistency of the identity with its ingredients: the vanishing
/// of -c3 - c2 L - c1 L^2 - L^3 under L = -c1/2 together with
/// chi(O) = c1 c2 / 24 is algebraically equivalent to
/// c3 = 12 chi(O) - c1^3 / 8. Verified in exact polynomial arithmetic.
bool chern_relation_identity_holds();

}  // namespace contactlab
