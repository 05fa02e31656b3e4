#pragma once

#include <array>
#include <string>

#include "contactlab/multipoly.hpp"

namespace contactlab {

using VarTriple = std::array<std::string, 3>;

inline const VarTriple& x_vars() {
    static const VarTriple v = {"x0", "x1", "x2"};
    return v;
}

inline const VarTriple& y_vars() {
    static const VarTriple v = {"y0", "y1", "y2"};
    return v;
}

/// Homogeneous polynomial in a fixed coordinate triple (x0,x1,x2 or
/// y0,y1,y2), nonzero, every term of total degree exactly n.
struct HomogPoly {
    MultiPoly poly;
    int degree = 0;
    VarTriple vars = x_vars();

    std::string str() const { return poly.str(); }
};

// Validating constructor; throws InputError if p is zero, uses variables
// outside the triple, or is not homogeneous.
HomogPoly make_homog(const MultiPoly& p, const VarTriple& vars = x_vars());

// Same polynomial expressed in the other coordinate triple (x <-> y swap).
HomogPoly swap_coordinates(const HomogPoly& f);

// Partial derivative with respect to vars[i].
MultiPoly homog_partial(const HomogPoly& f, int i);

}  // namespace contactlab
