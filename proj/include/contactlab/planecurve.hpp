#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contactlab/homog.hpp"
#include "contactlab/projective.hpp"

namespace contactlab {

enum class SingKind { Node, Cusp };

struct SingularPoint {
    ProjPoint point;
    SingKind kind;
};

/// Reduced plane curve with its node/cusp inventory.
struct PlaneCurve {
    HomogPoly F;
    int n = 0;
    std::vector<SingularPoint> singularities;
    int delta = 0;  // nodes
    int kappa = 0;  // cusps
};

// Validates squarefreeness (NotReducedCurve otherwise) and runs the singular
// point analysis.
PlaneCurve analyze_curve(const HomogPoly& f);

/// Rational singular points of a squarefree curve, classified by 2-jet:
/// nondegenerate quadratic -> node, rank-1 square with transverse cubic
/// term -> cusp. Throws IrrationalSingularity when a non-rational singular
/// point is detected, UnsupportedSingularity for anything worse than a cusp.
std::vector<SingularPoint> singular_points(const HomogPoly& f);

/// Dual curve: polynomial for n >= 2, the dual point for a line (n* = 0).
struct DualCurve {
    std::optional<HomogPoly> curve;      // degree n* >= 2
    std::optional<ProjPoint> dual_point; // line case
    int nstar = 0;
};

DualCurve dual_curve(const HomogPoly& f);

struct GoodnessReport {
    bool good = false;
    std::vector<std::string> reasons;  // failed conditions, empty when good
};

/// good <=> F(1,0,0) != 0 and the binary form F(x0,x1,0) is squarefree of
/// degree n (the curve avoids p_inf and is not tangent to the line at
/// infinity).
GoodnessReport is_good(const HomogPoly& f);

struct PluckerNumbers {
    int n = 0;
    int delta = 0;
    int kappa = 0;
    int nstar = 0;
    int genus = 0;
};

// n* = n(n-1) - 2*delta - 3*kappa, g = (n-1)(n-2)/2 - delta - kappa; throws
// ContradictorySingularityData when either comes out negative.
PluckerNumbers plucker_numbers(const PlaneCurve& curve);
PluckerNumbers plucker_numbers(int n, int delta, int kappa);

/// Local intersection multiplicity of two affine curves at a common isolated
/// zero: valuation at u = 0 of Res_v after a seeded generic shear. Returns 0
/// when p is not a common zero.
int local_intersection_multiplicity(const MultiPoly& f, const MultiPoly& g,
                                    const std::array<std::string, 2>& chart_vars,
                                    const std::array<Rat, 2>& p, std::uint64_t seed);

// Projective convenience wrapper: dehomogenizes both at a chart containing p.
int local_intersection_multiplicity(const HomogPoly& f, const HomogPoly& g, const ProjPoint& p,
                                    std::uint64_t seed);

// F restricted to the chart vars[i] = 1, in the two remaining variable names.
MultiPoly dehomogenize(const HomogPoly& f, int chart);

}  // namespace contactlab
