#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "contactlab/planecurve.hpp"
#include "contactlab/projective.hpp"

namespace contactlab {

/// Point of the incidence variety F(1,2): x in CP^2, y in CP^2*, with
/// x0 y0 + x1 y1 + x2 y2 = 0 exactly.
struct FlagPoint {
    ProjPoint x;
    ProjPoint y;
};

// Throws MathError unless the incidence relation holds.
FlagPoint make_flag_point(const ProjPoint& x, const ProjPoint& y);

/// (p, [grad F(p)]) for a smooth curve point; NotOnCurve / GradientVanishes
/// otherwise. Incidence holds by the Euler relation.
FlagPoint horizontal_lift(const HomogPoly& f, const ProjPoint& p);

/// The birational contact map F(1,2) -> CP^3,
/// ([x], [y]) -> [2 x2 y0, 2 x0 y0 + x1 y1, 2 x1 y0, -x2 y1].
/// Throws IndeterminatePoint when all four components vanish.
ProjPoint bryant_map(const FlagPoint& pt);

/// Composite parametrization of the contact curve: the Bryant map applied to
/// the gradient lift, as four degree-n forms on CP^2.
struct SpaceCurveMap {
    PlaneCurve source;
    std::array<MultiPoly, 4> components;
    int degree = 0;
    std::vector<ProjPoint> base_locus;  // rational points where all components vanish on D
};

SpaceCurveMap contact_image(const HomogPoly& f);

// The four components alone (no singular-point analysis); used by
// verification paths that must work without rational singularities.
std::array<MultiPoly, 4> contact_image_components(const HomogPoly& f);

struct ContactVerification {
    MultiPoly residual;  // zero polynomial iff the image curve is contact
    int chart = 0;       // CP^3 chart the Bryant form was pulled back from
    bool residual_zero() const { return residual.is_zero(); }
};

/// Pulls the Bryant contact form back through the parametrization, evaluates
/// it on the curve's tangent field, clears denominators and reduces modulo
/// the affine curve equation. Zero residual iff the image is contact.
ContactVerification verify_contact_symbolic(const HomogPoly& f);

// Same computation on caller-supplied components (corrupted-map controls).
ContactVerification verify_contact_residual(const HomogPoly& f,
                                            const std::array<MultiPoly, 4>& components);

struct ImageDegreeResult {
    int d = 0;
    bool good = true;  // false marks the flagged estimate for non-good curves
};

/// Independent degree of the image curve: Bezout count n^2 of {F = 0} with a
/// seeded random hyperplane pullback, minus local multiplicities at the
/// singular base points. Agreement across three hyperplane draws is
/// required; non-generic draws are resampled up to 10 times.
ImageDegreeResult image_degree(const HomogPoly& f, std::uint64_t seed);

struct InvolutionCheck {
    bool applicable = false;  // false for lines (dual is a point)
    bool bidual_proportional = false;
    bool degree_symmetric = false;
    std::optional<bool> genus_preserved;  // empty when the dual has irrational singularities
    bool ok = false;
};

/// sigma(C) = contact image of the dual curve under the coordinate swap;
/// checks sigma^2 = id via exact biduality and the degree/genus symmetry.
InvolutionCheck involution_check(const HomogPoly& f);

struct CurveReport {
    int n = 0;
    int delta = 0;
    int kappa = 0;
    int nstar = 0;
    int d_formula = 0;       // n + n*
    int d_independent = 0;   // Bezout-minus-multiplicity count
    int genus = 0;
    bool good = false;
    bool contact_residual_zero = false;
};

/// Aggregated report; asserts d_formula == d_independent for good curves.
CurveReport curve_report(const HomogPoly& f, std::uint64_t seed);

}  // namespace contactlab
