#include "contactlab/contactcurve.hpp"

#include <algorithm>

#include "contactlab/errors.hpp"
#include "contactlab/exactpoly.hpp"
#include "contactlab/forms.hpp"
#include "contactlab/seeding.hpp"

namespace contactlab {

FlagPoint make_flag_point(const ProjPoint& x, const ProjPoint& y) {
    if (x.dim() != 3 || y.dim() != 3)
        throw MathError("flag point needs CP^2 and CP^2* coordinates");
    Rat incidence = x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
    if (!incidence.is_zero()) throw MathError("flag point violates the incidence relation");
    return FlagPoint{x, y};
}

FlagPoint horizontal_lift(const HomogPoly& f, const ProjPoint& p) {
    if (p.dim() != 3) throw NotOnCurve("lift expects a CP^2 point");
    std::map<std::string, Rat> at;
    for (int i = 0; i < 3; ++i) at[f.vars[static_cast<std::size_t>(i)]] = p[static_cast<std::size_t>(i)];
    if (!f.poly.evaluate(at).is_zero()) throw NotOnCurve("point does not lie on the curve");
    std::vector<Rat> grad(3);
    for (int i = 0; i < 3; ++i) grad[static_cast<std::size_t>(i)] = homog_partial(f, i).evaluate(at);
    if (std::all_of(grad.begin(), grad.end(), [](const Rat& r) { return r.is_zero(); }))
        throw GradientVanishes("gradient vanishes at the point");
    return make_flag_point(p, ProjPoint(std::move(grad)));
}

ProjPoint bryant_map(const FlagPoint& pt) {
    const ProjPoint& x = pt.x;
    const ProjPoint& y = pt.y;
    Rat incidence = x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
    if (!incidence.is_zero()) throw MathError("bryant_map: incidence violated");
    std::vector<Rat> img{Rat(2) * x[2] * y[0], Rat(2) * x[0] * y[0] + x[1] * y[1],
                         Rat(2) * x[1] * y[0], -(x[2] * y[1])};
    if (std::all_of(img.begin(), img.end(), [](const Rat& r) { return r.is_zero(); }))
        throw IndeterminatePoint("point lies over the indeterminacy curve of the Bryant map");
    return ProjPoint(std::move(img));
}

std::array<MultiPoly, 4> contact_image_components(const HomogPoly& f) {
    MultiPoly fx0 = homog_partial(f, 0);
    MultiPoly fx1 = homog_partial(f, 1);
    MultiPoly v0 = MultiPoly::variable(f.vars[0]);
    MultiPoly v1 = MultiPoly::variable(f.vars[1]);
    MultiPoly v2 = MultiPoly::variable(f.vars[2]);
    std::array<MultiPoly, 4> comps{Rat(2) * v2 * fx0, Rat(2) * v0 * fx0 + v1 * fx1,
                                   Rat(2) * v1 * fx0, -(v2 * fx1)};
    if (std::all_of(comps.begin(), comps.end(), [](const MultiPoly& c) { return c.is_zero(); }))
        throw DegenerateImage("all Bryant components vanish identically");
    return comps;
}

namespace {

// Rational common zeros of the degree-n binary forms b, c in (vars[0],
// vars[1]); returned as points on the line vars[2] = 0.
std::vector<ProjPoint> binary_common_zeros(const MultiPoly& b, const MultiPoly& c,
                                           const VarTriple& vars) {
    std::vector<ProjPoint> out;
    MultiPoly g = poly_gcd(b, c);
    if (g.is_constant()) return out;
    if (divide_out(g, MultiPoly::variable(vars[1])).second > 0)
        out.push_back(ProjPoint::of({1, 0, 0}));
    MultiPoly affine = g.substitute(vars[1], MultiPoly(Rat(1)));
    if (affine.degree_in(vars[0]) > 0) {
        for (const auto& [r, mult] : rational_roots(affine, vars[0])) {
            out.push_back(ProjPoint(std::vector<Rat>{r, Rat(1), Rat(0)}));
        }
    }
    return out;
}

}  // namespace

SpaceCurveMap contact_image(const HomogPoly& f) {
    SpaceCurveMap m;
    m.source = analyze_curve(f);
    m.components = contact_image_components(f);
    m.degree = f.degree;

    for (const SingularPoint& s : m.source.singularities) m.base_locus.push_back(s.point);
    // extra base points: D meets the line at infinity where F_x0 vanishes
    MultiPoly at_inf = f.poly.substitute(f.vars[2], MultiPoly(Rat(0)));
    MultiPoly fx0_inf = homog_partial(f, 0).substitute(f.vars[2], MultiPoly(Rat(0)));
    if (!at_inf.is_zero() && !fx0_inf.is_zero()) {
        for (ProjPoint& p : binary_common_zeros(at_inf, fx0_inf, f.vars)) {
            bool seen = std::any_of(m.base_locus.begin(), m.base_locus.end(),
                                    [&](const ProjPoint& q) { return q.same_point(p); });
            if (!seen) m.base_locus.push_back(std::move(p));
        }
    }
    return m;
}

ContactVerification verify_contact_residual(const HomogPoly& f,
                                            const std::array<MultiPoly, 4>& components) {
    MultiPoly f_aff = dehomogenize(f, 2);
    if (f_aff.is_constant())
        throw ChartUnavailable("curve has no points in the affine chart x2 = 1");
    const std::string& xu = f.vars[0];
    const std::string& xv = f.vars[1];
    // tangent field of the affine curve
    MultiPoly tu = f_aff.derivative(xv);
    MultiPoly tv = -f_aff.derivative(xu);
    auto along = [&](const MultiPoly& p) {
        return p.derivative(xu) * tu + p.derivative(xv) * tv;
    };

    for (int chart = 0; chart < 4; ++chart) {
        const MultiPoly& denom_h = components[static_cast<std::size_t>(chart)];
        if (denom_h.is_zero()) continue;
        if (try_exact_divide(denom_h, f.poly)) continue;  // vanishes on the curve

        std::array<MultiPoly, 3> psi;  // affine numerators toward z1, z2, z3
        {
            std::size_t k = 0;
            for (int i = 0; i < 4; ++i) {
                if (i == chart) continue;
                psi[k++] = components[static_cast<std::size_t>(i)].substitute(f.vars[2],
                                                                              MultiPoly(Rat(1)));
            }
        }
        MultiPoly denom = denom_h.substitute(f.vars[2], MultiPoly(Rat(1)));
        PolyForm theta = contact_form_from_matrix(bryant_matrix(), chart);

        MultiPoly numerator;
        for (int k = 0; k < 3; ++k) {
            MultiPoly ck = theta.component({k});
            if (ck.is_zero()) continue;
            if (ck.total_degree() > 1) throw MathError("contact form coefficient not linear");
            // clear z -> psi/denom in the (affine linear) coefficient
            MultiPoly cleared;
            for (const auto& [e, coeff] : ck.terms()) {
                MultiPoly term(coeff);
                unsigned used = 0;
                for (std::size_t i = 0; i < ck.vars().size(); ++i) {
                    if (e[i] == 0) continue;
                    int zi = ck.vars()[i] == "z1" ? 0 : (ck.vars()[i] == "z2" ? 1 : 2);
                    term *= psi[static_cast<std::size_t>(zi)].pow(e[i]);
                    used += e[i];
                }
                term *= denom.pow(1 - used);
                cleared += term;
            }
            const MultiPoly& pk = psi[static_cast<std::size_t>(k)];
            numerator += cleared * (denom * along(pk) - pk * along(denom));
        }

        ContactVerification v;
        v.chart = chart;
        if (!try_exact_divide(numerator, f_aff))
            v.residual = numerator;
        return v;
    }
    throw ChartUnavailable("every Bryant component vanishes on the curve");
}

ContactVerification verify_contact_symbolic(const HomogPoly& f) {
    return verify_contact_residual(f, contact_image_components(f));
}

ImageDegreeResult image_degree(const HomogPoly& f, std::uint64_t seed) {
    PlaneCurve curve = analyze_curve(f);
    std::array<MultiPoly, 4> comps = contact_image_components(f);
    const int n = f.degree;
    bool good = is_good(f).good;

    for (int attempt = 0; attempt < 10; ++attempt) {
        std::vector<int> degrees;
        for (int draw = 0; draw < 3; ++draw) {
            Rng rng(derive_seed(seed, "hyperplane",
                                static_cast<std::uint64_t>(attempt * 3 + draw)));
            MultiPoly h_phi;
            for (int i = 0; i < 4; ++i)
                h_phi += comps[static_cast<std::size_t>(i)] * Rat(rng.range(-9, 9));
            if (h_phi.is_zero() || try_exact_divide(h_phi, f.poly)) break;  // degenerate draw

            HomogPoly section = make_homog(h_phi, f.vars);
            int correction = 0;
            bool valid = true;
            for (std::size_t si = 0; si < curve.singularities.size(); ++si) {
                std::uint64_t mseed = derive_seed(
                    seed, "base-multiplicity",
                    static_cast<std::uint64_t>(attempt * 64 + draw * 16) + si);
                try {
                    correction += local_intersection_multiplicity(
                        f, section, curve.singularities[si].point, mseed);
                } catch (const NonIsolatedIntersection&) {
                    valid = false;
                    break;
                }
            }
            if (!valid) break;
            degrees.push_back(n * n - correction);
        }
        if (degrees.size() == 3 && degrees[0] == degrees[1] && degrees[1] == degrees[2])
            return {degrees[0], good};
    }
    throw NonGenericHyperplane("no agreeing hyperplane triple after 10 attempts");
}

InvolutionCheck involution_check(const HomogPoly& f) {
    InvolutionCheck out;
    DualCurve d1 = dual_curve(f);
    if (!d1.curve) return out;  // line: dual is a point, involution not defined
    out.applicable = true;

    DualCurve d2 = dual_curve(*d1.curve);
    if (!d2.curve) return out;
    out.bidual_proportional = proportional(d2.curve->poly, f.poly);
    // degree symmetry: deg sigma(C) = n* + n** must equal n + n*
    out.degree_symmetric = d2.nstar == f.degree;

    // sigma(C) exists as a contact image over CP^2* (coordinate swap)
    contact_image_components(swap_coordinates(*d1.curve));

    try {
        PlaneCurve dual_analyzed = analyze_curve(swap_coordinates(*d1.curve));
        PlaneCurve source = analyze_curve(f);
        out.genus_preserved =
            plucker_numbers(dual_analyzed).genus == plucker_numbers(source).genus;
    } catch (const IrrationalSingularity&) {
        out.genus_preserved.reset();
    }
    out.ok = out.bidual_proportional && out.degree_symmetric && out.genus_preserved.value_or(true);
    return out;
}

CurveReport curve_report(const HomogPoly& f, std::uint64_t seed) {
    PlaneCurve curve = analyze_curve(f);
    DualCurve dual = dual_curve(f);
    PluckerNumbers pn = plucker_numbers(curve);
    if (dual.nstar != pn.nstar)
        throw MathError("dual degree disagrees with the Plucker formula");

    CurveReport r;
    r.n = curve.n;
    r.delta = curve.delta;
    r.kappa = curve.kappa;
    r.nstar = dual.nstar;
    r.d_formula = curve.n + dual.nstar;
    r.genus = pn.genus;
    r.good = is_good(f).good;

    ImageDegreeResult img = image_degree(f, seed);
    r.d_independent = img.d;
    if (r.good && r.d_formula != r.d_independent)
        throw MathError("degree identity n + n* failed against the independent count: " + std::to_string(r.d_formula) +
                        " vs " + std::to_string(r.d_independent));

    try {
        r.contact_residual_zero = verify_contact_symbolic(f).residual_zero();
    } catch (const ChartUnavailable&) {
        r.contact_residual_zero = false;
    }
    return r;
}

}  // namespace contactlab
