#include "contactlab/planecurve.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <set>

#include "contactlab/errors.hpp"
#include "contactlab/exactpoly.hpp"
#include "contactlab/seeding.hpp"

namespace contactlab {

MultiPoly dehomogenize(const HomogPoly& f, int chart) {
    return f.poly.substitute(f.vars[static_cast<std::size_t>(chart)], MultiPoly(Rat(1)));
}

namespace {

struct ChartSystem {
    std::array<std::string, 2> vars;  // (u, v) in index order
    std::vector<MultiPoly> gs;        // nonzero dehomogenized partials
};

// Evaluates g at v = value (complex), returning ascending complex
// coefficients in u.
std::vector<std::complex<double>> specialize_numeric(const MultiPoly& g, const std::string& u,
                                                     const std::string& v,
                                                     std::complex<double> value) {
    std::vector<std::complex<double>> out(static_cast<std::size_t>(g.degree_in(u)) + 1, 0.0);
    for (const auto& [e, c] : g.terms()) {
        unsigned eu = 0, ev = 0;
        for (std::size_t i = 0; i < g.vars().size(); ++i) {
            if (g.vars()[i] == u) eu = e[i];
            if (g.vars()[i] == v) ev = e[i];
        }
        out[eu] += c.to_double() * std::pow(value, ev);
    }
    return out;
}

// Relative residual of g at a complex point; compares |sum| against the sum
// of term magnitudes.
double relative_residual(const MultiPoly& g, const std::string& u, const std::string& v,
                         std::complex<double> pu, std::complex<double> pv) {
    std::complex<double> acc = 0.0;
    double scale = 0.0;
    for (const auto& [e, c] : g.terms()) {
        std::complex<double> term = c.to_double();
        for (std::size_t i = 0; i < g.vars().size(); ++i) {
            if (g.vars()[i] == u) term *= std::pow(pu, e[i]);
            if (g.vars()[i] == v) term *= std::pow(pv, e[i]);
        }
        acc += term;
        scale += std::abs(term);
    }
    if (scale == 0.0) return 0.0;
    return std::abs(acc) / scale;
}

// True when the chart system plausibly vanishes at some point with
// v-coordinate a root of the given factor. Numeric filter with a wide
// margin; exact degree assertions downstream catch false negatives.
bool numeric_common_zero_exists(const ChartSystem& sys, const MultiPoly& v_factor) {
    const std::string& u = sys.vars[0];
    const std::string& v = sys.vars[1];
    std::vector<MultiPoly> cs = v_factor.coeffs_in(v);
    std::vector<std::complex<double>> vc(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i)
        vc[i] = cs[i].is_zero() ? 0.0 : cs[i].constant_value().to_double();

    std::vector<std::complex<double>> vroots;
    try {
        vroots = durand_kerner(vc, 1e-12, 4000);
    } catch (const RootFindingFailed&) {
        return true;  // cannot rule the roots out
    }
    for (std::complex<double> pv : vroots) {
        // u-candidates from the first system member with u-dependence
        for (const MultiPoly& lead : sys.gs) {
            if (lead.degree_in(u) == 0) continue;
            std::vector<std::complex<double>> uroots;
            try {
                uroots = durand_kerner(specialize_numeric(lead, u, v, pv), 1e-12, 4000);
            } catch (const RootFindingFailed&) {
                return true;
            }
            for (std::complex<double> pu : uroots) {
                bool all_vanish = true;
                for (const MultiPoly& g : sys.gs) {
                    if (relative_residual(g, u, v, pu, pv) > 1e-6) {
                        all_vanish = false;
                        break;
                    }
                }
                if (all_vanish) return true;
            }
            break;
        }
    }
    return false;
}

// Removes the (v - root) factors for every exact rational root; returns the
// leftover factor (constant when all roots are rational).
MultiPoly strip_rational_roots(MultiPoly h, const std::string& v) {
    for (const auto& [root, mult] : rational_roots(h, v)) {
        MultiPoly lin = MultiPoly::variable(v) - MultiPoly(root);
        h = divide_out(std::move(h), lin).first;
    }
    return h;
}

std::vector<std::array<Rat, 2>> solve_chart_system(const ChartSystem& sys) {
    const std::string& u = sys.vars[0];
    const std::string& v = sys.vars[1];

    for (const MultiPoly& g : sys.gs)
        if (g.is_constant()) return {};  // nonzero constant: no common zeros
    if (sys.gs.size() < 2)
        throw UnsupportedSingularity("singular locus is not isolated in a chart");

    // v-eliminants: polynomials vanishing at every common zero's v-coordinate
    std::vector<MultiPoly> eliminants;
    for (const MultiPoly& g : sys.gs)
        if (g.degree_in(u) == 0) eliminants.push_back(g);
    for (std::size_t i = 0; i < sys.gs.size(); ++i) {
        for (std::size_t j = i + 1; j < sys.gs.size(); ++j) {
            if (sys.gs[i].degree_in(u) == 0 || sys.gs[j].degree_in(u) == 0) continue;
            MultiPoly r = resultant(sys.gs[i], sys.gs[j], u);
            if (!r.is_zero()) eliminants.push_back(std::move(r));
        }
    }
    if (eliminants.empty())
        throw UnsupportedSingularity("all partial-derivative pairs share factors");

    MultiPoly h;
    for (const MultiPoly& e : eliminants) {
        h = poly_gcd(h, e);
        if (h.is_constant()) break;
    }
    if (h.is_constant()) return {};

    std::vector<std::array<Rat, 2>> points;
    std::vector<Rat> v_roots;
    for (const auto& [v0, mult] : rational_roots(h, v)) v_roots.push_back(v0);

    for (const Rat& v0 : v_roots) {
        // specialize and intersect in u
        MultiPoly ugcd;
        bool any = false;
        for (const MultiPoly& g : sys.gs) {
            MultiPoly s = g.substitute(v, MultiPoly(v0));
            if (s.is_zero()) continue;
            any = true;
            ugcd = poly_gcd(ugcd, s);
            if (ugcd.is_constant()) break;
        }
        if (!any) throw UnsupportedSingularity("singular locus contains a line");
        if (ugcd.is_constant()) continue;  // spurious v-candidate

        std::vector<Rat> u_roots;
        for (const auto& [u0, mult] : rational_roots(ugcd, u)) u_roots.push_back(u0);
        for (const Rat& u0 : u_roots) {
            bool all = true;
            std::map<std::string, Rat> pt{{u, u0}, {v, v0}};
            for (const MultiPoly& g : sys.gs) {
                if (!g.evaluate(pt).is_zero()) {
                    all = false;
                    break;
                }
            }
            if (all) points.push_back({u0, v0});
        }
        // leftover irrational u-factor at this rational v0
        MultiPoly ures = squarefree_part(ugcd);
        for (const Rat& u0 : u_roots) {
            MultiPoly lin = MultiPoly::variable(u) - MultiPoly(u0);
            ures = divide_out(std::move(ures), lin).first;
        }
        if (ures.degree_in(u) > 0) {
            std::vector<std::complex<double>> uc =
                specialize_numeric(ures, u, v, std::complex<double>(0.0));
            double v0d = v0.to_double();
            for (std::complex<double> pu : durand_kerner(uc, 1e-12, 4000)) {
                bool all_vanish = true;
                for (const MultiPoly& g : sys.gs) {
                    if (relative_residual(g, u, v, pu, v0d) > 1e-6) {
                        all_vanish = false;
                        break;
                    }
                }
                if (all_vanish)
                    throw IrrationalSingularity("singular point with irrational coordinates");
            }
        }
    }

    MultiPoly residue = strip_rational_roots(squarefree_part(h), v);
    if (residue.degree_in(v) > 0 && numeric_common_zero_exists(sys, residue))
        throw IrrationalSingularity("singular point with irrational coordinates");

    return points;
}

SingKind classify(const HomogPoly& f, const ProjPoint& p) {
    int chart = -1;
    for (int i = 2; i >= 0; --i) {
        if (!p[static_cast<std::size_t>(i)].is_zero()) {
            chart = i;
            break;
        }
    }
    std::array<std::string, 2> uv;
    {
        std::size_t k = 0;
        for (int i = 0; i < 3; ++i)
            if (i != chart) uv[k++] = f.vars[static_cast<std::size_t>(i)];
    }
    MultiPoly fa = dehomogenize(f, chart);
    const Rat& scale = p[static_cast<std::size_t>(chart)];
    std::array<Rat, 2> loc;
    {
        std::size_t k = 0;
        for (int i = 0; i < 3; ++i)
            if (i != chart) loc[k++] = p[static_cast<std::size_t>(i)] / scale;
    }
    MultiPoly shifted = fa.substitute(
        {{uv[0], MultiPoly::variable(uv[0]) + MultiPoly(loc[0])},
         {uv[1], MultiPoly::variable(uv[1]) + MultiPoly(loc[1])}});

    // homogeneous jets at the origin
    std::array<MultiPoly, 4> jets;  // degrees 0..3
    for (const auto& [e, c] : shifted.terms()) {
        unsigned d = 0;
        for (unsigned x : e) d += x;
        if (d > 3) continue;
        std::vector<std::pair<Exponents, Rat>> one{{e, c}};
        jets[d] += MultiPoly::from_terms(shifted.vars(), std::move(one));
    }
    if (!jets[0].is_zero() || !jets[1].is_zero())
        throw MathError("classify: point is not singular");
    if (jets[2].is_zero()) throw UnsupportedSingularity("point of multiplicity three or more");

    auto coeff_of = [&](unsigned eu, unsigned ev) {
        MultiPoly m = jets[2];
        for (const auto& [e, c] : m.terms()) {
            unsigned au = 0, av = 0;
            for (std::size_t i = 0; i < m.vars().size(); ++i) {
                if (m.vars()[i] == uv[0]) au = e[i];
                if (m.vars()[i] == uv[1]) av = e[i];
            }
            if (au == eu && av == ev) return c;
        }
        return Rat(0);
    };
    Rat a = coeff_of(2, 0), b = coeff_of(1, 1), c = coeff_of(0, 2);
    Rat disc = b * b - Rat(4) * a * c;
    if (!disc.is_zero()) return SingKind::Node;

    // repeated tangent direction
    Rat du = a.is_zero() ? Rat(1) : -b;
    Rat dv = a.is_zero() ? Rat(0) : Rat(2) * a;
    Rat val = jets[3].is_zero()
                  ? Rat(0)
                  : jets[3].evaluate({{uv[0], du}, {uv[1], dv}});
    if (!val.is_zero()) return SingKind::Cusp;
    throw UnsupportedSingularity("degenerate cusp (A_3 or worse)");
}

std::string point_sort_key(const ProjPoint& p) { return p.str(); }

}  // namespace

std::vector<SingularPoint> singular_points(const HomogPoly& f) {
    if (f.degree < 2) return {};
    std::array<MultiPoly, 3> partials;
    for (int i = 0; i < 3; ++i) partials[static_cast<std::size_t>(i)] = homog_partial(f, i);

    std::vector<ProjPoint> found;
    for (int chart = 2; chart >= 0; --chart) {
        ChartSystem sys;
        {
            std::size_t k = 0;
            for (int i = 0; i < 3; ++i)
                if (i != chart) sys.vars[k++] = f.vars[static_cast<std::size_t>(i)];
        }
        for (const MultiPoly& g : partials) {
            MultiPoly d = g.substitute(f.vars[static_cast<std::size_t>(chart)], MultiPoly(Rat(1)));
            if (!d.is_zero()) sys.gs.push_back(std::move(d));
        }
        if (sys.gs.empty()) throw UnsupportedSingularity("zero gradient");

        for (const auto& [u0, v0] : solve_chart_system(sys)) {
            std::vector<Rat> coords(3);
            std::size_t k = 0;
            for (int i = 0; i < 3; ++i) {
                if (i == chart) {
                    coords[static_cast<std::size_t>(i)] = Rat(1);
                } else {
                    coords[static_cast<std::size_t>(i)] = k == 0 ? u0 : v0;
                    ++k;
                }
            }
            ProjPoint p(coords);
            bool seen = std::any_of(found.begin(), found.end(),
                                    [&](const ProjPoint& q) { return q.same_point(p); });
            if (!seen) found.push_back(std::move(p));
        }
    }

    std::sort(found.begin(), found.end(), [](const ProjPoint& a, const ProjPoint& b) {
        return point_sort_key(a) < point_sort_key(b);
    });

    std::vector<SingularPoint> out;
    out.reserve(found.size());
    for (const ProjPoint& p : found) {
        // exact verification before classification
        std::map<std::string, Rat> pt;
        for (int i = 0; i < 3; ++i)
            pt[f.vars[static_cast<std::size_t>(i)]] = p[static_cast<std::size_t>(i)];
        if (!f.poly.evaluate(pt).is_zero()) throw MathError("singular candidate off the curve");
        for (const MultiPoly& g : partials)
            if (!g.evaluate(pt).is_zero()) throw MathError("singular candidate with nonzero gradient");
        SingKind kind = classify(f, p);
        out.push_back({p, kind});
    }
    return out;
}

PlaneCurve analyze_curve(const HomogPoly& f) {
    MultiPoly sqf = squarefree_part(f.poly);
    if (sqf.total_degree() != f.poly.total_degree())
        throw NotReducedCurve("curve polynomial has a repeated factor");
    PlaneCurve c;
    c.F = f;
    c.n = f.degree;
    c.singularities = singular_points(f);
    for (const SingularPoint& s : c.singularities)
        (s.kind == SingKind::Node ? c.delta : c.kappa) += 1;
    return c;
}

DualCurve dual_curve(const HomogPoly& f) {
    const VarTriple& out_vars = f.vars == x_vars() ? y_vars() : x_vars();
    const int n = f.degree;

    if (n < 1) throw InputError("dual_curve: degree must be at least 1");
    if (n == 1) {
        std::vector<Rat> coeffs(3);
        for (int i = 0; i < 3; ++i) {
            std::map<std::string, Rat> e;
            for (int j = 0; j < 3; ++j)
                e[f.vars[static_cast<std::size_t>(j)]] = Rat(i == j ? 1 : 0);
            coeffs[static_cast<std::size_t>(i)] = f.poly.evaluate(e);
        }
        DualCurve d;
        d.dual_point = ProjPoint(std::move(coeffs));
        d.nstar = 0;
        return d;
    }

    // Restrict F to the pencil line {x : w.x = 0}, parametrized by
    // B0 = (0, -w2, w1), B1 = (-w2, 0, w0); degenerate exactly on {w2 = 0}.
    MultiPoly w0 = MultiPoly::variable(out_vars[0]);
    MultiPoly w1 = MultiPoly::variable(out_vars[1]);
    MultiPoly w2 = MultiPoly::variable(out_vars[2]);
    MultiPoly s = MultiPoly::variable("s");
    MultiPoly t = MultiPoly::variable("t");
    std::map<std::string, MultiPoly> sub{
        {f.vars[0], -(t * w2)},
        {f.vars[1], -(s * w2)},
        {f.vars[2], s * w1 + t * w0}};
    MultiPoly restriction = f.poly.substitute(sub);
    MultiPoly t_raw = binary_discriminant(restriction, "s", "t");
    if (t_raw.is_zero())
        throw DualDegreeMismatch("tangency discriminant vanished identically");
    MultiPoly tangency = divide_out(std::move(t_raw), w2).first;

    MultiPoly g;
    std::optional<std::vector<SingularPoint>> sings;
    try {
        sings = singular_points(f);
    } catch (const IrrationalSingularity&) {
        // spurious factors all carry multiplicity >= 2, the dual exactly 1
        g = multiplicity_one_part(tangency);
        if (g.total_degree() < 2 || g.total_degree() > n * (n - 1))
            throw DualDegreeMismatch("dual degree out of range after factor extraction");
    }
    if (sings) {
        MultiPoly rest = tangency;
        for (const SingularPoint& sp : *sings) {
            std::vector<Rat> nc = sp.point.normalized();
            MultiPoly line;
            for (int i = 0; i < 3; ++i)
                line += MultiPoly::variable(out_vars[static_cast<std::size_t>(i)]) *
                        nc[static_cast<std::size_t>(i)];
            rest = divide_out(std::move(rest), line).first;
        }
        g = squarefree_part(rest);
        int delta = 0, kappa = 0;
        for (const SingularPoint& sp : *sings)
            (sp.kind == SingKind::Node ? delta : kappa) += 1;
        int expected = n * (n - 1) - 2 * delta - 3 * kappa;
        if (expected < 2)
            throw DualDegreeMismatch("dual degenerates to a point set (degree " +
                                     std::to_string(expected) + "); curve has line components");
        if (g.total_degree() != expected)
            throw DualDegreeMismatch("dual degree " + std::to_string(g.total_degree()) +
                                     ", expected " + std::to_string(expected));
    }

    DualCurve d;
    d.curve = make_homog(g.primitive_normalized(), out_vars);
    d.nstar = d.curve->degree;
    return d;
}

GoodnessReport is_good(const HomogPoly& f) {
    GoodnessReport r;
    std::map<std::string, Rat> p_inf{{f.vars[0], Rat(1)}, {f.vars[1], Rat(0)}, {f.vars[2], Rat(0)}};
    if (f.poly.evaluate(p_inf).is_zero())
        r.reasons.push_back("curve passes through p_inf = [1,0,0]");

    MultiPoly at_infinity = f.poly.substitute(f.vars[2], MultiPoly(Rat(0)));
    if (at_infinity.is_zero()) {
        r.reasons.push_back("line at infinity is a component of the curve");
    } else if (f.degree >= 2) {
        MultiPoly disc = binary_discriminant(at_infinity, f.vars[0], f.vars[1]);
        if (disc.is_zero())
            r.reasons.push_back("curve is tangent to the line at infinity");
    }
    r.good = r.reasons.empty();
    return r;
}

PluckerNumbers plucker_numbers(int n, int delta, int kappa) {
    PluckerNumbers p;
    p.n = n;
    p.delta = delta;
    p.kappa = kappa;
    p.nstar = n <= 1 ? 0 : n * (n - 1) - 2 * delta - 3 * kappa;
    p.genus = (n - 1) * (n - 2) / 2 - delta - kappa;
    if (p.nstar < 0 || p.genus < 0)
        throw ContradictorySingularityData("negative Plucker number from (n, delta, kappa) = (" +
                                           std::to_string(n) + ", " + std::to_string(delta) +
                                           ", " + std::to_string(kappa) + ")");
    return p;
}

PluckerNumbers plucker_numbers(const PlaneCurve& curve) {
    return plucker_numbers(curve.n, curve.delta, curve.kappa);
}

int local_intersection_multiplicity(const MultiPoly& f, const MultiPoly& g,
                                    const std::array<std::string, 2>& chart_vars,
                                    const std::array<Rat, 2>& p, std::uint64_t seed) {
    const std::string& u = chart_vars[0];
    const std::string& v = chart_vars[1];
    std::map<std::string, MultiPoly> shift{
        {u, MultiPoly::variable(u) + MultiPoly(p[0])},
        {v, MultiPoly::variable(v) + MultiPoly(p[1])}};
    MultiPoly f0 = f.substitute(shift);
    MultiPoly g0 = g.substitute(shift);
    if (f0.is_zero() || g0.is_zero())
        throw NonIsolatedIntersection("one curve vanishes identically");

    std::map<std::string, Rat> origin{{u, Rat(0)}, {v, Rat(0)}};
    if (!f0.evaluate(origin).is_zero() || !g0.evaluate(origin).is_zero()) return 0;

    Rng rng(derive_seed(seed, "shear"));
    std::vector<int> valuations;
    bool saw_zero_resultant = false;
    for (int attempt = 0; attempt < 8 && valuations.size() < 3; ++attempt) {
        Rat c(rng.range(1, 11));
        MultiPoly sheared_u = MultiPoly::variable(u) + MultiPoly::variable(v) * c;
        MultiPoly fs = f0.substitute(u, sheared_u);
        MultiPoly gs = g0.substitute(u, sheared_u);
        if (fs.degree_in(v) == 0 || gs.degree_in(v) == 0) continue;

        // leading v-coefficients must survive at u = 0
        MultiPoly lf = fs.coeffs_in(v).back();
        MultiPoly lg = gs.coeffs_in(v).back();
        if (lf.substitute(u, MultiPoly(Rat(0))).is_zero() ||
            lg.substitute(u, MultiPoly(Rat(0))).is_zero())
            continue;

        MultiPoly res = resultant(fs, gs, v);
        if (res.is_zero()) {
            saw_zero_resultant = true;
            continue;
        }
        int val = res.degree_in(u) + 1;
        for (const auto& [e, coeff] : res.terms()) {
            int d = e.empty() ? 0 : static_cast<int>(e[0]);
            val = std::min(val, d);
        }
        valuations.push_back(val);
    }
    if (valuations.empty()) {
        if (saw_zero_resultant)
            throw NonIsolatedIntersection("curves share a component through the point");
        throw MathError("no admissible shear found for local multiplicity");
    }
    return *std::min_element(valuations.begin(), valuations.end());
}

int local_intersection_multiplicity(const HomogPoly& f, const HomogPoly& g, const ProjPoint& p,
                                    std::uint64_t seed) {
    if (f.vars != g.vars) throw ChartMismatch("intersection of curves in different coordinates");
    int chart = -1;
    for (int i = 2; i >= 0; --i) {
        if (!p[static_cast<std::size_t>(i)].is_zero()) {
            chart = i;
            break;
        }
    }
    std::array<std::string, 2> uv;
    std::array<Rat, 2> loc;
    const Rat& scale = p[static_cast<std::size_t>(chart)];
    std::size_t k = 0;
    for (int i = 0; i < 3; ++i) {
        if (i == chart) continue;
        uv[k] = f.vars[static_cast<std::size_t>(i)];
        loc[k] = p[static_cast<std::size_t>(i)] / scale;
        ++k;
    }
    return local_intersection_multiplicity(dehomogenize(f, chart), dehomogenize(g, chart), uv, loc,
                                           seed);
}

}  // namespace contactlab
