#include "contactlab/exactpoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "contactlab/errors.hpp"

namespace contactlab {

namespace {

// Quotient helper used by Bareiss; division by a constant or by an earlier
// pivot is always exact there.
MultiPoly exact_or_throw(const MultiPoly& num, const MultiPoly& den) {
    if (num.is_zero()) return MultiPoly();
    return exact_divide(num, den);
}

// Coefficient vector of a binary form in (s, t) at formal degree d:
// out[i] multiplies s^(d-i) * t^i.
std::vector<MultiPoly> binary_coeff_vector(const MultiPoly& form, const std::string& s,
                                           const std::string& t, int d) {
    std::vector<MultiPoly> out(static_cast<std::size_t>(d) + 1);
    std::vector<MultiPoly> cs = form.coeffs_in(s);
    for (std::size_t j = 0; j < cs.size(); ++j) {
        if (cs[j].is_zero()) continue;
        std::vector<MultiPoly> ct = cs[j].coeffs_in(t);
        for (std::size_t k = 0; k < ct.size(); ++k) {
            if (ct[k].is_zero()) continue;
            if (static_cast<int>(j + k) != d)
                throw InputError("binary_coeff_vector: form not homogeneous in (s,t)");
            out[k] += ct[k];
        }
    }
    return out;
}

// Sylvester matrix of two coefficient vectors given at formal degrees
// |fc|-1 and |gc|-1, coefficients descending by power.
MultiPoly sylvester_resultant(const std::vector<MultiPoly>& fc, const std::vector<MultiPoly>& gc) {
    int df = static_cast<int>(fc.size()) - 1;
    int dg = static_cast<int>(gc.size()) - 1;
    int n = df + dg;
    std::vector<std::vector<MultiPoly>> m(static_cast<std::size_t>(n),
                                          std::vector<MultiPoly>(static_cast<std::size_t>(n)));
    for (int r = 0; r < dg; ++r)
        for (int j = 0; j <= df; ++j) m[r][r + j] = fc[j];
    for (int r = 0; r < df; ++r)
        for (int j = 0; j <= dg; ++j) m[dg + r][r + j] = gc[j];
    return bareiss_determinant(std::move(m));
}

std::vector<MultiPoly> descending_coeffs(const MultiPoly& f, const std::string& var) {
    std::vector<MultiPoly> c = f.coeffs_in(var);
    std::reverse(c.begin(), c.end());
    return c;
}

}  // namespace

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("bareiss: non-square matrix");
    if (n == 0) return MultiPoly(Rat(1));

    int sign = 1;
    MultiPoly prev(Rat(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k;
            for (std::size_t r = k + 1; r < n; ++r) {
                if (!m[r][k].is_zero()) {
                    piv = r;
                    break;
                }
            }
            if (piv == k) return MultiPoly();
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = exact_or_throw(num, prev);
            }
            m[i][k] = MultiPoly();
        }
        prev = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
    int df = f.is_zero() ? 0 : f.degree_in(var);
    int dg = g.is_zero() ? 0 : g.degree_in(var);
    if (df == 0 && dg == 0)
        throw DegenerateResultant("resultant: both inputs constant in " + var);
    if (f.is_zero() || g.is_zero()) return MultiPoly();
    if (df == 0) return f.pow(static_cast<unsigned>(dg));
    if (dg == 0) return g.pow(static_cast<unsigned>(df));
    return sylvester_resultant(descending_coeffs(f, var), descending_coeffs(g, var));
}

MultiPoly binary_discriminant(const MultiPoly& form, const std::string& s, const std::string& t) {
    if (form.is_zero()) throw DegreeTooLow("binary_discriminant: zero form");
    int m = 0;
    {
        // joint (s, t)-degree; homogeneity is checked while extracting below
        std::vector<MultiPoly> cs = form.coeffs_in(s);
        for (std::size_t j = 0; j < cs.size(); ++j) {
            if (cs[j].is_zero()) continue;
            m = std::max(m, static_cast<int>(j) + cs[j].degree_in(t));
        }
    }
    if (m < 2) throw DegreeTooLow("binary_discriminant: degree " + std::to_string(m) + " < 2");
    // binary_coeff_vector is already descending in s
    std::vector<MultiPoly> ds = binary_coeff_vector(form.derivative(s), s, t, m - 1);
    std::vector<MultiPoly> dt = binary_coeff_vector(form.derivative(t), s, t, m - 1);
    return sylvester_resultant(ds, dt);
}

std::optional<MultiPoly> try_exact_divide(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw MathError("division by zero polynomial");
    if (f.is_zero()) return MultiPoly();

    MultiPoly fa = f, ga = g;
    MultiPoly::align_vars(fa, ga);
    const std::vector<std::string> vars = fa.vars();
    MultiPoly::TermMap rem = fa.terms();
    const MultiPoly::TermMap& div = ga.terms();
    const auto& lt_g = *div.begin();

    std::vector<std::pair<Exponents, Rat>> quotient;
    while (!rem.empty()) {
        const auto& lt_r = *rem.begin();
        Exponents e(lt_r.first.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (lt_r.first[i] < lt_g.first[i]) return std::nullopt;
            e[i] = lt_r.first[i] - lt_g.first[i];
        }
        Rat c = lt_r.second / lt_g.second;
        quotient.emplace_back(e, c);
        for (const auto& [eg, cg] : div) {
            Exponents ee(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) ee[i] = e[i] + eg[i];
            auto [it, inserted] = rem.emplace(std::move(ee), -(c * cg));
            if (!inserted) {
                it->second -= c * cg;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
    }
    return MultiPoly::from_terms(vars, std::move(quotient));
}

MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
    auto q = try_exact_divide(f, g);
    if (!q) throw NotDivisible("polynomial division leaves a remainder");
    return *q;
}

std::pair<MultiPoly, int> divide_out(MultiPoly f, const MultiPoly& g) {
    int count = 0;
    for (;;) {
        auto q = try_exact_divide(f, g);
        if (!q || f.is_zero()) break;
        f = std::move(*q);
        ++count;
    }
    return {f, count};
}

namespace {

MultiPoly content_in(const MultiPoly& f, const std::string& var) {
    MultiPoly c;
    for (const MultiPoly& coeff : f.coeffs_in(var)) {
        if (coeff.is_zero()) continue;
        c = poly_gcd(c, coeff);
        if (c.is_constant()) break;
    }
    return c.is_zero() ? MultiPoly(Rat(1)) : c;
}

// Pseudo-remainder of a by b in var: lc(b)^(da-db+1) * a mod b, all exact.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, const std::string& var) {
    int db = b.degree_in(var);
    std::vector<MultiPoly> bc = b.coeffs_in(var);
    const MultiPoly lcb = bc.back();
    MultiPoly r = a;
    int e = a.degree_in(var) - db + 1;
    const MultiPoly xv = MultiPoly::variable(var);
    while (!r.is_zero() && r.degree_in(var) >= db) {
        std::vector<MultiPoly> rc = r.coeffs_in(var);
        int k = static_cast<int>(rc.size()) - 1 - db;
        r = lcb * r - rc.back() * b * xv.pow(static_cast<unsigned>(k));
        --e;
    }
    for (; e > 0; --e) r = r * lcb;
    return r;
}

// Subresultant polynomial remainder sequence on primitive inputs; returns a
// gcd of a and b in var (up to content), assuming both have positive degree.
MultiPoly subresultant_gcd(MultiPoly a, MultiPoly b, const std::string& var) {
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    MultiPoly g(Rat(1)), h(Rat(1));
    for (;;) {
        int d = a.degree_in(var) - b.degree_in(var);
        MultiPoly r = pseudo_remainder(a, b, var);
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) return MultiPoly(Rat(1));
        a = b;
        b = exact_divide(r, g * h.pow(static_cast<unsigned>(d)));
        g = a.coeffs_in(var).back();
        if (d >= 1) h = d == 1 ? g : exact_divide(g.pow(static_cast<unsigned>(d)),
                                                  h.pow(static_cast<unsigned>(d - 1)));
    }
    return exact_divide(b, content_in(b, var));
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b.primitive_normalized();
    if (b.is_zero()) return a.primitive_normalized();
    if (a.is_constant() || b.is_constant()) return MultiPoly(Rat(1));

    std::vector<std::string> common;
    std::set_intersection(a.vars().begin(), a.vars().end(), b.vars().begin(), b.vars().end(),
                          std::back_inserter(common));
    if (common.empty()) return MultiPoly(Rat(1));
    const std::string& v = common.front();

    MultiPoly ca = content_in(a, v), cb = content_in(b, v);
    MultiPoly pa = exact_divide(a, ca), pb = exact_divide(b, cb);
    MultiPoly g = subresultant_gcd(pa, pb, v) * poly_gcd(ca, cb);
    return g.primitive_normalized();
}

MultiPoly squarefree_part(const MultiPoly& f) {
    if (f.is_zero()) throw MathError("squarefree_part of zero polynomial");
    if (f.is_constant()) return MultiPoly(Rat(1));
    MultiPoly g;
    for (const std::string& v : f.vars()) {
        g = poly_gcd(g, f.derivative(v));
        if (g.is_constant() && !g.is_zero()) break;
    }
    g = poly_gcd(f, g);
    return exact_divide(f, g).primitive_normalized();
}

MultiPoly multiplicity_one_part(const MultiPoly& f) {
    MultiPoly s = squarefree_part(f);
    MultiPoly repeated = exact_divide(f, s);
    return exact_divide(s, poly_gcd(s, repeated)).primitive_normalized();
}

std::vector<std::pair<MultiPoly, int>> squarefree_decomposition(const MultiPoly& f,
                                                                const std::string& var) {
    if (f.is_zero()) throw MathError("squarefree_decomposition of zero polynomial");
    for (const std::string& v : f.vars())
        if (v != var) throw std::invalid_argument("squarefree_decomposition: not univariate");

    std::vector<std::pair<MultiPoly, int>> out;
    if (f.degree_in(var) == 0) return out;

    MultiPoly fp = f.derivative(var);
    MultiPoly g = poly_gcd(f, fp);
    MultiPoly c = exact_divide(f, g);
    MultiPoly d = exact_divide(fp, g) - c.derivative(var);
    int k = 1;
    while (c.degree_in(var) > 0) {
        MultiPoly a = poly_gcd(c, d);
        if (a.degree_in(var) > 0) out.emplace_back(a, k);
        MultiPoly cn = exact_divide(c, a);
        d = exact_divide(d, a) - cn.derivative(var);
        c = std::move(cn);
        ++k;
    }
    return out;
}

std::vector<std::complex<double>> durand_kerner(std::vector<std::complex<double>> coeffs,
                                                double tol, int max_iterations) {
    while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    if (coeffs.size() < 2) return {};
    std::size_t n = coeffs.size() - 1;
    for (std::size_t i = 0; i < n; ++i) coeffs[i] /= coeffs[n];
    coeffs[n] = 1.0;

    double radius = 0.0;
    for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(coeffs[i]));
    radius = 1.0 + radius;

    std::vector<std::complex<double>> x(n);
    std::complex<double> w(0.4, 0.9);
    std::complex<double> acc(1.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        acc *= w;
        x[i] = radius * acc;
    }

    auto eval = [&coeffs, n](std::complex<double> z) {
        std::complex<double> v = coeffs[n];
        for (std::size_t i = n; i-- > 0;) v = v * z + coeffs[i];
        return v;
    };

    for (int it = 0; it < max_iterations; ++it) {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> denom(1.0, 0.0);
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                std::complex<double> diff = x[i] - x[j];
                if (std::abs(diff) < 1e-300) diff = std::complex<double>(1e-12, 1e-12);
                denom *= diff;
            }
            std::complex<double> delta = eval(x[i]) / denom;
            x[i] -= delta;
            worst = std::max(worst, std::abs(delta) / (1.0 + std::abs(x[i])));
        }
        if (worst < tol * 1e-2) return x;
    }
    throw RootFindingFailed("Durand-Kerner did not converge");
}

std::vector<ComplexRoot> complex_roots_approx(const MultiPoly& f, const std::string& var,
                                              const RootOptions& opts) {
    if (f.is_zero()) throw MathError("complex_roots_approx of zero polynomial");
    if (f.degree_in(var) < 1) throw std::invalid_argument("complex_roots_approx: degree < 1");
    if (opts.tol <= 0) throw std::invalid_argument("complex_roots_approx: tol must be positive");

    std::vector<ComplexRoot> out;
    for (const auto& [factor, mult] : squarefree_decomposition(f, var)) {
        std::vector<MultiPoly> cs = factor.coeffs_in(var);
        std::vector<std::complex<double>> dc(cs.size());
        for (std::size_t i = 0; i < cs.size(); ++i)
            dc[i] = cs[i].is_zero() ? 0.0 : cs[i].constant_value().to_double();
        for (std::complex<double> r : durand_kerner(dc, opts.tol, opts.max_iterations))
            out.push_back({r, mult});
    }

    // Merge clusters within the documented radius 10 * tol.
    double radius = 10.0 * opts.tol;
    std::vector<ComplexRoot> merged;
    for (const ComplexRoot& r : out) {
        bool absorbed = false;
        for (ComplexRoot& m : merged) {
            if (std::abs(m.value - r.value) <= radius * (1.0 + std::abs(m.value))) {
                m.value = (m.value * double(m.multiplicity) + r.value * double(r.multiplicity)) /
                          double(m.multiplicity + r.multiplicity);
                m.multiplicity += r.multiplicity;
                absorbed = true;
                break;
            }
        }
        if (!absorbed) merged.push_back(r);
    }
    std::sort(merged.begin(), merged.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return merged;
}

namespace {

// Continued-fraction reconstruction of a nearby rational with bounded
// denominator; candidates are verified exactly by the caller.
std::vector<Rat> rational_candidates(double x) {
    std::vector<Rat> out;
    double rounded = std::round(x);
    if (std::abs(rounded) < 9.0e15) out.emplace_back(Rat(static_cast<long>(rounded)));
    if (std::abs(x) > 1e9) return out;

    __int128 p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int i = 0; i < 40; ++i) {
        double fl = std::floor(v);
        if (std::abs(fl) > 1e15) break;
        __int128 a = static_cast<long long>(fl);
        __int128 p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > 1000000 || q2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        if (q1 > 0 && std::abs(x - double(static_cast<long long>(p1)) /
                                       double(static_cast<long long>(q1))) <
                          1e-11 * (1.0 + std::abs(x))) {
            out.emplace_back(Rat(static_cast<long>(p1), static_cast<long>(q1)));
            break;
        }
        double frac = v - fl;
        if (frac < 1e-14) break;
        v = 1.0 / frac;
    }
    return out;
}

}  // namespace

std::vector<std::pair<Rat, int>> rational_roots(const MultiPoly& f, const std::string& var) {
    if (f.is_zero()) throw MathError("rational_roots of zero polynomial");
    std::vector<std::pair<Rat, int>> out;
    if (f.degree_in(var) == 0) return out;

    for (const auto& [factor, mult] : squarefree_decomposition(f, var)) {
        std::set<std::string> seen;
        std::vector<MultiPoly> cs = factor.coeffs_in(var);
        std::vector<std::complex<double>> dc(cs.size());
        for (std::size_t i = 0; i < cs.size(); ++i)
            dc[i] = cs[i].is_zero() ? 0.0 : cs[i].constant_value().to_double();

        auto consider = [&](const Rat& cand) {
            if (seen.count(cand.str())) return;
            std::map<std::string, Rat> point{{var, cand}};
            if (factor.evaluate(point).is_zero()) {
                seen.insert(cand.str());
                out.emplace_back(cand, mult);
            }
        };
        consider(Rat(0));
        for (std::complex<double> r : durand_kerner(dc, 1e-12, 4000)) {
            if (std::abs(r.imag()) > 1e-7 * (1.0 + std::abs(r))) continue;
            for (const Rat& cand : rational_candidates(r.real())) consider(cand);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace contactlab
