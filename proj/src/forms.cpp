#include "contactlab/forms.hpp"

#include <algorithm>
#include <sstream>

#include "contactlab/errors.hpp"

namespace contactlab {

namespace {

int insertion_sign(const std::vector<int>& sorted_key, int idx) {
    int below = 0;
    for (int k : sorted_key)
        if (k < idx) ++below;
    return below % 2 == 0 ? 1 : -1;
}

// Sign of merging two disjoint increasing tuples by concatenation then
// sorting; 0 when they overlap.
int merge_sign(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& merged) {
    merged = a;
    int sign = 1;
    for (int idx : b) {
        if (std::find(merged.begin(), merged.end(), idx) != merged.end()) return 0;
        // count inversions caused by moving idx left into place
        int greater = 0;
        for (int k : merged)
            if (k > idx) ++greater;
        if (greater % 2 != 0) sign = -sign;
        merged.push_back(idx);
        std::sort(merged.begin(), merged.end());
    }
    return sign;
}

}  // namespace

void PolyForm::check_coeff_vars(const MultiPoly& c) const {
    for (const std::string& v : c.vars()) {
        if (std::find(chart_.begin(), chart_.end(), v) == chart_.end())
            throw ChartMismatch("coefficient variable '" + v + "' not in chart");
    }
}

PolyForm PolyForm::zero(std::vector<std::string> chart, int degree) {
    if (chart.size() != 2 && chart.size() != 3)
        throw ChartMismatch("chart must have 2 or 3 variables");
    if (degree < 0 || degree > static_cast<int>(chart.size()))
        throw DegreeOverflow("form degree out of range for chart");
    PolyForm f;
    f.chart_ = std::move(chart);
    f.degree_ = degree;
    return f;
}

PolyForm PolyForm::function(std::vector<std::string> chart, const MultiPoly& c) {
    PolyForm f = zero(std::move(chart), 0);
    f.check_coeff_vars(c);
    if (!c.is_zero()) f.comps_.emplace(Key{}, c);
    return f;
}

PolyForm PolyForm::one_form(std::vector<std::string> chart, std::vector<MultiPoly> coeffs) {
    if (coeffs.size() != chart.size())
        throw ChartMismatch("one_form: expected one coefficient per chart variable");
    PolyForm f = zero(std::move(chart), 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        f.check_coeff_vars(coeffs[i]);
        if (!coeffs[i].is_zero()) f.comps_.emplace(Key{static_cast<int>(i)}, std::move(coeffs[i]));
    }
    return f;
}

PolyForm PolyForm::from_components(std::vector<std::string> chart, int degree,
                                   std::map<Key, MultiPoly> components) {
    PolyForm f = zero(std::move(chart), degree);
    for (auto& [k, c] : components) {
        if (static_cast<int>(k.size()) != degree)
            throw DegreeOverflow("component key length does not match degree");
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (k[i] < 0 || k[i] >= static_cast<int>(f.chart_.size()))
                throw ChartMismatch("component index out of chart range");
            if (i > 0 && k[i] <= k[i - 1])
                throw ChartMismatch("component key must be strictly increasing");
        }
        f.check_coeff_vars(c);
        if (!c.is_zero()) f.comps_.emplace(k, c);
    }
    return f;
}

MultiPoly PolyForm::component(const Key& k) const {
    auto it = comps_.find(k);
    return it == comps_.end() ? MultiPoly() : it->second;
}

PolyForm PolyForm::operator-() const {
    PolyForm f = *this;
    for (auto& [k, c] : f.comps_) c = -c;
    return f;
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
    if (chart_ != o.chart_) throw ChartMismatch("form addition across charts");
    if (degree_ != o.degree_) throw DegreeOverflow("form addition across degrees");
    for (const auto& [k, c] : o.comps_) {
        auto [it, inserted] = comps_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) comps_.erase(it);
        }
    }
    return *this;
}

PolyForm PolyForm::scaled(const MultiPoly& f) const {
    PolyForm r = zero(chart_, degree_);
    r.check_coeff_vars(f);
    if (f.is_zero()) return r;
    for (const auto& [k, c] : comps_) {
        MultiPoly p = c * f;
        if (!p.is_zero()) r.comps_.emplace(k, std::move(p));
    }
    return r;
}

std::string PolyForm::str() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : comps_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str();
        bool multi = c.terms().size() > 1;
        os << (multi ? "(" + cs + ")" : cs);
        for (std::size_t i = 0; i < k.size(); ++i)
            os << (i == 0 ? " d" : "^d") << chart_[static_cast<std::size_t>(k[i])];
    }
    return os.str();
}

PolyForm exterior_derivative(const PolyForm& f) {
    if (f.degree() >= static_cast<int>(f.chart().size()))
        throw DegreeOverflow("exterior derivative of a top-degree form");
    PolyForm r = PolyForm::zero(f.chart(), f.degree() + 1);
    std::map<PolyForm::Key, MultiPoly> comps;
    for (const auto& [k, c] : f.components()) {
        for (int i = 0; i < static_cast<int>(f.chart().size()); ++i) {
            if (std::find(k.begin(), k.end(), i) != k.end()) continue;
            MultiPoly dc = c.derivative(f.chart()[static_cast<std::size_t>(i)]);
            if (dc.is_zero()) continue;
            PolyForm::Key nk = k;
            nk.insert(std::upper_bound(nk.begin(), nk.end(), i), i);
            MultiPoly signed_dc = insertion_sign(k, i) > 0 ? dc : -dc;
            auto [it, inserted] = comps.emplace(std::move(nk), signed_dc);
            if (!inserted) {
                it->second += signed_dc;
                if (it->second.is_zero()) comps.erase(it);
            }
        }
    }
    return PolyForm::from_components(f.chart(), f.degree() + 1, std::move(comps));
}

PolyForm wedge(const PolyForm& f, const PolyForm& g) {
    if (f.chart() != g.chart()) throw ChartMismatch("wedge across charts");
    int deg = f.degree() + g.degree();
    if (deg > static_cast<int>(f.chart().size()))
        throw DegreeOverflow("wedge degree exceeds chart dimension");
    std::map<PolyForm::Key, MultiPoly> comps;
    for (const auto& [ka, ca] : f.components()) {
        for (const auto& [kb, cb] : g.components()) {
            std::vector<int> merged;
            int sign = merge_sign(ka, kb, merged);
            if (sign == 0) continue;
            MultiPoly c = ca * cb;
            if (sign < 0) c = -c;
            auto [it, inserted] = comps.emplace(std::move(merged), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) comps.erase(it);
            }
        }
    }
    return PolyForm::from_components(f.chart(), deg, std::move(comps));
}

namespace {

// Q^deg(c) * c(N/Q) as a polynomial, paired with deg(c).
std::pair<MultiPoly, int> clear_substitute(const MultiPoly& c, const PolyForm& target,
                                           const RationalMap& map) {
    int dc = std::max(c.total_degree(), 0);
    MultiPoly out;
    for (const auto& [e, coeff] : c.terms()) {
        MultiPoly term(coeff);
        unsigned used = 0;
        for (std::size_t i = 0; i < c.vars().size(); ++i) {
            if (e[i] == 0) continue;
            auto pos = std::find(target.chart().begin(), target.chart().end(), c.vars()[i]);
            std::size_t idx = static_cast<std::size_t>(pos - target.chart().begin());
            term *= map.numerators[idx].pow(e[i]);
            used += e[i];
        }
        term *= map.denominator.pow(static_cast<unsigned>(dc) - used);
        out += term;
    }
    return {out, dc};
}

}  // namespace

PulledBackForm pullback(const PolyForm& f, const RationalMap& map) {
    if (map.numerators.size() != f.chart().size())
        throw ChartMismatch("pullback: one numerator required per target chart variable");
    if (map.denominator.is_zero()) throw MapUndefined("pullback: zero denominator");
    if (f.degree() > static_cast<int>(map.source_chart.size()))
        throw ChartMismatch("pullback: form degree exceeds source chart dimension");

    const int k = f.degree();
    // d(N_i/Q) has cleared numerator Q dN_i - N_i dQ over Q^2.
    std::vector<PolyForm> dw;
    dw.reserve(map.numerators.size());
    PolyForm dq = PolyForm::zero(map.source_chart, 1);
    {
        std::vector<MultiPoly> qc;
        for (const std::string& v : map.source_chart) qc.push_back(map.denominator.derivative(v));
        dq = PolyForm::one_form(map.source_chart, std::move(qc));
    }
    for (const MultiPoly& n : map.numerators) {
        std::vector<MultiPoly> nc;
        for (const std::string& v : map.source_chart) nc.push_back(n.derivative(v));
        PolyForm dn = PolyForm::one_form(map.source_chart, std::move(nc));
        dw.push_back(dn.scaled(map.denominator) + (-dq.scaled(n)));
    }

    int dmax = 0;
    for (const auto& [key, c] : f.components()) dmax = std::max(dmax, c.total_degree());
    dmax = std::max(dmax, 0);

    PolyForm acc = PolyForm::zero(map.source_chart, k);
    for (const auto& [key, c] : f.components()) {
        auto [cleared, dc] = clear_substitute(c, f, map);
        MultiPoly scale = cleared * map.denominator.pow(static_cast<unsigned>(dmax - dc));
        PolyForm piece = PolyForm::function(map.source_chart, scale);
        for (int idx : key)
            piece = wedge(piece, dw[static_cast<std::size_t>(idx)]);
        acc += piece;
    }
    return {acc, dmax + 2 * k};
}

MultiPoly nonintegrability_volume(const PolyForm& theta) {
    if (theta.chart().size() != 3)
        throw ChartMismatch("nonintegrability_volume requires a 3-variable chart");
    if (theta.degree() != 1) throw DegreeOverflow("nonintegrability_volume requires a 1-form");
    PolyForm vol = wedge(theta, exterior_derivative(theta));
    return vol.component({0, 1, 2});
}

AntisymMatrix4::AntisymMatrix4(const std::array<std::array<Rat, 4>, 4>& entries) : m_(entries) {
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (!(at(i, j) + at(j, i)).is_zero())
                throw NotAntisymmetric("matrix is not antisymmetric");
        }
    }
}

AntisymMatrix4 AntisymMatrix4::from_upper(const std::array<Rat, 6>& u) {
    std::array<std::array<Rat, 4>, 4> m{};
    std::size_t k = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = u[k];
            m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -u[k];
            ++k;
        }
    }
    return AntisymMatrix4(m);
}

std::array<Rat, 6> AntisymMatrix4::upper() const {
    std::array<Rat, 6> u;
    std::size_t k = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) u[k++] = at(i, j);
    return u;
}

AntisymMatrix4 bryant_matrix() {
    return AntisymMatrix4::from_upper({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
}

PolyForm contact_form_from_matrix(const AntisymMatrix4& a, int chart) {
    if (chart < 0 || chart > 3) throw InputError("chart index must be 0..3");
    std::vector<int> others;
    for (int i = 0; i < 4; ++i)
        if (i != chart) others.push_back(i);
    std::vector<std::string> vars = {"z1", "z2", "z3"};
    auto var_of = [&](int i) {
        for (std::size_t k = 0; k < 3; ++k)
            if (others[k] == i) return MultiPoly::variable(vars[k]);
        return MultiPoly(Rat(1));  // x_chart = 1
    };
    auto slot_of = [&](int i) {
        for (std::size_t k = 0; k < 3; ++k)
            if (others[k] == i) return static_cast<int>(k);
        return -1;  // dx_chart = 0
    };

    std::vector<MultiPoly> coeffs(3);
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            const Rat& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            if (int sj = slot_of(j); sj >= 0)
                coeffs[static_cast<std::size_t>(sj)] += var_of(i) * aij;  // A_ij x_i dx_j
            if (int si = slot_of(i); si >= 0)
                coeffs[static_cast<std::size_t>(si)] -= var_of(j) * aij;  // -A_ij x_j dx_i
        }
    }
    return PolyForm::one_form(vars, std::move(coeffs));
}

}  // namespace contactlab
