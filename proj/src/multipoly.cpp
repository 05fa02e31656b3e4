#include "contactlab/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "contactlab/errors.hpp"

namespace contactlab {

namespace {

unsigned total(const Exponents& e) {
    unsigned s = 0;
    for (unsigned x : e) s += x;
    return s;
}

}  // namespace

bool GradedLexDesc::operator()(const Exponents& a, const Exponents& b) const {
    unsigned ta = total(a), tb = total(b);
    if (ta != tb) return ta > tb;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(const Rat& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MultiPoly MultiPoly::variable(const std::string& name) {
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, Rat(1));
    return p;
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> vars,
                                std::vector<std::pair<Exponents, Rat>> terms) {
    std::vector<std::size_t> order(vars.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return vars[i] < vars[j]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (vars[order[i - 1]] == vars[order[i]])
            throw std::invalid_argument("duplicate variable " + vars[order[i]]);
    }

    MultiPoly p;
    p.vars_.reserve(vars.size());
    for (std::size_t i : order) p.vars_.push_back(vars[i]);
    for (auto& [e, c] : terms) {
        if (e.size() != vars.size()) throw std::invalid_argument("exponent arity mismatch");
        if (c.is_zero()) continue;
        Exponents pe(e.size());
        for (std::size_t i = 0; i < order.size(); ++i) pe[i] = e[order[i]];
        auto [it, inserted] = p.terms_.emplace(std::move(pe), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) p.terms_.erase(it);
        }
    }
    p.prune_vars();
    return p;
}

void MultiPoly::prune_vars() {
    if (vars_.empty()) return;
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) used[i] = true;
    }
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;

    std::vector<std::string> nvars;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) nvars.push_back(vars_[i]);
    TermMap nterms;
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        ne.reserve(nvars.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (used[i]) ne.push_back(e[i]);
        nterms.emplace(std::move(ne), c);
    }
    vars_ = std::move(nvars);
    terms_ = std::move(nterms);
}

void MultiPoly::align(MultiPoly& a, MultiPoly& b) {
    if (a.vars_ == b.vars_) return;
    std::vector<std::string> uni;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(uni));
    auto extend = [&uni](MultiPoly& p) {
        if (p.vars_ == uni) return;
        std::vector<std::size_t> pos(p.vars_.size());
        for (std::size_t i = 0; i < p.vars_.size(); ++i) {
            pos[i] = std::lower_bound(uni.begin(), uni.end(), p.vars_[i]) - uni.begin();
        }
        TermMap nterms;
        for (const auto& [e, c] : p.terms_) {
            Exponents ne(uni.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
            nterms.emplace(std::move(ne), c);
        }
        p.vars_ = uni;
        p.terms_ = std::move(nterms);
    };
    extend(a);
    extend(b);
}

Rat MultiPoly::constant_value() const {
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total(terms_.begin()->first));
}

int MultiPoly::degree_in(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return 0;
    std::size_t idx = it - vars_.begin();
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return static_cast<int>(d);
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = total(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total(e) != d) return false;
    return true;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    MultiPoly rhs = o;
    align(*this, rhs);
    for (auto& [e, c] : rhs.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    prune_vars();
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    return *this += -o;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly();
    MultiPoly x = a, y = b;
    MultiPoly::align(x, y);
    MultiPoly r;
    r.vars_ = x.vars_;
    for (const auto& [ea, ca] : x.terms_) {
        for (const auto& [eb, cb] : y.terms_) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            Rat c = ca * cb;
            auto [it, inserted] = r.terms_.emplace(std::move(e), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    r.prune_vars();
    return r;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    if (c.is_zero()) return MultiPoly();
    MultiPoly r = *this;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r(Rat(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return r;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return MultiPoly();
    std::size_t idx = it - vars_.begin();
    MultiPoly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        Exponents ne = e;
        ne[idx] -= 1;
        r.terms_.emplace(std::move(ne), c * Rat(static_cast<long>(e[idx])));
    }
    r.prune_vars();
    return r;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& repl) const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        MultiPoly term(c);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = repl.find(vars_[i]);
            const MultiPoly base =
                it != repl.end() ? it->second : MultiPoly::variable(vars_[i]);
            term *= base.pow(e[i]);
        }
        r += term;
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& value) const {
    return substitute(std::map<std::string, MultiPoly>{{var, value}});
}

Rat MultiPoly::evaluate(const std::map<std::string, Rat>& point) const {
    Rat r(0);
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = point.find(vars_[i]);
            if (it == point.end())
                throw std::invalid_argument("evaluate: missing value for " + vars_[i]);
            Rat p(1);
            for (unsigned k = 0; k < e[i]; ++k) p *= it->second;
            term *= p;
        }
        r += term;
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(const std::string& var) const {
    if (is_zero()) return {};
    int d = degree_in(var);
    std::vector<MultiPoly> out(static_cast<std::size_t>(d) + 1);
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) {
        out[0] = *this;
        return out;
    }
    std::size_t idx = it - vars_.begin();
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        unsigned p = ne[idx];
        ne[idx] = 0;
        MultiPoly mono;
        mono.vars_ = vars_;
        mono.terms_.emplace(std::move(ne), c);
        mono.prune_vars();
        out[p] += mono;
    }
    return out;
}

MultiPoly MultiPoly::from_coeffs_in(const std::string& var, const std::vector<MultiPoly>& coeffs) {
    MultiPoly r;
    MultiPoly v = MultiPoly::variable(var);
    for (std::size_t p = 0; p < coeffs.size(); ++p) {
        if (coeffs[p].is_zero()) continue;
        if (coeffs[p].degree_in(var) > 0)
            throw std::invalid_argument("from_coeffs_in: coefficient involves " + var);
        r += coeffs[p] * v.pow(static_cast<unsigned>(p));
    }
    return r;
}

const Rat& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading_coeff of zero polynomial");
    return terms_.begin()->second;
}

Rat MultiPoly::content() const {
    Rat g(0);
    for (const auto& [e, c] : terms_) g = rat_content_gcd(g, c);
    return g;
}

MultiPoly MultiPoly::primitive_normalized() const {
    if (is_zero()) return *this;
    Rat g = content();
    if (leading_coeff().sign() < 0) g = -g;
    return *this * g.inverse();
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_vars = total(e) > 0;
        bool coeff_shown = !a.is_one() || !has_vars;
        if (coeff_shown) os << a.str();
        bool need_star = coeff_shown;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

bool proportional(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return false;
    return a * b.leading_coeff() == b * a.leading_coeff();
}

}  // namespace contactlab
