#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "contactlab/rational.hpp"

namespace contactlab {

using Exponents = std::vector<unsigned>;

// Graded-lexicographic, descending: higher total degree first, ties broken by
// the lexicographically larger exponent vector. Canonical term order for
// serialization and equality.
struct GradedLexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Variables are kept sorted by name and pruned to the support: two
/// polynomials that are mathematically equal compare equal regardless of how
/// they were built. No zero coefficients are ever stored.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rat, GradedLexDesc>;

    MultiPoly() = default;  // zero polynomial
    explicit MultiPoly(const Rat& c);
    explicit MultiPoly(long c) : MultiPoly(Rat(c)) {}

    static MultiPoly variable(const std::string& name);
    static MultiPoly constant(const Rat& c) { return MultiPoly(c); }
    // vars need not be sorted; exponent vectors are permuted to match.
    static MultiPoly from_terms(std::vector<std::string> vars,
                                std::vector<std::pair<Exponents, Rat>> terms);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    // Requires is_constant().
    Rat constant_value() const;

    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(const std::string& var) const;
    bool is_homogeneous() const;  // zero counts as homogeneous

    bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly operator*(const Rat& c) const;
    MultiPoly pow(unsigned e) const;

    MultiPoly derivative(const std::string& var) const;

    // Substitutes repl[name] for each listed variable (simultaneously);
    // unlisted variables stay.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& repl) const;
    MultiPoly substitute(const std::string& var, const MultiPoly& value) const;
    Rat evaluate(const std::map<std::string, Rat>& point) const;

    // Univariate view: coefficients by ascending power of var, as polynomials
    // in the remaining variables. Zero polynomial yields {}.
    std::vector<MultiPoly> coeffs_in(const std::string& var) const;
    static MultiPoly from_coeffs_in(const std::string& var, const std::vector<MultiPoly>& coeffs);

    // Leading term in graded-lex order.
    const Rat& leading_coeff() const;
    // gcd of coefficient numerators over lcm of denominators, nonnegative.
    Rat content() const;
    // this / content, sign fixed so the leading coefficient is positive.
    MultiPoly primitive_normalized() const;

    // Canonical text form, graded-lex descending, e.g. "x0^2 + x1^2 - x2^2".
    std::string str() const;

    // Extends both polynomials to the union of their variable lists without
    // pruning, so exponent vectors become directly comparable.
    static void align_vars(MultiPoly& a, MultiPoly& b) { align(a, b); }

private:
    void prune_vars();
    static void align(MultiPoly& a, MultiPoly& b);

    std::vector<std::string> vars_;  // sorted, unique, all appearing in some term
    TermMap terms_;                  // keys of length vars_.size(), values nonzero
};

inline MultiPoly operator*(const Rat& c, const MultiPoly& p) { return p * c; }

// True iff a and b are proportional by a nonzero rational scalar.
bool proportional(const MultiPoly& a, const MultiPoly& b);

}  // namespace contactlab
