#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "contactlab/multipoly.hpp"

namespace contactlab {

// Determinant by fraction-free (Bareiss) elimination with row pivoting.
// Exact over the polynomial ring; every division performed is exact.
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m);

/// Resultant of f and g viewed as univariate in var, coefficients in the
/// polynomial ring over the remaining variables. Sylvester determinant,
/// computed fraction-free. Zero iff f and g share a factor of positive
/// degree in var. Throws DegenerateResultant when both inputs are constant
/// in var.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var);

/// Discriminant of a binary form in (s, t) of degree m >= 2, normalized as
/// Res(df/ds, df/dt) on formal degrees m-1, m-1 with no leading-coefficient
/// division. For a*s^2 + b*s*t + c*t^2 this evaluates to 4ac - b^2, i.e. the
/// classical b^2 - 4ac times the fixed constant -1. Only the vanishing locus
/// matters downstream. Throws DegreeTooLow for m < 2.
MultiPoly binary_discriminant(const MultiPoly& form, const std::string& s, const std::string& t);

/// Exact quotient f / g; throws NotDivisible when g does not divide f.
MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g);
std::optional<MultiPoly> try_exact_divide(const MultiPoly& f, const MultiPoly& g);

// Divides g out of f as often as possible; returns quotient and multiplicity.
std::pair<MultiPoly, int> divide_out(MultiPoly f, const MultiPoly& g);

/// gcd in Q[x1..xk], primitive with positive leading coefficient; returns 1
/// for coprime inputs and for two constants. Subresultant PRS.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

/// Product of the distinct irreducible factors of f, via gcd of f with its
/// partial derivatives. Result is primitive with positive leading
/// coefficient.
MultiPoly squarefree_part(const MultiPoly& f);

// Product of the irreducible factors appearing in f with multiplicity
// exactly one: sqf(f) / gcd(sqf(f), f / sqf(f)).
MultiPoly multiplicity_one_part(const MultiPoly& f);

// Yun squarefree decomposition of a univariate polynomial: list of
// (factor, multiplicity) with distinct squarefree factors.
std::vector<std::pair<MultiPoly, int>> squarefree_decomposition(const MultiPoly& f,
                                                                const std::string& var);

struct ComplexRoot {
    std::complex<double> value;
    int multiplicity;
};

struct RootOptions {
    double tol = 1e-8;
    // Cluster radius for multiplicity merging is 10 * tol.
    int max_iterations = 2000;
};

/// All complex roots of a univariate polynomial with rational coefficients,
/// found by simultaneous (Durand-Kerner) iteration on each squarefree factor.
/// Multiplicities come from the exact squarefree decomposition; roots closer
/// than 10 * tol are merged. Throws RootFindingFailed past the iteration cap.
std::vector<ComplexRoot> complex_roots_approx(const MultiPoly& f, const std::string& var,
                                              const RootOptions& opts = {});

// Durand-Kerner on an arbitrary complex coefficient vector (ascending
// powers); used by the root finder and by the numeric singular-point filter.
std::vector<std::complex<double>> durand_kerner(std::vector<std::complex<double>> coeffs,
                                                double tol, int max_iterations);

/// Rational roots of a univariate polynomial, with multiplicities, found by
/// candidate testing over divisors of the trailing/leading coefficients.
std::vector<std::pair<Rat, int>> rational_roots(const MultiPoly& f, const std::string& var);

}  // namespace contactlab
