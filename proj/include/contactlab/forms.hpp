#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "contactlab/multipoly.hpp"
#include "contactlab/rational.hpp"

namespace contactlab {

/// Exterior differential form of degree 0-3 with polynomial coefficients in
/// an affine chart of 2 or 3 variables. Components are keyed by strictly
/// increasing tuples of chart-variable indices.
class PolyForm {
public:
    using Key = std::vector<int>;

    static PolyForm zero(std::vector<std::string> chart, int degree);
    static PolyForm function(std::vector<std::string> chart, const MultiPoly& f);
    // One coefficient per chart variable, in chart order.
    static PolyForm one_form(std::vector<std::string> chart, std::vector<MultiPoly> coeffs);
    static PolyForm from_components(std::vector<std::string> chart, int degree,
                                    std::map<Key, MultiPoly> components);

    const std::vector<std::string>& chart() const { return chart_; }
    int degree() const { return degree_; }
    const std::map<Key, MultiPoly>& components() const { return comps_; }
    MultiPoly component(const Key& k) const;
    bool is_zero() const { return comps_.empty(); }

    PolyForm operator-() const;
    PolyForm& operator+=(const PolyForm& o);
    friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
    friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a += -b; }
    // Multiplication by a function (0-form coefficient).
    PolyForm scaled(const MultiPoly& f) const;

    // e.g. "2 dz2^dz3", "x dy + 1 dx"; canonical component order.
    std::string str() const;

private:
    std::vector<std::string> chart_;
    int degree_ = 0;
    std::map<Key, MultiPoly> comps_;

    void check_coeff_vars(const MultiPoly& c) const;
};

/// d: degree k -> k+1; throws DegreeOverflow on top-degree input.
PolyForm exterior_derivative(const PolyForm& f);

/// Graded-commutative wedge; throws ChartMismatch unless both forms live on
/// the same chart, DegreeOverflow when degrees sum past the chart dimension.
PolyForm wedge(const PolyForm& f, const PolyForm& g);

/// Substitution map with polynomial numerators over one common denominator:
/// target chart variable i pulls back to numerators[i] / denominator.
struct RationalMap {
    std::vector<MultiPoly> numerators;
    MultiPoly denominator;
    std::vector<std::string> source_chart;
};

/// Pullback with cleared denominators: the honest pullback equals
/// form / denominator^power.
struct PulledBackForm {
    PolyForm form;
    int power = 0;
};

PulledBackForm pullback(const PolyForm& f, const RationalMap& map);

/// Coefficient of theta ^ d(theta) on a 3-variable chart; the chart form is
/// contact exactly where this polynomial does not vanish.
MultiPoly nonintegrability_volume(const PolyForm& theta);

/// 4x4 rational antisymmetric matrix; validated on construction.
class AntisymMatrix4 {
public:
    explicit AntisymMatrix4(const std::array<std::array<Rat, 4>, 4>& entries);
    // Upper-triangle order (a01, a02, a03, a12, a13, a23).
    static AntisymMatrix4 from_upper(const std::array<Rat, 6>& u);

    const Rat& at(int i, int j) const { return m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    std::array<Rat, 6> upper() const;

private:
    std::array<std::array<Rat, 4>, 4> m_;
};

// The matrix with a01 = a23 = 1 and zeros elsewhere; its chart-0 form is
// dz1 - z3 dz2 + z2 dz3.
AntisymMatrix4 bryant_matrix();

/// Restriction of sum_{i<j} A_ij (x_i dx_j - x_j dx_i) to the chart
/// x_chart = 1, with the remaining coordinates renamed z1, z2, z3 in index
/// order.
PolyForm contact_form_from_matrix(const AntisymMatrix4& a, int chart);

}  // namespace contactlab
