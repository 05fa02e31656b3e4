#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "contactlab/homog.hpp"
#include "contactlab/rational.hpp"

namespace contactlab {

/// Point of CP^2 or CP^3: nonzero rational coordinate vector, equality up to
/// a nonzero scalar.
class ProjPoint {
public:
    explicit ProjPoint(std::vector<Rat> coords);
    static ProjPoint of(std::initializer_list<long> coords);

    const std::vector<Rat>& coords() const { return c_; }
    std::size_t dim() const { return c_.size(); }  // vector length, 3 or 4
    const Rat& operator[](std::size_t i) const { return c_[i]; }

    // Projective equality by cross-multiplication of components.
    bool same_point(const ProjPoint& o) const;

    // Coordinates scaled to coprime integers with the first nonzero entry
    // positive; used for deterministic ordering and serialization.
    std::vector<Rat> normalized() const;
    std::string str() const;  // "[a, b, c]"

    static ProjPoint parse(const std::string& text);

private:
    std::vector<Rat> c_;
};

/// Line in CP^3 spanned by two projectively distinct points.
struct Line3 {
    ProjPoint a;
    ProjPoint b;
};

// Throws DegenerateLine when the spanning points coincide or are not in CP^3.
Line3 make_line(const ProjPoint& a, const ProjPoint& b);

/// Plucker 6-vector (p01, p02, p03, p12, p13, p23), nonzero, up to scalar.
struct PluckerPoint {
    std::array<Rat, 6> p;
    std::string str() const;
};

PluckerPoint plucker_coords(const Line3& line);

// p01*p23 - p02*p13 + p03*p12.
Rat plucker_quadric_form(const std::array<Rat, 6>& p);
bool on_plucker_quadric(const PluckerPoint& p);

/// 3x3 rational matrix; projectivities of CP^2.
struct Mat3 {
    std::array<std::array<Rat, 3>, 3> m;

    Rat det() const;
    Mat3 inverse() const;
    static Mat3 identity();
    friend Mat3 operator*(const Mat3& a, const Mat3& b);
    std::array<Rat, 3> apply(const std::array<Rat, 3>& v) const;
};

// Deterministic invertible matrix with entries in {-5,...,5}; resampled on a
// fixed derived stream until the determinant is nonzero.
Mat3 random_projectivity(std::uint64_t seed);

// Curve transport F -> F o M^{-1}; preserves degree, moves points by M.
HomogPoly transform_curve(const HomogPoly& f, const Mat3& m);

ProjPoint apply_projectivity(const Mat3& m, const ProjPoint& p);

}  // namespace contactlab
