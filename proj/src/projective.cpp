#include "contactlab/projective.hpp"

#include <algorithm>
#include <sstream>

#include "contactlab/errors.hpp"
#include "contactlab/seeding.hpp"

namespace contactlab {

namespace {

std::vector<Rat> normalize_coords(const std::vector<Rat>& c) {
    // clear denominators, divide by integer content, fix leading sign
    mpz_class den_lcm = 1;
    for (const Rat& r : c) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.den().get_mpz_t());
    std::vector<mpz_class> ints;
    ints.reserve(c.size());
    for (const Rat& r : c) ints.push_back(r.num() * (den_lcm / r.den()));
    mpz_class g = 0;
    for (const mpz_class& z : ints) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    int lead_sign = 1;
    for (const mpz_class& z : ints) {
        if (z != 0) {
            lead_sign = sgn(z);
            break;
        }
    }
    std::vector<Rat> out;
    out.reserve(c.size());
    for (const mpz_class& z : ints) out.emplace_back(Rat(mpz_class(z / g * lead_sign)));
    return out;
}

std::string bracketed(const std::vector<Rat>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].str();
    }
    os << "]";
    return os.str();
}

}  // namespace

ProjPoint::ProjPoint(std::vector<Rat> coords) : c_(std::move(coords)) {
    if (c_.size() != 3 && c_.size() != 4)
        throw InputError("projective point must have 3 or 4 coordinates");
    if (std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r.is_zero(); }))
        throw InputError("projective point must be nonzero");
}

ProjPoint ProjPoint::of(std::initializer_list<long> coords) {
    std::vector<Rat> v;
    v.reserve(coords.size());
    for (long c : coords) v.emplace_back(c);
    return ProjPoint(std::move(v));
}

bool ProjPoint::same_point(const ProjPoint& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = i + 1; j < c_.size(); ++j)
            if (c_[i] * o.c_[j] != c_[j] * o.c_[i]) return false;
    return true;
}

std::vector<Rat> ProjPoint::normalized() const { return normalize_coords(c_); }

std::string ProjPoint::str() const { return bracketed(normalized()); }

ProjPoint ProjPoint::parse(const std::string& text) {
    std::size_t lb = text.find('[');
    std::size_t rb = text.rfind(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        throw ParseError("expected '[a, b, c]'", 1);
    std::string inner = text.substr(lb + 1, rb - lb - 1);
    std::vector<Rat> coords;
    std::size_t pos = 0;
    while (pos <= inner.size()) {
        std::size_t comma = inner.find(',', pos);
        std::string item = inner.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
        if (item.find_first_not_of(" \t") != std::string::npos)
            coords.push_back(Rat::from_string(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return ProjPoint(std::move(coords));
}

Line3 make_line(const ProjPoint& a, const ProjPoint& b) {
    if (a.dim() != 4 || b.dim() != 4) throw DegenerateLine("line spans must lie in CP^3");
    if (a.same_point(b)) throw DegenerateLine("spanning points are projectively equal");
    return Line3{a, b};
}

PluckerPoint plucker_coords(const Line3& line) {
    const auto& a = line.a.coords();
    const auto& b = line.b.coords();
    std::array<Rat, 6> p;
    std::size_t k = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) p[k++] = a[i] * b[j] - a[j] * b[i];
    if (std::all_of(p.begin(), p.end(), [](const Rat& r) { return r.is_zero(); }))
        throw DegenerateLine("spanning points are proportional");
    return PluckerPoint{std::move(p)};
}

std::string PluckerPoint::str() const {
    return bracketed(normalize_coords(std::vector<Rat>(p.begin(), p.end())));
}

Rat plucker_quadric_form(const std::array<Rat, 6>& p) {
    return p[0] * p[5] - p[1] * p[4] + p[2] * p[3];
}

bool on_plucker_quadric(const PluckerPoint& p) {
    return plucker_quadric_form(p.p).is_zero();
}

Rat Mat3::det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 Mat3::inverse() const {
    Rat d = det();
    if (d.is_zero()) throw MathError("singular matrix");
    Mat3 adj;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
            int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
            // adjugate: transposed cofactors, cyclic index trick keeps signs
            adj.m[j][i] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        }
    }
    Rat inv_d = d.inverse();
    for (auto& row : adj.m)
        for (Rat& v : row) v *= inv_d;
    return adj;
}

Mat3 Mat3::identity() {
    Mat3 e;
    for (int i = 0; i < 3; ++i) e.m[i][i] = Rat(1);
    return e;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rat s(0);
            for (int k = 0; k < 3; ++k) s += a.m[i][k] * b.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

std::array<Rat, 3> Mat3::apply(const std::array<Rat, 3>& v) const {
    std::array<Rat, 3> r;
    for (int i = 0; i < 3; ++i) {
        Rat s(0);
        for (int k = 0; k < 3; ++k) s += m[i][k] * v[k];
        r[i] = s;
    }
    return r;
}

Mat3 random_projectivity(std::uint64_t seed) {
    Rng rng(derive_seed(seed, "random_projectivity"));
    for (;;) {
        Mat3 m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.m[i][j] = Rat(rng.range(-5, 5));
        if (!m.det().is_zero()) return m;
    }
}

HomogPoly transform_curve(const HomogPoly& f, const Mat3& m) {
    Mat3 inv = m.inverse();
    std::map<std::string, MultiPoly> repl;
    for (int i = 0; i < 3; ++i) {
        MultiPoly row;
        for (int j = 0; j < 3; ++j)
            row += MultiPoly::variable(f.vars[static_cast<std::size_t>(j)]) * inv.m[i][j];
        repl[f.vars[static_cast<std::size_t>(i)]] = row;
    }
    return make_homog(f.poly.substitute(repl), f.vars);
}

ProjPoint apply_projectivity(const Mat3& m, const ProjPoint& p) {
    if (p.dim() != 3) throw InputError("projectivity expects a CP^2 point");
    std::array<Rat, 3> v{p[0], p[1], p[2]};
    std::array<Rat, 3> w = m.apply(v);
    return ProjPoint(std::vector<Rat>(w.begin(), w.end()));
}

}  // namespace contactlab
