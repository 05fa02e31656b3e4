#include "contactlab/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "contactlab/errors.hpp"

namespace contactlab {

Rat::Rat(long n, long d) : q_(n, d) {
    if (d == 0) throw MathError("rational with zero denominator");
    q_.canonicalize();
}

Rat Rat::from_string(const std::string& s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s) {
        if (c != ' ' && c != '\t') t.push_back(c);
    }
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw ParseError("invalid rational literal '" + s + "'", 1);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", 1);
    q.canonicalize();
    return Rat(std::move(q));
}

Rat Rat::inverse() const {
    if (is_zero()) throw MathError("inverse of zero");
    return Rat(mpq_class(1) / q_);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw MathError("division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rat::str() const {
    return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

Rat rat_content_gcd(const Rat& a, const Rat& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class num, den;
    mpz_gcd(num.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    return Rat(mpq_class(num, den));
}

}  // namespace contactlab
