#pragma once

#include <string>

#include "goldenl/ring.hpp"

namespace golden {

// Exact element (p + q*sqrt(d))/r of a real quadratic field (or of Q), with
// big-integer p, q, r.  Canonical form: gcd(p, q, r) = 1, r > 0, d
// square-free (square factors are extracted on construction), and d = 0
// exactly when the value is rational (q = 0).  Values of different
// irrational fields never mix: operations raise MixedField.
// All sign/floor/compare decisions are exact.
class QuadraticScalar {
  public:
    Int p{0}, q{0}, r{1};
    long long d = 0;

    QuadraticScalar() = default;
    QuadraticScalar(long v) : p(v) {}  // NOLINT(google-explicit-constructor)
    QuadraticScalar(Int v) : p(std::move(v)) {}  // NOLINT
    QuadraticScalar(const Rat& v) : p(numerator(v)), r(denominator(v)) {}  // NOLINT
    // Canonicalizing constructor; d_ >= 0, r_ != 0.
    QuadraticScalar(Int p_, Int q_, long long d_, Int r_);

    static QuadraticScalar sqrt_of(long long d);

    bool is_rational() const { return q == 0; }
    bool is_zero() const { return p == 0 && q == 0; }
    Rat as_rational() const;  // MixedField when irrational

    bool operator==(const QuadraticScalar& o) const {
        return p == o.p && q == o.q && d == o.d && r == o.r;
    }
    bool operator!=(const QuadraticScalar& o) const { return !(*this == o); }

    QuadraticScalar operator+(const QuadraticScalar& o) const;
    QuadraticScalar operator-(const QuadraticScalar& o) const;
    QuadraticScalar operator*(const QuadraticScalar& o) const;
    QuadraticScalar operator/(const QuadraticScalar& o) const;
    QuadraticScalar operator-() const;
    QuadraticScalar& operator+=(const QuadraticScalar& o) { return *this = *this + o; }
    QuadraticScalar& operator-=(const QuadraticScalar& o) { return *this = *this - o; }
    QuadraticScalar& operator*=(const QuadraticScalar& o) { return *this = *this * o; }
};

// Galois conjugate sqrt(d) -> -sqrt(d).
QuadraticScalar conj(const QuadraticScalar& x);

// x * conj(x) = (p^2 - q^2 d) / r^2, rational and multiplicative.
Rat qnorm(const QuadraticScalar& x);

// Exact sign in {-1, 0, +1}: compares p^2 against q^2 d by case split on
// the signs of p and q (p + q*sqrt(d) = 0 is impossible for q != 0 since d
// is square-free and > 1).
int sign(const QuadraticScalar& x);

inline bool operator<(const QuadraticScalar& x, const QuadraticScalar& y) {
    return sign(x - y) < 0;
}
inline bool operator<=(const QuadraticScalar& x, const QuadraticScalar& y) {
    return sign(x - y) <= 0;
}
inline bool operator>(const QuadraticScalar& x, const QuadraticScalar& y) {
    return sign(x - y) > 0;
}
inline bool operator>=(const QuadraticScalar& x, const QuadraticScalar& y) {
    return sign(x - y) >= 0;
}

// Exact floor via the integer square root of q^2 d.
Int qfloor(const QuadraticScalar& x);

// 1/x; InternalCheck on zero.
QuadraticScalar qinv(const QuadraticScalar& x);

// "(p+q*sqrt(d))/r" for irrational values (q folded into a +/- sign),
// "p/r" or "p" for rationals.  parse accepts those forms.
std::string to_string(const QuadraticScalar& x);
QuadraticScalar parse_quadratic(const std::string& s);

// Accurate double for report columns only (100-digit intermediate; the
// convergent errors cancel ~18 digits at n = 15).
double to_double(const QuadraticScalar& x);

}  // namespace golden
