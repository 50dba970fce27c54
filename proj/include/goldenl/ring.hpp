#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "goldenl/errors.hpp"

namespace golden {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Exact element a + b*phi of Q(phi), phi = (1+sqrt(5))/2, with rational
// coefficients.  The representation is canonical (cpp_rational stores reduced
// fractions with positive denominators), so equality of values is structural
// equality of (a, b).  Multiplication closes via phi^2 = 1 + phi.
// All comparison decisions are exact; no floating point anywhere.
class GoldenScalar {
  public:
    Rat a;  // coefficient of 1
    Rat b;  // coefficient of phi

    GoldenScalar() : a(0), b(0) {}
    GoldenScalar(long v) : a(v), b(0) {}  // NOLINT(google-explicit-constructor)
    GoldenScalar(Int v) : a(std::move(v)), b(0) {}  // NOLINT
    GoldenScalar(Rat v) : a(std::move(v)), b(0) {}  // NOLINT
    GoldenScalar(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}

    static GoldenScalar phi() { return GoldenScalar(Rat(0), Rat(1)); }

    bool operator==(const GoldenScalar& o) const { return a == o.a && b == o.b; }
    bool operator!=(const GoldenScalar& o) const { return !(*this == o); }

    GoldenScalar operator+(const GoldenScalar& o) const {
        return GoldenScalar(a + o.a, b + o.b);
    }
    GoldenScalar operator-(const GoldenScalar& o) const {
        return GoldenScalar(a - o.a, b - o.b);
    }
    GoldenScalar operator-() const { return GoldenScalar(-a, -b); }
    // (a1 + b1 phi)(a2 + b2 phi) = a1 a2 + b1 b2 + (a1 b2 + a2 b1 + b1 b2) phi
    GoldenScalar operator*(const GoldenScalar& o) const {
        return GoldenScalar(a * o.a + b * o.b, a * o.b + o.a * b + b * o.b);
    }
    GoldenScalar& operator+=(const GoldenScalar& o) { return *this = *this + o; }
    GoldenScalar& operator-=(const GoldenScalar& o) { return *this = *this - o; }
    GoldenScalar& operator*=(const GoldenScalar& o) { return *this = *this * o; }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }
    // "golden integer": both coefficients are integers
    bool is_golden_integer() const {
        return denominator(a) == 1 && denominator(b) == 1;
    }
};

// Image under the field automorphism phi -> 1 - phi: (a + b) - b*phi.
GoldenScalar conj(const GoldenScalar& x);

// Field norm N(x) = x * conj(x) = a^2 + ab - b^2 (a rational; multiplicative).
Rat field_norm(const GoldenScalar& x);

// Exact sign of the real number a + b*phi in {-1, 0, +1}.
// Writes 2x = (2a+b) + b*sqrt(5) and compares (2a+b)^2 against 5 b^2 with a
// case split on the signs of 2a+b and b.
int sign(const GoldenScalar& x);

// Exact comparisons through sign().
inline bool operator<(const GoldenScalar& x, const GoldenScalar& y) { return sign(x - y) < 0; }
inline bool operator<=(const GoldenScalar& x, const GoldenScalar& y) { return sign(x - y) <= 0; }
inline bool operator>(const GoldenScalar& x, const GoldenScalar& y) { return sign(x - y) > 0; }
inline bool operator>=(const GoldenScalar& x, const GoldenScalar& y) { return sign(x - y) >= 0; }

// Exact floor, defined for all x, via the integer square root of 5 b^2
// (with the ceiling correction for negative b; 5 b^2 is never a perfect
// square for b != 0).
Int gfloor(const GoldenScalar& x);

// (floor(x), x - floor(x)) with 0 <= frac < 1.  The fractional part is only
// defined here for x >= 0; FracOfNegative otherwise.
std::pair<Int, GoldenScalar> floor_frac(const GoldenScalar& x);

// Exact division (y != 0): x * conj(y) / N(y).
GoldenScalar gdiv(const GoldenScalar& x, const GoldenScalar& y);

// Fibonacci number F_n (F_0 = 0, F_1 = 1), fast doubling.
Int fib(long n);

// Exact phi^j for any integer j:
//   j >= 0:  phi^j = F_{j-1} + F_j phi   (F_{-1} = 1)
//   j <  0:  phi^{-m} = (-1)^m F_{m+1} + (-1)^{m+1} F_m phi
GoldenScalar phi_pow(long j);

// The unique j with x = phi^j, for positive golden integers (or golden units
// with rational coefficients) of field norm +-1.  Positive units of Z[phi]
// are exactly the powers of phi.  NotAUnit / NotPositive on bad input.
long unit_exponent(const GoldenScalar& x);

// Serialization "a+b*phi" with reduced-fraction coefficients, e.g.
// "12+19*phi", "-8/3+0*phi", "5-8*phi".  parse accepts that form (also with
// an explicit "+-"), bare rationals "a", and bare phi multiples "b*phi".
std::string to_string(const GoldenScalar& x);
GoldenScalar parse_golden(const std::string& s);

// Accurate double conversion for report columns (never used for decisions).
// Goes through a 100-digit float because the coefficients of values like
// phi^{-220} cancel by ~90 decimal digits.
double to_double(const GoldenScalar& x);
double rat_to_double(const Rat& r);

}  // namespace golden
