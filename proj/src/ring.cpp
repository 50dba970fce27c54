#include "goldenl/ring.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <vector>

namespace golden {

namespace {

using BigFloat = boost::multiprecision::cpp_bin_float_100;

int sgn_rat(const Rat& r) {
    if (r == 0) return 0;
    return r > 0 ? 1 : -1;
}

// floor(u / w) for integers, w > 0
Int floor_div(const Int& u, const Int& w) {
    Int q = u / w;
    if (u % w != 0 && ((u < 0) != (w < 0))) --q;
    return q;
}

}  // namespace

GoldenScalar conj(const GoldenScalar& x) { return GoldenScalar(x.a + x.b, -x.b); }

Rat field_norm(const GoldenScalar& x) { return x.a * x.a + x.a * x.b - x.b * x.b; }

int sign(const GoldenScalar& x) {
    if (x.b == 0) return sgn_rat(x.a);
    // 2x = u + v*sqrt(5) with u = 2a + b, v = b
    Rat u = 2 * x.a + x.b;
    const Rat& v = x.b;
    int su = sgn_rat(u), sv = sgn_rat(v);
    if (su >= 0 && sv > 0) return 1;
    if (su <= 0 && sv < 0) return -1;
    // opposite signs: compare u^2 against 5 v^2; equality would force
    // sqrt(5) rational, impossible for v != 0
    Rat u2 = u * u, v25 = 5 * v * v;
    check(u2 != v25, "sqrt(5) comparison degenerate");
    if (su > 0) return u2 > v25 ? 1 : -1;   // sv < 0
    return u2 > v25 ? -1 : 1;               // su < 0, sv > 0
}

Int gfloor(const GoldenScalar& x) {
    // x = (A + B*sqrt(5)) / W with integers A, B and W > 0:
    // a = A1/L, b = B1/L  =>  x = (2*A1 + B1 + B1*sqrt(5)) / (2L)
    Int la = denominator(x.a), lb = denominator(x.b);
    Int l = lcm(la, lb);
    Int a1 = numerator(x.a) * (l / la);
    Int b1 = numerator(x.b) * (l / lb);
    Int A = 2 * a1 + b1, B = b1, W = 2 * l;
    // t = floor(B*sqrt(5)): isqrt(5 B^2) for B >= 0; for B < 0 the value
    // -isqrt(5 B^2) - 1 (5 B^2 is not a perfect square when B != 0)
    Int t;
    if (B >= 0) {
        t = sqrt(Int(5 * B * B));
    } else {
        t = -sqrt(Int(5 * B * B)) - 1;
    }
    // floor((A + xi)/W) = floor((A + floor(xi))/W) for integer A, W > 0
    return floor_div(A + t, W);
}

std::pair<Int, GoldenScalar> floor_frac(const GoldenScalar& x) {
    if (sign(x) < 0) raise(ErrorCode::FracOfNegative, "fractional part requested on a negative value");
    Int f = gfloor(x);
    GoldenScalar frac = x - GoldenScalar(Rat(f));
    return {f, frac};
}

GoldenScalar gdiv(const GoldenScalar& x, const GoldenScalar& y) {
    if (y.is_zero()) raise(ErrorCode::ZeroVector, "division by zero scalar");
    Rat n = field_norm(y);
    check(n != 0, "nonzero element with zero norm");
    GoldenScalar t = x * conj(y);
    return GoldenScalar(t.a / n, t.b / n);
}

Int fib(long n) {
    check(n >= 0, "fib index must be non-negative");
    // fast doubling: F(2k) = F(k)(2F(k+1) - F(k)), F(2k+1) = F(k)^2 + F(k+1)^2
    Int fk = 0, fk1 = 1;  // F(0), F(1)
    bool started = false;
    for (int bit = 63; bit >= 0; --bit) {
        if (!started && !((n >> bit) & 1)) continue;
        if (started) {
            Int f2k = fk * (2 * fk1 - fk);
            Int f2k1 = fk * fk + fk1 * fk1;
            fk = f2k;
            fk1 = f2k1;
        }
        started = true;
        if ((n >> bit) & 1) {
            Int t = fk + fk1;
            fk = fk1;
            fk1 = t;
        }
    }
    return fk;
}

GoldenScalar phi_pow(long j) {
    if (j >= 0) {
        // phi^j = F_{j-1} + F_j phi, with F_{-1} = 1
        Int fj = fib(j);
        Int fjm1 = (j == 0) ? Int(1) : fib(j - 1);
        return GoldenScalar(Rat(fjm1), Rat(fj));
    }
    long m = -j;
    Int fm = fib(m), fm1 = fib(m + 1);
    bool even = (m % 2 == 0);
    return GoldenScalar(Rat(even ? fm1 : -fm1), Rat(even ? -fm : fm));
}

long unit_exponent(const GoldenScalar& x) {
    Rat n = field_norm(x);
    if (n != 1 && n != -1) raise(ErrorCode::NotAUnit, "field norm is not +-1: " + to_string(x));
    if (sign(x) <= 0) raise(ErrorCode::NotPositive, "unit_exponent requires a positive value");
    // multiplicative scan: positive units are exactly the powers of phi
    const GoldenScalar one(1), ph = GoldenScalar::phi();
    const GoldenScalar phinv = conj(ph) * GoldenScalar(-1);  // phi^{-1} = phi - 1
    GoldenScalar v = x;
    long j = 0;
    const long kMax = 1000000;
    while (sign(v - one) > 0) {
        v = v * phinv;
        check(++j <= kMax, "unit exponent scan diverged");
    }
    while (sign(v - one) < 0) {
        v = v * ph;
        check(--j >= -kMax, "unit exponent scan diverged");
    }
    check(v == one, "norm +-1 positive value is not a phi power");
    return j;
}

namespace {

std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// parse "num" or "num/den" starting at position i; advances i
Rat parse_rat(const std::string& s, size_t& i) {
    size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t dstart = i;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == dstart) raise(ErrorCode::ParseError, "expected number in '" + s + "' at position " + std::to_string(start));
    Int num(s.substr(start, i - start));
    Int den = 1;
    if (i < s.size() && s[i] == '/') {
        ++i;
        size_t nstart = i;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == nstart) raise(ErrorCode::ParseError, "expected denominator in '" + s + "'");
        den = Int(s.substr(nstart, i - nstart));
        if (den == 0) raise(ErrorCode::ParseError, "zero denominator in '" + s + "'");
    }
    return Rat(num, den);
}

}  // namespace

std::string to_string(const GoldenScalar& x) {
    std::string s = rat_str(x.a);
    if (x.b >= 0) {
        s += "+" + rat_str(x.b);
    } else {
        s += "-" + rat_str(-x.b);
    }
    return s + "*phi";
}

GoldenScalar parse_golden(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) raise(ErrorCode::ParseError, "empty scalar");
    size_t i = 0;
    // leading term: rational, possibly followed by *phi
    Rat first = parse_rat(t, i);
    if (i == t.size()) return GoldenScalar(first);  // bare rational
    if (t.compare(i, 4, "*phi") == 0 && i + 4 == t.size()) {
        return GoldenScalar(Rat(0), first);  // bare "b*phi"
    }
    // expect +-/- then second rational then *phi
    if (t[i] != '+' && t[i] != '-') raise(ErrorCode::ParseError, "expected '+' or '-' in '" + s + "'");
    bool neg = (t[i] == '-');
    ++i;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) {  // tolerate "+-"
        if (t[i] == '-') neg = !neg;
        ++i;
    }
    size_t before = i;
    Rat second = parse_rat(t, i);
    (void)before;
    if (neg) second = -second;
    if (t.compare(i, 4, "*phi") != 0 || i + 4 != t.size())
        raise(ErrorCode::ParseError, "expected '*phi' suffix in '" + s + "'");
    return GoldenScalar(first, second);
}

double rat_to_double(const Rat& r) {
    BigFloat v = BigFloat(numerator(r)) / BigFloat(denominator(r));
    return v.convert_to<double>();
}

double to_double(const GoldenScalar& x) {
    static const BigFloat kPhi = (1 + sqrt(BigFloat(5))) / 2;
    BigFloat av = BigFloat(numerator(x.a)) / BigFloat(denominator(x.a));
    BigFloat bv = BigFloat(numerator(x.b)) / BigFloat(denominator(x.b));
    return (av + bv * kPhi).convert_to<double>();
}

}  // namespace golden
