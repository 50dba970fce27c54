#include "goldenl/quadratic.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cctype>
#include <cmath>

namespace golden {

namespace {

using BigFloat = boost::multiprecision::cpp_bin_float_100;

Int floor_div(const Int& a, const Int& b) {
    Int quot = a / b, rem = a % b;
    if (rem != 0 && ((rem < 0) != (b < 0))) --quot;
    return quot;
}

// Splits n = s^2 * f with f square-free (n >= 0).  Trial division up to 10^6
// covers every input whose residual square factor would exceed 10^12, which
// construction rejects.
std::pair<long long, long long> extract_square(long long n) {
    long long s = 1, f = 1;
    for (long long div = 2; div * div <= n && div <= 1000000; ++div) {
        while (n % (div * div) == 0) {
            n /= div * div;
            s *= div;
        }
        if (n % div == 0) {
            n /= div;
            f *= div;
        }
    }
    if (n > 1000000LL * 1000000LL)
        raise(ErrorCode::ConfigError, "square-free extraction limit: d too large");
    long long root = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    for (long long c = root > 1 ? root - 1 : 1; c <= root + 1; ++c) {
        if (c * c == n) {
            s *= c;
            n = 1;
            break;
        }
    }
    return {s, f * n};
}

// Common field of two operands; MixedField when both are irrational with
// different d.
long long merge_d(const QuadraticScalar& x, const QuadraticScalar& y) {
    if (x.q == 0) return y.d;
    if (y.q == 0) return x.d;
    if (x.d != y.d)
        raise(ErrorCode::MixedField, "cannot combine sqrt(" + std::to_string(x.d) +
                                         ") with sqrt(" + std::to_string(y.d) + ")");
    return x.d;
}

}  // namespace

QuadraticScalar::QuadraticScalar(Int p_, Int q_, long long d_, Int r_)
    : p(std::move(p_)), q(std::move(q_)), r(std::move(r_)), d(d_) {
    if (r == 0) raise(ErrorCode::ConfigError, "quadratic scalar denominator is zero");
    if (d < 0) raise(ErrorCode::ConfigError, "negative radicand");
    if (q != 0 && d > 0) {
        auto [s, f] = extract_square(d);
        q *= s;
        d = f;
    }
    if (d == 1) {  // sqrt(1) collapses
        p += q;
        q = 0;
        d = 0;
    }
    if (q == 0) d = 0;
    if (d == 0) q = 0;
    if (r < 0) {
        p = -p;
        q = -q;
        r = -r;
    }
    Int g = gcd(gcd(abs(p), abs(q)), r);
    if (g > 1) {
        p /= g;
        q /= g;
        r /= g;
    }
}

QuadraticScalar QuadraticScalar::sqrt_of(long long d) {
    return QuadraticScalar(Int(0), Int(1), d, Int(1));
}

Rat QuadraticScalar::as_rational() const {
    if (q != 0) raise(ErrorCode::MixedField, "irrational value used as rational");
    return Rat(p, r);
}

QuadraticScalar QuadraticScalar::operator+(const QuadraticScalar& o) const {
    long long dd = merge_d(*this, o);
    return QuadraticScalar(p * o.r + o.p * r, q * o.r + o.q * r, dd, r * o.r);
}

QuadraticScalar QuadraticScalar::operator-(const QuadraticScalar& o) const {
    long long dd = merge_d(*this, o);
    return QuadraticScalar(p * o.r - o.p * r, q * o.r - o.q * r, dd, r * o.r);
}

QuadraticScalar QuadraticScalar::operator*(const QuadraticScalar& o) const {
    long long dd = merge_d(*this, o);
    return QuadraticScalar(p * o.p + q * o.q * dd, p * o.q + o.p * q, dd, r * o.r);
}

QuadraticScalar QuadraticScalar::operator/(const QuadraticScalar& o) const {
    return *this * qinv(o);
}

QuadraticScalar QuadraticScalar::operator-() const {
    QuadraticScalar y = *this;
    y.p = -y.p;
    y.q = -y.q;
    return y;
}

QuadraticScalar conj(const QuadraticScalar& x) {
    QuadraticScalar y = x;
    y.q = -y.q;
    return y;
}

Rat qnorm(const QuadraticScalar& x) { return Rat(x.p * x.p - x.q * x.q * x.d, x.r * x.r); }

int sign(const QuadraticScalar& x) {
    // r > 0, so only p + q*sqrt(d) matters.
    if (x.q == 0) return x.p == 0 ? 0 : (x.p > 0 ? 1 : -1);
    if (x.p >= 0 && x.q > 0) return 1;
    if (x.p <= 0 && x.q < 0) return -1;
    // opposite signs: compare p^2 with q^2 d (never equal: d is not a square)
    Int lhs = x.p * x.p, rhs = x.q * x.q * x.d;
    check(lhs != rhs, "square-free radicand cannot square to a rational");
    if (x.p > 0) return lhs > rhs ? 1 : -1;  // q < 0
    return rhs > lhs ? 1 : -1;               // p < 0, q > 0
}

Int qfloor(const QuadraticScalar& x) {
    // floor((p + xi)/r) = floor((p + floor(xi))/r) for xi = q*sqrt(d),
    // which is irrational unless q = 0.
    Int t;
    if (x.q == 0) {
        t = 0;
    } else if (x.q > 0) {
        t = sqrt(Int(x.q * x.q * x.d));
    } else {
        t = -sqrt(Int(x.q * x.q * x.d)) - 1;
    }
    return floor_div(x.p + t, x.r);
}

QuadraticScalar qinv(const QuadraticScalar& x) {
    check(!x.is_zero(), "division by zero quadratic scalar");
    // 1/x = conj(x)/N(x) = r(p - q*sqrt(d)) / (p^2 - q^2 d)
    Int den = x.p * x.p - x.q * x.q * x.d;
    return QuadraticScalar(x.r * x.p, -x.r * x.q, x.d, den);
}

std::string to_string(const QuadraticScalar& x) {
    if (x.q == 0) {
        std::string s = x.p.str();
        if (x.r != 1) s += "/" + x.r.str();
        return s;
    }
    std::string s = "(" + x.p.str();
    s += (x.q < 0 ? "-" : "+") + Int(abs(x.q)).str() + "*sqrt(" + std::to_string(x.d) + ")";
    return s + ")/" + x.r.str();
}

namespace {

bool parse_int(const std::string& s, size_t& i, Int& out) {
    size_t start = i;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) {
        i = start;
        return false;
    }
    out = Int(s.substr(digits, i - digits));
    if (neg) out = -out;
    return true;
}

void expect(const std::string& s, size_t& i, const std::string& tok) {
    if (s.compare(i, tok.size(), tok) != 0)
        raise(ErrorCode::ParseError, "expected '" + tok + "' at position " +
                                         std::to_string(i) + " in \"" + s + "\"");
    i += tok.size();
}

}  // namespace

QuadraticScalar parse_quadratic(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) raise(ErrorCode::ParseError, "empty quadratic literal");

    size_t i = 0;
    if (s[0] == '(') {
        // (p+q*sqrt(d))/r
        ++i;
        Int p, q, d, r;
        if (!parse_int(s, i, p)) raise(ErrorCode::ParseError, "bad p in \"" + raw + "\"");
        if (!parse_int(s, i, q)) raise(ErrorCode::ParseError, "bad q in \"" + raw + "\"");
        expect(s, i, "*sqrt(");
        if (!parse_int(s, i, d)) raise(ErrorCode::ParseError, "bad d in \"" + raw + "\"");
        expect(s, i, "))/");
        if (!parse_int(s, i, r)) raise(ErrorCode::ParseError, "bad r in \"" + raw + "\"");
        if (i != s.size()) raise(ErrorCode::ParseError, "trailing input in \"" + raw + "\"");
        if (d < 0 || d > 1000000LL * 1000000LL)
            raise(ErrorCode::ParseError, "radicand out of range in \"" + raw + "\"");
        return QuadraticScalar(p, q, d.convert_to<long long>(), r);
    }
    // p or p/r
    Int p, r(1);
    if (!parse_int(s, i, p)) raise(ErrorCode::ParseError, "bad rational \"" + raw + "\"");
    if (i < s.size()) {
        expect(s, i, "/");
        if (!parse_int(s, i, r)) raise(ErrorCode::ParseError, "bad denominator in \"" + raw + "\"");
        if (i != s.size()) raise(ErrorCode::ParseError, "trailing input in \"" + raw + "\"");
    }
    return QuadraticScalar(p, Int(0), 0, r);
}

double to_double(const QuadraticScalar& x) {
    BigFloat v = BigFloat(x.p.str());
    if (x.q != 0)
        v += BigFloat(x.q.str()) * sqrt(BigFloat(x.d));
    v /= BigFloat(x.r.str());
    return v.convert_to<double>();
}

}  // namespace golden
