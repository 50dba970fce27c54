#include "goldenl/contfrac.hpp"

#include <cctype>
#include <map>
#include <tuple>

namespace golden {

Int ContinuedFraction::quotient(size_t i) const {
    if (i < head.size()) return head[i];
    if (!period.empty()) return period[(i - head.size()) % period.size()];
    raise(ErrorCode::IndexOutOfRange,
          "continued fraction has only " + std::to_string(head.size()) + " quotients" +
              (terminated ? " (value is rational)" : "; expand more terms"));
}

std::string ContinuedFraction::str() const {
    std::string s = "[";
    for (size_t i = 0; i < head.size(); ++i) {
        if (i == 1) s += "; ";
        else if (i > 1) s += ", ";
        s += head[i].str();
    }
    if (!period.empty()) {
        s += head.size() <= 1 ? (head.empty() ? "" : "; ") : ", ";
        s += "(";
        for (size_t i = 0; i < period.size(); ++i) {
            if (i) s += ", ";
            s += period[i].str();
        }
        s += ")";
    }
    return s + "]";
}

ContinuedFraction cf_expand(const QuadraticScalar& x0, long n_terms) {
    if (!(sign(x0 - QuadraticScalar(1)) > 0))
        raise(ErrorCode::NonPositive, "cf_expand requires x > 1, got " + to_string(x0));
    if (n_terms < 1) raise(ErrorCode::ConfigError, "cf_expand needs n_terms >= 1");

    ContinuedFraction cf;
    // complete quotient -> index of the partial quotient it produces
    std::map<std::tuple<Int, Int, long long, Int>, size_t> states;
    QuadraticScalar x = x0;
    for (long i = 0; i < n_terms; ++i) {
        if (!x.is_rational()) {
            auto key = std::make_tuple(x.p, x.q, x.d, x.r);
            auto [it, fresh] = states.emplace(key, cf.head.size());
            if (!fresh) {
                cf.period.assign(cf.head.begin() + static_cast<long>(it->second),
                                 cf.head.end());
                cf.head.resize(it->second);
                return cf;
            }
        }
        Int a = qfloor(x);
        cf.head.push_back(a);
        QuadraticScalar rem = x - QuadraticScalar(a);
        if (rem.is_zero()) {
            cf.terminated = true;
            return cf;
        }
        x = qinv(rem);
    }
    return cf;
}

std::vector<Convergent> convergents(const ContinuedFraction& cf, long n_max) {
    if (n_max < 0) raise(ErrorCode::IndexOutOfRange, "convergent index must be >= 0");
    std::vector<Convergent> out;
    Int p_prev(1), q_prev(0);  // (p_{-1}, q_{-1})
    Int p_prev2(0), q_prev2(1);
    for (long n = 0; n <= n_max; ++n) {
        Int a = cf.quotient(static_cast<size_t>(n));
        check(a >= 1, "partial quotients must be >= 1");
        Int p = a * p_prev + p_prev2;
        Int q = a * q_prev + q_prev2;
        Int det = p * q_prev - p_prev * q;
        check(det == (n % 2 == 0 ? -1 : 1), "convergent determinant identity");
        out.push_back({n, p, q});
        p_prev2 = p_prev;
        q_prev2 = q_prev;
        p_prev = p;
        q_prev = q;
    }
    return out;
}

Convergent convergent(const ContinuedFraction& cf, long n) {
    return convergents(cf, n).back();
}

QuadraticScalar cf_value(const std::vector<Int>& head, const std::vector<Int>& period) {
    if (head.empty() && period.empty())
        raise(ErrorCode::ConfigError, "empty continued fraction");
    for (const Int& a : head)
        if (a < 1) raise(ErrorCode::ConfigError, "partial quotients must be >= 1");
    for (const Int& a : period)
        if (a < 1) raise(ErrorCode::ConfigError, "partial quotients must be >= 1");

    QuadraticScalar v;
    if (period.empty()) {
        // finite = rational, by back-substitution
        Rat t(head.back());
        for (size_t i = head.size() - 1; i-- > 0;) t = Rat(head[i]) + Rat(1) / t;
        v = QuadraticScalar(t);
        return v;
    }
    // Mobius matrix of one period block: prod [[a,1],[1,0]]
    Int A(1), B(0), C(0), D(1);
    for (const Int& a : period) {
        Int na = A * a + B, nc = C * a + D;
        B = A;
        D = C;
        A = na;
        C = nc;
    }
    // fixed point of t = (A t + B)/(C t + D), the purely periodic value:
    // C t^2 + (D - A) t - B = 0, positive root
    check(C > 0, "period Mobius map must have C > 0");
    Int disc = (A - D) * (A - D) + 4 * B * C;
    if (disc > Int(1000000LL) * 1000000LL)
        raise(ErrorCode::ConfigError,
              "period discriminant too large for exact square-free extraction");
    QuadraticScalar t(A - D, Int(1), disc.convert_to<long long>(), 2 * C);
    check(sign(t - QuadraticScalar(1)) > 0, "purely periodic value must exceed 1");
    check(!t.is_rational(), "periodic continued fraction must be irrational");
    v = t;
    for (size_t i = head.size(); i-- > 0;) v = QuadraticScalar(head[i]) + qinv(v);
    return v;
}

namespace {

bool parse_uint(const std::string& s, size_t& i, Int& out) {
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) return false;
    out = Int(s.substr(start, i - start));
    return true;
}

}  // namespace

void parse_cf_spec(const std::string& raw, std::vector<Int>& head, std::vector<Int>& period) {
    head.clear();
    period.clear();
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    size_t i = 0;
    if (s.compare(0, 3, "cf:") == 0) i = 3;
    auto fail = [&](const std::string& why) {
        raise(ErrorCode::ParseError, "bad continued fraction \"" + raw + "\": " + why);
    };
    if (i >= s.size() || s[i] != '[') fail("expected '['");
    ++i;
    Int a;
    if (!parse_uint(s, i, a)) fail("expected a0");
    head.push_back(a);
    if (i < s.size() && s[i] == ';') {
        ++i;
        bool in_period = false, period_closed = false;
        while (true) {
            if (period_closed) fail("quotients after the periodic tail");
            if (i < s.size() && s[i] == '(') {
                if (in_period) fail("nested '('");
                in_period = true;
                ++i;
            }
            if (!parse_uint(s, i, a)) fail("expected a quotient");
            (in_period ? period : head).push_back(a);
            if (in_period && i < s.size() && s[i] == ')') {
                period_closed = true;
                ++i;
            }
            if (i < s.size() && s[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
        if (in_period && !period_closed) fail("unclosed '('");
    }
    if (i >= s.size() || s[i] != ']') fail("expected ']'");
    ++i;
    if (i != s.size()) fail("trailing input");
}

}  // namespace golden
