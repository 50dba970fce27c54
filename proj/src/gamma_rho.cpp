#include "goldenl/gamma_rho.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <utility>

#include "goldenl/errors.hpp"

namespace golden {

namespace {

QuadraticScalar qabs(const QuadraticScalar& x) { return sign(x) < 0 ? -x : x; }

// 2x2 matrix over the quadratic field, for spot-checking the closed-form
// orbit points against an actual word product.
struct QMat {
    QuadraticScalar a, b, c, d;
    QVec2 act_e1() const { return {a, c}; }
};

QMat qmul(const QMat& l, const QMat& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
            l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

}  // namespace

std::string to_string(const QVec2& v) {
    return "(" + to_string(v.x) + ", " + to_string(v.y) + ")";
}

PsiValue psi(const QuadraticScalar& rho, long n) {
    check(!rho.is_rational(), ErrorCode::RationalRho,
          "psi requires an irrational rho (rational expansions terminate)");
    check(sign(rho) > 0, ErrorCode::NotPositive, "rho must be positive");
    check(n >= 0, ErrorCode::ConfigError, "psi index must be >= 0");

    const QuadraticScalar x = rho + QuadraticScalar(1);
    const ContinuedFraction cf = cf_expand(x, n + 2);
    const std::vector<Convergent> cs = convergents(cf, n + 1);

    PsiValue out;
    out.n = n;
    out.p_n = cs[n].p;
    out.q_n = cs[n].q;
    out.q_n1 = cs[n + 1].q;
    out.value = QuadraticScalar(out.p_n) - QuadraticScalar(out.q_n) * x;

    const int sgn = sign(out.value);
    check(sgn == (n % 2 == 0 ? -1 : +1), ErrorCode::InternalCheck,
          "Psi_n must alternate in sign starting with Psi_0 < 0");
    const QuadraticScalar a = qabs(out.value);
    check(a * QuadraticScalar(Int(out.q_n1 + out.q_n)) > QuadraticScalar(1), ErrorCode::InternalCheck,
          "lower convergent bound 1/(q_{n+1} + q_n) < |Psi_n| failed");
    check(a * QuadraticScalar(out.q_n1) < QuadraticScalar(1), ErrorCode::InternalCheck,
          "upper convergent bound |Psi_n| < 1/q_{n+1} failed");
    return out;
}

ConPair con_pair(const QuadraticScalar& rho, long n) {
    const PsiValue ps = psi(rho, n);
    const QuadraticScalar one(1);
    const QuadraticScalar& psiv = ps.value;

    ConPair out;
    out.n = n;
    out.p_n = ps.p_n;
    out.q_n = ps.q_n;
    out.q_n1 = ps.q_n1;
    out.psi_n = psiv;

    // L = sign(Psi_n) * floor(|Psi_n|^{-1}); |Psi_n| < 1 so |L| >= q_{n+1}.
    const Int lmag = qfloor(qinv(qabs(psiv)));
    out.L = sign(psiv) < 0 ? Int(-lmag) : lmag;
    check(lmag >= ps.q_n1, ErrorCode::InternalCheck, "|L| must dominate q_{n+1}");
    const QuadraticScalar lq(out.L);

    // gamma_1 = u1^L u2^{p_n + 1},  gamma_2 = u1^L u2^{q_n} u1 u2.
    const QuadraticScalar m1 = QuadraticScalar(Int(ps.p_n + 1)) * rho;
    out.g1 = {one + lq * m1, m1};
    const QuadraticScalar m2 = rho * (one + QuadraticScalar(ps.q_n) * (one + rho));
    out.g2 = {one + rho + lq * m2, m2};

    // Spot-check both points against genuine matrix products (the powers of
    // the unipotent generators have exact closed forms).
    const QMat u1l = {one, lq, QuadraticScalar(0), one};
    const QMat u2p = {one, QuadraticScalar(0), QuadraticScalar(Int(ps.p_n + 1)) * rho, one};
    check(qmul(u1l, u2p).act_e1() == out.g1, ErrorCode::InternalCheck,
          "closed-form gamma_1 e1 disagrees with the matrix product");
    const QMat u2q = {one, QuadraticScalar(0), QuadraticScalar(ps.q_n) * rho, one};
    const QMat u1 = {one, one, QuadraticScalar(0), one};
    const QMat u2 = {one, QuadraticScalar(0), rho, one};
    check(qmul(u1l, qmul(u2q, qmul(u1, u2))).act_e1() == out.g2, ErrorCode::InternalCheck,
          "closed-form gamma_2 e1 disagrees with the matrix product");

    // gamma_1 e1 - gamma_2 e1 = rho * (L Psi_n - 1, Psi_n), exactly.
    const QVec2 diff = out.g1 - out.g2;
    check(diff.x == rho * (lq * psiv - one), ErrorCode::InternalCheck,
          "difference identity failed in the first coordinate");
    check(diff.y == rho * psiv, ErrorCode::InternalCheck,
          "difference identity failed in the second coordinate");

    out.dist_sq = diff.norm_sq();
    out.norm_sq = out.g2.norm_sq();
    out.dist_bound_ok =
        out.dist_sq * QuadraticScalar(Int(ps.q_n1 * ps.q_n1)) <= QuadraticScalar(4) * rho * rho;
    const Int qq = ps.q_n * ps.q_n1;
    out.norm_bound_ok =
        QuadraticScalar(4) * out.norm_sq <= QuadraticScalar(Int(289) * qq * qq);
    return out;
}

namespace {

Int floor_div_int(const Int& a, const Int& b) {  // b > 0
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

Rat dist2(const std::pair<Rat, Rat>& u, const std::pair<Rat, Rat>& w) {
    const Rat dx = u.first - w.first;
    const Rat dy = u.second - w.second;
    return dx * dx + dy * dy;
}

// 2^e as an exact rational (e may be negative).
Rat pow2_rat(long e) {
    if (e >= 0) return Rat(Int(1) << e);
    return Rat(Int(1), Int(1) << (-e));
}

// Exact minimum squared gap over all pairs of distinct points.  A provisional
// bound B from lexicographically consecutive pairs picks an exact power-of-two
// cell width 2^k with 4^k >= B >= d_min^2, so the closest pair meets in the
// same or adjacent cells; cell indices are computed in exact arithmetic
// because the gaps can sit far below double resolution of the coordinates.
Rat min_gap_sq_exact(const std::vector<std::pair<Rat, Rat>>& pts) {
    const size_t n = pts.size();
    Rat best = dist2(pts[0], pts[1]);
    if (n <= 64) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) best = std::min(best, dist2(pts[i], pts[j]));
        return best;
    }
    for (size_t i = 0; i + 1 < n; ++i) best = std::min(best, dist2(pts[i], pts[i + 1]));
    check(best > 0, ErrorCode::InternalCheck, "distinct points at distance zero");

    long k = static_cast<long>(
        std::ceil(std::log2(std::max(rat_to_double(best), 1e-300)) / 2.0));
    while (pow2_rat(2 * k) < best) ++k;
    const Rat inv_cell = pow2_rat(-k);

    std::map<std::pair<Int, Int>, std::vector<size_t>> grid;
    std::vector<std::pair<Int, Int>> keys(n);
    for (size_t i = 0; i < n; ++i) {
        const Rat gx = pts[i].first * inv_cell;
        const Rat gy = pts[i].second * inv_cell;
        keys[i] = {floor_div_int(numerator(gx), denominator(gx)),
                   floor_div_int(numerator(gy), denominator(gy))};
        grid[keys[i]].push_back(i);
    }
    for (size_t i = 0; i < n; ++i) {
        for (int dx = -1; dx <= 1; ++dx) {
            for (int dy = -1; dy <= 1; ++dy) {
                const auto it = grid.find({keys[i].first + dx, keys[i].second + dy});
                if (it == grid.end()) continue;
                for (size_t j : it->second)
                    if (j < i) best = std::min(best, dist2(pts[i], pts[j]));
            }
        }
    }
    return best;
}

}  // namespace

ContainmentReport rational_containment(const Int& p, const Int& q, long trials, long max_len,
                                       std::uint64_t seed) {
    check(p > 0 && q > 0, ErrorCode::BadRational, "rho = p/q requires positive p and q");
    check(gcd(p, q) == 1, ErrorCode::BadRational, "rho = p/q must be in lowest terms");
    check(trials >= 1, ErrorCode::ConfigError, "need at least one trial");
    check(max_len >= 1, ErrorCode::ConfigError, "maximum word length must be >= 1");

    const Rat rho(p, q);
    ContainmentReport rep;
    rep.p = p;
    rep.q = q;
    rep.trials = trials;
    rep.max_len = max_len;
    rep.seed = seed;
    rep.min_gap_sq = 0;

    std::mt19937_64 eng(seed);
    std::set<std::pair<Rat, Rat>> pts;
    static constexpr char kLetters[4] = {'A', 'a', 'B', 'b'};
    for (long t = 0; t < trials; ++t) {
        const long len = 1 + static_cast<long>(eng() % static_cast<std::uint64_t>(max_len));
        std::string word(static_cast<size_t>(len), '?');
        for (long i = 0; i < len; ++i) word[static_cast<size_t>(i)] = kLetters[eng() % 4];
        // Apply the word to e1, rightmost letter first.
        Rat x = 1, y = 0;
        for (long i = len - 1; i >= 0; --i) {
            switch (word[static_cast<size_t>(i)]) {
                case 'A': x += y; break;
                case 'a': x -= y; break;
                case 'B': y += rho * x; break;
                default: y -= rho * x; break;
            }
        }
        if (q % denominator(x) != 0 || q % denominator(y) != 0) {
            if (rep.violations == 0) {
                rep.first_violation_word = word;
                rep.first_violation_x = x;
                rep.first_violation_y = y;
            }
            ++rep.violations;
        }
        pts.emplace(std::move(x), std::move(y));
    }
    rep.num_points = static_cast<long>(pts.size());
    rep.all_contained = rep.violations == 0;

    const std::vector<std::pair<Rat, Rat>> v(pts.begin(), pts.end());
    check(v.size() >= 2, ErrorCode::TooFew, "need two distinct points for a minimum gap");
    rep.min_gap_sq = min_gap_sq_exact(v);
    rep.min_gap_ok = rep.min_gap_sq * Rat(q * q) >= 1;
    return rep;
}

QuadraticScalar parse_rho(const std::string& spec) {
    if (spec.rfind("cf:", 0) == 0 || (!spec.empty() && spec[0] == '[')) {
        std::vector<Int> head, period;
        parse_cf_spec(spec, head, period);
        return cf_value(head, period);
    }
    return parse_quadratic(spec);
}

}  // namespace golden
