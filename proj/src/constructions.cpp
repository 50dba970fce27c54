#include "goldenl/constructions.hpp"

#include <cmath>

namespace golden {

namespace {

const GoldenScalar kPhi = GoldenScalar::phi();

GoldenScalar gs(const Int& a, const Int& b) { return {Rat(a), Rat(b)}; }

Vec2 reflect(const Vec2& v) { return {v.x, -v.y}; }

// phi^3 * frac((k+2) phi), the proven upper bound for phi^{j_k}.
GoldenScalar frac_bound(long k) {
    auto [fl, frac] = floor_frac(GoldenScalar(Rat(0), Rat(k + 2)));
    (void)fl;
    return phi_pow(3) * frac;
}

}  // namespace

Prop1Pair prop1_pair(long n) {
    if (n < 4 || n % 2 != 0)
        raise(ErrorCode::BadParity, "prop1_pair requires even n >= 4, got " + std::to_string(n));

    Prop1Pair r;
    r.n = n;
    Int shear = fib(n - 4) + fib(n - 2);
    r.w1.append(3, shear);
    r.w1.append(0, fib(n));
    r.w1.append(2);
    r.w2.append(3, shear);
    r.w2.append(0, fib(n + 1));
    r.w2.append(1);
    r.p1 = act(word_to_matrix(r.w1), Vec2::e1());
    r.p2 = act(word_to_matrix(r.w2), Vec2::e1());
    r.diff = r.p1 - r.p2;

    // diff = (-phi^{-(n-1)}, phi^{-(n-2)} {phi^{n-3}})
    auto [fl, frac] = floor_frac(phi_pow(n - 3));
    (void)fl;
    Vec2 closed{-phi_pow(-(n - 1)), phi_pow(-(n - 2)) * frac};
    check(r.diff == closed, "prop1_pair difference must match its closed form");

    r.dist_sq = r.diff.norm_sq();
    Int f = fib(n + 1) + 1;
    r.norm_bound_witness = gs(0, f) + GoldenScalar(1) + GoldenScalar(Rat(f)) * phi_pow(n - 1);
    check(r.p2.norm_sq() <= r.norm_bound_witness * r.norm_bound_witness,
          "prop1_pair norm bound must hold");
    return r;
}

Triple triple_points(long k) {
    if (k <= 1) raise(ErrorCode::BadK, "triple_points requires k > 1, got " + std::to_string(k));
    Int K(k);

    Triple t;
    t.u1 = {kPhi, gs(K + 1, K + 2)};
    t.u2 = {gs(K * (K + 1), 2 * K * K + K - 1), gs(K, K + 1)};
    t.u3 = {gs(2 * K * (K + 1), 4 * K * K + 2 * K - 3), gs(K - 1, K)};

    // verify against the generator-word definitions
    Word w1, w2, w3;
    w1.append(3, K + 1);
    w1.append(2);
    w2.append(0, K - 1);
    w2.append(1);
    w2.append(0, K - 1);
    w2.append(2);
    w3.append(0, 2 * K + 1);
    w3.append(1);
    if (k > 2) w3.append(0, K - 2);
    w3.append(2);
    check(t.u1 == act(word_to_matrix(w1), Vec2::e1()), "u1 closed form vs word");
    check(t.u2 == act(word_to_matrix(w2), Vec2::e1()), "u2 closed form vs word");
    check(t.u3 == act(word_to_matrix(w3), Vec2::e1()), "u3 closed form vs word");

    check(t.u1 - t.u2 == t.u2 - t.u3, "triple must be equally spaced");
    return t;
}

Vec2 dk(long k) {
    if (k <= 1) raise(ErrorCode::BadK, "dk requires k > 1, got " + std::to_string(k));
    Int K(k);
    Vec2 d{gs(K * (K + 1), 2 * K * K + K - 2), kPhi * kPhi};

    // alternative form k^2 phi^3 + k phi^2 - 2 phi
    GoldenScalar alt = gs(K * K, 0) * phi_pow(3) + gs(0, K) * kPhi - GoldenScalar(Rat(2)) * kPhi;
    check(d.x == alt, "dk alternative form");
    Triple t = triple_points(k);
    check(d == reflect(t.u2 - t.u1), "dk must be the reflected difference");
    return d;
}

JkResult jk(long k) {
    GcdResult g = gcd_gamma_plus(dk(k));
    check(g.scaling == 1 && !g.neg_x && !g.neg_y && !g.swapped,
          "dk descent needs no normalization");
    Rat n = field_norm(g.l_v);
    if (!(n == 1 || n == -1))
        raise(ErrorCode::NotAUnit,
              "gcd of d_" + std::to_string(k) + " is not a unit: " + to_string(g.l_v));
    check(g.unit_exp.has_value(), "unit exponent must accompany a unit gcd");
    return {*g.unit_exp, g.word};
}

TripleReport recover_triple(long k, bool normalize) {
    TripleReport r;
    r.k = k;
    Triple t = triple_points(k);
    r.u1 = t.u1;
    r.u2 = t.u2;
    r.u3 = t.u3;
    r.d = dk(k);
    JkResult jw = jk(k);
    r.j_k = jw.j;
    r.word = jw.word;

    // gamma = Refl M Refl negates the off-diagonal entries of M; since
    // Refl sigma_i Refl = sigma_i^{-1}, gamma is itself a group word.
    Mat2 m = word_to_matrix(r.word);
    Mat2 gamma{m.m11, -m.m12, -m.m21, m.m22};
    check(act(gamma, Vec2::e1()) == phi_pow(-r.j_k) * reflect(r.d),
          "gamma e1 = phi^{-j_k} reflect(d_k)");
    Mat2 gamma_inv = mat_inv(gamma);

    r.recovered[0] = act(gamma_inv, t.u1);
    r.recovered[1] = act(gamma_inv, t.u2);
    r.recovered[2] = act(gamma_inv, t.u3);

    r.spacing = phi_pow(r.j_k);
    Vec2 gap{r.spacing, GoldenScalar(0)};
    check(r.recovered[1] - r.recovered[0] == gap && r.recovered[2] - r.recovered[1] == gap,
          "recovered gaps must both equal (phi^{j_k}, 0)");

    r.height = r.recovered[0].y;
    Int K(k);
    GoldenScalar h = gs(K * K * K, 0) * phi_pow(5) +
                     gs(K * K, 0) * (phi_pow(4) + phi_pow(6)) + gs(K, 0) * phi_pow(2) -
                     (phi_pow(2) + phi_pow(4));
    check(r.height == phi_pow(-r.j_k) * h, "height closed form");

    r.max_norm_sq = r.recovered[0].norm_sq();
    for (int i = 1; i < 3; ++i)
        if (r.recovered[i].norm_sq() > r.max_norm_sq) r.max_norm_sq = r.recovered[i].norm_sq();

    for (const Vec2& p : r.recovered)
        check(is_in_S(p), "recovered point must lie in the orbit of e1");

    if (normalize) {
        r.normalized = true;
        r.recovered_normalized = r.recovered;
        auto all_in_sector0 = [&] {
            for (const Vec2& p : r.recovered_normalized) {
                if (sign(p.x) < 0 || sign(p.y) < 0) return false;
                if (classify(p) != SectorId::S0) return false;
            }
            return true;
        };
        Mat2 s0inv = generator_inv(0);
        while (all_in_sector0()) {
            for (Vec2& p : r.recovered_normalized) p = act(s0inv, p);
            ++r.sigma0_steps;
        }
    }
    return r;
}

double norm_ratio_float(const TripleReport& r) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    return std::sqrt(to_double(r.max_norm_sq)) * std::pow(phi, 4.0 * static_cast<double>(r.j_k));
}

std::vector<long> fib_k_sequence(long n_max) {
    if (n_max < 5 || n_max % 2 == 0 || n_max > 85)
        raise(ErrorCode::ConfigError, "fib_k_sequence needs odd n_max in [5, 85]");
    std::vector<long> ks;
    for (long n = 5; n <= n_max; n += 2)
        ks.push_back(fib(n).convert_to<long>() - 2);
    return ks;
}

JkTable jk_table(long k_max) {
    if (k_max < 2) raise(ErrorCode::ConfigError, "jk_table requires k_max >= 2");
    JkTable table;
    for (long k = 2; k <= k_max; ++k) {
        JkResult res = jk(k);
        JkRow row;
        row.k = k;
        row.j = res.j;
        row.phi_pow = to_double(phi_pow(res.j));
        row.word_len = res.word.total_letters();
        row.frac_bound_ok = phi_pow(res.j) <= frac_bound(k);
        table.rows.push_back(row);
        ++table.histogram[res.j];
    }
    return table;
}

}  // namespace golden
