#pragma once

#include <array>
#include <map>
#include <vector>

#include "goldenl/sector.hpp"

namespace golden {

// A pair of close orbit points gamma_1 e1, gamma_2 e1 built from a Fibonacci
// shear ladder:
//   gamma_1 = sigma_3^{F_{n-4}+F_{n-2}} sigma_0^{F_n}     sigma_2
//   gamma_2 = sigma_3^{F_{n-4}+F_{n-2}} sigma_0^{F_{n+1}} sigma_1
// Their difference collapses to (-phi^{-(n-1)}, phi^{-(n-2)}{phi^{n-3}}),
// giving distance ~ phi^{-n} at norm ~ phi^{2n}.
struct Prop1Pair {
    long n = 0;
    Word w1, w2;
    Vec2 p1, p2;  // gamma_1 e1, gamma_2 e1
    Vec2 diff;    // p1 - p2, asserted equal to the closed form
    GoldenScalar dist_sq;
    // Exact norm bound witness (F_{n+1}+1)phi + 1 + (F_{n+1}+1)phi^{n-1};
    // ||p2|| <= witness is asserted (squared, exactly).
    GoldenScalar norm_bound_witness;
};

// n even, >= 4.  Errors: BadParity.
Prop1Pair prop1_pair(long n);

// The three collinear orbit points
//   u1(k) = sigma_3^{k+1} sigma_2 e1                      = (phi, k+1+(k+2)phi)
//   u2(k) = sigma_0^{k-1} sigma_1 sigma_0^{k-1} sigma_2 e1
//         = (k(k+1)+(2k^2+k-1)phi, k+(k+1)phi)
//   u3(k) = sigma_0^{2k+1} sigma_1 sigma_0^{k-2} sigma_2 e1
//         = (2k(k+1)+(4k^2+2k-3)phi, k-1+k phi)
// with u1 - u2 = u2 - u3 exactly.  Each closed form is verified against its
// generator-word definition by exact matrix evaluation.  k > 1; BadK.
struct Triple {
    Vec2 u1, u2, u3;
};
Triple triple_points(long k);

// The common difference vector reflected into the first quadrant:
//   d_k = reflect(u2 - u1) = (k(k+1) + (2k^2+k-2)phi, phi^2)
//       = (k^2 phi^3 + k phi^2 - 2 phi, phi^2),
// reflect = [[1,0],[0,-1]].  k > 1; BadK.
Vec2 dk(long k);

// The unit exponent j_k with gcd_Gamma+(d_k) = phi^{j_k}, plus the descent
// itinerary.  Asserts N(l_v) = +-1 (the coordinates of d_k are coprime).
struct JkResult {
    long j = 0;
    Word word;
};
JkResult jk(long k);

// Full recovery report: gamma = Refl * word_to_matrix(jk(k).word) * Refl
// (Refl = [[1,0],[0,-1]]) satisfies gamma e1 = phi^{-j_k} * reflect(d_k), so
// gamma^{-1} carries the triple to a horizontal line with both x-gaps exactly
// phi^{j_k}:
//   recovered[i] = gamma^{-1} u_{i+1}(k),
//   recovered[1] - recovered[0] = (phi^{j_k}, 0) = recovered[2] - recovered[1].
// The common height equals
//   phi^{-j_k} (k^3 phi^5 + k^2 (phi^4 + phi^6) + k phi^2 - (phi^2 + phi^4))
// (expanding the second row phi^{-j_k}(phi^2, d_x) of gamma^{-1} against
// u1(k); the k-coefficient is phi^4 - phi^3 + ... = phi^2 and does not
// vanish), asserted exactly.
struct TripleReport {
    long k = 0;
    Vec2 u1, u2, u3;
    Vec2 d;  // dk(k)
    long j_k = 0;
    Word word;  // descent itinerary of d_k
    std::array<Vec2, 3> recovered;
    GoldenScalar spacing;  // phi^{j_k}
    GoldenScalar height;   // common y of the recovered points
    GoldenScalar max_norm_sq;  // max ||recovered[i]||^2
    // Optional post-pass: while all three points classify into Sigma_0, apply
    // sigma_0^{-1} jointly (preserves height and gaps).  Off by default;
    // results reported separately so the primary points stay untouched.
    bool normalized = false;
    Int sigma0_steps{0};
    std::array<Vec2, 3> recovered_normalized;
};
TripleReport recover_triple(long k, bool normalize = false);

// Float value of max_norm * phi^{4 j_k} (the report ratio column), evaluated
// as sqrt(to_double(max_norm_sq)) * phi^{4 j_k} in doubles.  The exact
// product max_norm_sq * phi^{8 j_k} is a difference of astronomically large
// near-equal integer coefficients, so converting it to double cancels to 0;
// the factored form keeps both factors positive and well-scaled.
double norm_ratio_float(const TripleReport& r);

// k = F_n - 2 for odd n in [5, n_max]; these are the indices where the
// spacing bound phi^{j_k} <= phi^{3-n} kicks in.  n_max odd, in [5, 85].
std::vector<long> fib_k_sequence(long n_max);

// Empirical j_k table for k in [2, k_max], plus the multiplicity histogram
// {m -> #{k <= k_max : j_k = m}}.
struct JkRow {
    long k = 0;
    long j = 0;
    double phi_pow = 0.0;  // phi^{j_k} as double (report only)
    Int word_len{0};       // total letters of the itinerary
    bool frac_bound_ok = false;  // phi^{j_k} <= phi^3 {(k+2)phi}, exactly
};
struct JkTable {
    std::vector<JkRow> rows;
    std::map<long, long> histogram;
};
JkTable jk_table(long k_max);

}  // namespace golden
