#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "goldenl/contfrac.hpp"

namespace golden {

// Vector with quadratic-field coordinates, for orbits of
// Gamma_rho = < u1, u2 >, u1 = [[1,1],[0,1]], u2 = [[1,0],[rho,1]].
struct QVec2 {
    QuadraticScalar x, y;
    bool operator==(const QVec2& o) const { return x == o.x && y == o.y; }
    QVec2 operator-(const QVec2& o) const { return {x - o.x, y - o.y}; }
    QuadraticScalar norm_sq() const { return x * x + y * y; }
};
std::string to_string(const QVec2& v);

// The signed approximation error Psi_n = p_n - q_n (rho + 1) for the
// convergents p_n/q_n of rho + 1.  Verified exactly on construction:
//   1/(q_{n+1} + q_n) < |Psi_n| < 1/q_{n+1}   and   sign(Psi_n) = (-1)^{n+1}.
struct PsiValue {
    long n = 0;
    QuadraticScalar value;
    Int p_n, q_n, q_n1;  // numerator, denominator, and next denominator
};

// rho must be a positive quadratic irrational; RationalRho otherwise
// (rational rho has a terminating expansion — use rational_containment).
PsiValue psi(const QuadraticScalar& rho, long n);

// The close pair of Prop-style orbit points at level n:
//   gamma_1 e1 with gamma_1 = u1^L u2^{p_n + 1}
//   gamma_2 e1 with gamma_2 = u1^L u2^{q_n} u1 u2
// where L = sign(Psi_n) * floor(|Psi_n|^{-1}) (the mirrored exponent keeps
// the construction valid for either sign of Psi_n).  The difference identity
//   gamma_1 e1 - gamma_2 e1 = rho * (-1 + L Psi_n, Psi_n)
// is asserted exactly.  The two bound flags compare exactly against
//   distance * q_{n+1} <= 2 rho          (provable: |.| < rho sqrt(2) |Psi_n|)
//   ||gamma_2 e1||     <= 8.5 q_n q_{n+1} (measured regression constant; the
//                                          max over the tested rho is
//                                          ~8.0301 at rho = [2;(100,2)],
//                                          n = 0, and ~4.4399 at
//                                          rho = sqrt(2), n = 1)
struct ConPair {
    long n = 0;
    Int p_n, q_n, q_n1;
    QuadraticScalar psi_n;
    Int L;
    QVec2 g1, g2;
    QuadraticScalar dist_sq;  // ||g1 - g2||^2
    QuadraticScalar norm_sq;  // ||g2||^2
    bool dist_bound_ok = false;
    bool norm_bound_ok = false;
};
ConPair con_pair(const QuadraticScalar& rho, long n);

// Random-word sampling of the Gamma_rho orbit of e1 for rational
// rho = p/q > 0 in lowest terms (BadRational otherwise).  Each sampled word
// is checked for containment of the point in (1/q) Z^2, and the minimum
// positive pairwise gap over the distinct sampled points is computed
// exactly.  Violations do not abort the run: they are counted and the first
// counterexample is kept (letters A = u1, a = u1^{-1}, B = u2, b = u2^{-1}).
struct ContainmentReport {
    Int p, q;
    long trials = 0, max_len = 0;
    std::uint64_t seed = 0;
    long num_points = 0;      // distinct points sampled
    long violations = 0;      // words whose point leaves (1/q) Z^2
    bool all_contained = false;
    std::string first_violation_word;
    Rat first_violation_x, first_violation_y;
    Rat min_gap_sq;           // over distinct pairs of distinct points
    bool min_gap_ok = false;  // min gap >= 1/q, exactly
};
ContainmentReport rational_containment(const Int& p, const Int& q, long trials, long max_len,
                                       std::uint64_t seed);

// rho specs accepted on the command line: "p/q" (or "p"), "(p+q*sqrt(d))/r",
// and "cf:[a0;a1,...]" with an optional parenthesized periodic tail.
QuadraticScalar parse_rho(const std::string& spec);

}  // namespace golden
