#pragma once

#include <vector>

#include "goldenl/quadratic.hpp"

namespace golden {

// Partial quotients [a0; a1, a2, ...] with an optional detected period:
// past the head, quotients cycle through `period` forever.  `terminated`
// marks an exact finite expansion (rational input).  Quotients satisfy
// a_i >= 1 (expansion requires x > 1, so a0 >= 1 as well).
struct ContinuedFraction {
    std::vector<Int> head;
    std::vector<Int> period;
    bool terminated = false;

    // Whether quotient(i) is available without further expansion.
    bool has_term(size_t i) const { return i < head.size() || !period.empty(); }
    // a_i, unrolling the period; IndexOutOfRange past a finite expansion or
    // past the expanded prefix when no period was detected.
    Int quotient(size_t i) const;
    // "[2; 1, 1]", "[2; (100, 2)]" — parenthesized repeating tail.
    std::string str() const;
};

// Exact expansion by floor/invert on the complete quotients.  Stops early
// when the value terminates (rational) or when a complete quotient repeats
// (quadratic irrational; the period is recorded and arbitrarily many terms
// become available).  Requires x > 1: NonPositive otherwise.
ContinuedFraction cf_expand(const QuadraticScalar& x, long n_terms);

struct Convergent {
    long n = -1;
    Int p, q;
};

// Convergents p_0/q_0 ... p_n/q_n by the standard recurrence
// p_k = a_k p_{k-1} + p_{k-2}; the determinant identity
// p_k q_{k-1} - p_{k-1} q_k = (-1)^{k-1} is checked at every step.
// IndexOutOfRange when the expansion cannot supply a needed quotient.
std::vector<Convergent> convergents(const ContinuedFraction& cf, long n_max);
Convergent convergent(const ContinuedFraction& cf, long n);

// Exact value of [head; period repeating]: rational back-substitution when
// the period is empty, otherwise the positive fixed point of the period's
// Mobius map (C t^2 + (D - A) t - B = 0), propagated back through the head.
// All quotients must be >= 1.
QuadraticScalar cf_value(const std::vector<Int>& head, const std::vector<Int>& period);

// Parses "cf:[a0;a1,a2,...]" with an optional parenthesized periodic tail
// "cf:[a0;a1,(p1,p2)]"; the "cf:" prefix is optional.  ParseError on
// malformed input.
void parse_cf_spec(const std::string& s, std::vector<Int>& head, std::vector<Int>& period);

}  // namespace golden
