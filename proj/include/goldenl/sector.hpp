#pragma once

#include <optional>
#include <string>
#include <utility>

#include "goldenl/group.hpp"

namespace golden {

// The four sectors partitioning the closed first quadrant minus the origin
// (half-open boundaries):
//   Sigma_0:        0 <= y < phi^{-1} x
//   Sigma_1:  phi^{-1} x <= y < x
//   Sigma_2:            x <= y < phi x
//   Sigma_3:        phi x <= y
enum class SectorId { S0 = 0, S1 = 1, S2 = 2, S3 = 3 };

inline int sector_index(SectorId s) { return static_cast<int>(s); }

// Exact sector test.  Errors: ZeroVector, OutOfQuadrant.
SectorId classify(const Vec2& v);

// One descent step: (k, sigma_k^{-1} v) with k = classify(v).  The result
// stays in the closed first quadrant and the x-projection never increases.
std::pair<SectorId, Vec2> descend_once(const Vec2& v);

// For v in Sigma_k, k in {0,3}: the largest t >= 1 such that
// sigma_k^{-(t-1)} v is still in Sigma_k — i.e. the length of the k-run the
// descent will consume.  Computed in closed form from the boundary line and
// verified by two exact classify calls, with a doubling-search fallback.
// Errors: WrongSector; Unbounded on the terminal rays (y = 0 for k = 0,
// x = 0 for k = 3).
Int run_length(const Vec2& v, int k);

// Certificate returned by gcd_gamma_plus.  Reconstruction identity:
//   input = scaling^{-1} * unreflect( unswap( l_v * word_to_matrix(word) * e1 ) )
// where unswap exchanges coordinates when `swapped` is set (y-axis inputs)
// and unreflect restores the recorded coordinate signs.
struct GcdResult {
    Word word;           // itinerary k_0 ... k_n
    GoldenScalar l_v;    // terminal x-coordinate; > 0
    Rat scaling;         // least common positive denominator cleared from input
    bool neg_x = false;  // input x < 0
    bool neg_y = false;  // input y < 0
    bool swapped = false;  // input was on the y-axis (|x| = 0)
    std::optional<long> unit_exp;  // set when l_v is a positive unit

    Vec2 reconstruct() const;
    std::string to_json() const;
};

// Sector-descent gcd: drives (|x|, |y|), denominators cleared, to the x-axis
// recording the itinerary; l_v is the terminal x-coordinate.  When the input
// coordinates are coprime golden integers, l_v is a positive unit and
// unit_exp is set.  The cap bounds the number of run-length batches.
// Errors: ZeroVector; IterationCap.
GcdResult gcd_gamma_plus(const Vec2& v);
GcdResult gcd_gamma_plus(const Vec2& v, const Int& iteration_cap);

// Default batch cap (10^6), overridable via the ORBIT_ITER_CAP environment
// variable (read once, on first use).
Int default_iteration_cap();

// v is in S = Gamma e1 iff gcd returns scaling = 1 and l_v = 1.
bool is_in_S(const Vec2& v);

}  // namespace golden
