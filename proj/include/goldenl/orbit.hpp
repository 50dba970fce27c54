#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "goldenl/group.hpp"
#include "goldenl/sector.hpp"

namespace golden {

// Integer coefficient quadruple for a point (ax + bx*phi, ay + by*phi).
// Enumeration stores first-quadrant points, whose coefficients are
// non-negative; symmetry images carry signed coefficients.
struct CoeffPoint {
    std::int64_t ax = 0, bx = 0, ay = 0, by = 0;

    Vec2 to_vec2() const;
    bool operator==(const CoeffPoint& o) const {
        return ax == o.ax && bx == o.bx && ay == o.ay && by == o.by;
    }
};

// All orbit points inside the closed sup-norm ball of a given radius,
// found by a pruned search over forward words v = sigma_{k0}...sigma_{kn} e1
// in the first quadrant and unfolded by the dihedral symmetry of the orbit.
//
// Storage is the first-quadrant word tree T only (deduplicated canonical
// coefficient keys); the full symmetric set is the disjoint union of the
// four quarter-rotations of T, so size() = 4 * tree_size().  The point
// (0, 1) is rotation_quarter * (1, 0) and is covered by the unfolding.
class OrbitPointSet {
  public:
    // Pruned exact enumeration.  radius must be >= 1, at most 65535 (the
    // packed-key coefficient range), and have denominator <= 10^6;
    // ConfigError otherwise.  CapacityExceeded past the point budget
    // (default 10^7, overridable via ORBIT_POINT_CAP).
    static OrbitPointSet enumerate(const Rat& radius);

    const Rat& radius() const { return radius_; }
    std::size_t tree_size() const { return keys_.size(); }
    std::size_t size() const { return 4 * keys_.size(); }

    // Exact membership of v in the full symmetric set.
    bool contains(const Vec2& v) const;

    // First-quadrant tree points in canonical key order (sorted by
    // (a_y, b_y, a_x, b_x); same-line points are contiguous).
    void for_each_tree(const std::function<void(const CoeffPoint&)>& f) const;

    // Full symmetric set: for each tree point, its four quarter-rotations
    // (j = 0..3 innermost).  The four images are pairwise distinct and the
    // union over the tree is disjoint.
    void for_each_full(const std::function<void(const CoeffPoint&)>& f) const;

    // Re-walks the word tree in depth-first preorder (letters 0..3),
    // handing each first-quadrant point its canonical itinerary.  The root
    // e1 carries the empty word.
    void walk_words(const std::function<void(const CoeffPoint&, const Word&)>& f) const;

    const std::vector<std::uint64_t>& keys() const { return keys_; }

  private:
    Rat radius_;
    std::vector<std::uint64_t> keys_;  // sorted packed (a_y, b_y, a_x, b_x)
};

// Minimum Euclidean distance over distinct pairs of the full set, decided
// by exact comparison of squared distances (grid-bucketed candidate search
// with exact confirmation).  TooFew when the set has fewer than two points.
struct MinGapResult {
    GoldenScalar gap_sq;
    Vec2 a, b;    // a witness pair attaining the gap
    double gap = 0;
};
MinGapResult min_pair_gap(const OrbitPointSet& set);

// Cluster search parameters.  epsilon is an exact rational threshold
// (numerator <= 10^12, denominator <= 10^6); m >= 1 (m = 1 lists every
// point as a trivial cluster).
struct ClusterQuery {
    Rat epsilon;
    long m = 2;
    bool horizontal_only = true;
};

// A group of m set points: in horizontal mode they share an exact y and are
// consecutive in x on their line with x-spread < epsilon; in general mode
// they are mutually within epsilon (greedy search, not exhaustive over all
// m-subsets).  spread is the exact x-spread (horizontal mode; zero
// otherwise); diam_sq is the exact squared diameter in both modes.
struct Cluster {
    GoldenScalar y;
    std::vector<Vec2> points;
    GoldenScalar spread;
    GoldenScalar diam_sq;
    double spread_float = 0;
};

// All qualifying clusters, sorted by spread (horizontal) or squared
// diameter (general), ties broken by line and leftmost point.
// CapacityExceeded if more than 2*10^6 clusters (or, in general mode,
// full-set points) would be materialized.
std::vector<Cluster> find_clusters(const OrbitPointSet& set, const ClusterQuery& q);

// Heuristic scan for the largest ball empty of orbit points: sample centers
// on a square grid of the given step inside the sup-norm ball, report the
// best min(distance to nearest point, distance to the ball boundary).
// Double precision throughout — exploratory data only, asserts nothing.
struct EmptyBall {
    double cx = 0, cy = 0;
    double radius = 0;
    long samples = 0;
};
EmptyBall empty_ball_probe(const OrbitPointSet& set, double grid_step);

}  // namespace golden
