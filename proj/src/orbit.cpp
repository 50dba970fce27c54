#include "goldenl/orbit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <set>
#include <utility>

#include "goldenl/errors.hpp"

namespace golden {

namespace {

constexpr double kPhiD = 1.6180339887498949;
constexpr std::int64_t kCoeffMax = 65535;

// Exact sign of a + b*phi for machine-word coefficients: 2(a + b*phi) =
// (2a + b) + b*sqrt(5), decided by a case split and one squared comparison
// (p^2 = 5 b^2 has no nonzero integer solutions).
int sgn_small(std::int64_t a, std::int64_t b) {
    if (a >= 0 && b >= 0) return (a == 0 && b == 0) ? 0 : 1;
    if (a <= 0 && b <= 0) return -1;
    const std::int64_t p = 2 * a + b;
    if (p >= 0 && b > 0) return 1;
    if (p <= 0 && b < 0) return -1;
    const __int128 p2 = static_cast<__int128>(p) * p;
    const __int128 b25 = static_cast<__int128>(b) * b * 5;
    if (p > 0) return p2 > b25 ? 1 : -1;  // b < 0
    return p2 < b25 ? 1 : -1;             // p < 0, b > 0
}

// Sector index of a nonzero first-quadrant point, small-coefficient path
// mirroring classify().
int classify_small(const CoeffPoint& v) {
    if (sgn_small(v.ax - v.by, v.bx - v.ay - v.by) > 0) return 0;  // x - phi*y > 0
    if (sgn_small(v.ax - v.ay, v.bx - v.by) > 0) return 1;         // x - y > 0
    if (sgn_small(v.bx - v.ay, v.ax + v.bx - v.by) > 0) return 2;  // phi*x - y > 0
    return 3;
}

CoeffPoint apply_gen(const CoeffPoint& v, int i) {
    switch (i) {
        case 0:  // (x + phi*y, y)
            return {v.ax + v.by, v.bx + v.ay + v.by, v.ay, v.by};
        case 1:  // (phi*x + phi*y, x + phi*y)
            return {v.bx + v.by, v.ax + v.bx + v.ay + v.by, v.ax + v.by, v.bx + v.ay + v.by};
        case 2:  // (phi*x + y, phi*x + phi*y)
            return {v.bx + v.ay, v.ax + v.bx + v.by, v.bx + v.by, v.ax + v.bx + v.ay + v.by};
        default:  // (x, phi*x + y)
            return {v.ax, v.bx, v.bx + v.ay, v.ax + v.bx + v.by};
    }
}

// a + b*phi <= rn/rd, exactly.
bool le_radius(std::int64_t a, std::int64_t b, std::int64_t rn, std::int64_t rd) {
    return sgn_small(a * rd - rn, b * rd) <= 0;
}

std::uint64_t pack_key(const CoeffPoint& v) {
    check(v.ax >= 0 && v.ax <= kCoeffMax && v.bx >= 0 && v.bx <= kCoeffMax && v.ay >= 0 &&
              v.ay <= kCoeffMax && v.by >= 0 && v.by <= kCoeffMax,
          ErrorCode::InternalCheck, "stored point coefficients out of packed range");
    return (static_cast<std::uint64_t>(v.ay) << 48) | (static_cast<std::uint64_t>(v.by) << 32) |
           (static_cast<std::uint64_t>(v.ax) << 16) | static_cast<std::uint64_t>(v.bx);
}

CoeffPoint unpack_key(std::uint64_t k) {
    return {static_cast<std::int64_t>((k >> 16) & 0xffff), static_cast<std::int64_t>(k & 0xffff),
            static_cast<std::int64_t>((k >> 48) & 0xffff),
            static_cast<std::int64_t>((k >> 32) & 0xffff)};
}

std::size_t point_budget() {
    if (const char* s = std::getenv("ORBIT_POINT_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(s, &end, 10);
        if (end != nullptr && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 10'000'000;
}

struct RadiusParts {
    std::int64_t rn, rd;
};

RadiusParts radius_parts(const Rat& radius) {
    check(radius >= 1, ErrorCode::ConfigError, "radius must be >= 1");
    check(radius <= kCoeffMax, ErrorCode::ConfigError, "radius must be <= 65535");
    check(denominator(radius) <= 1'000'000, ErrorCode::ConfigError,
          "radius denominator must be <= 10^6");
    return {numerator(radius).convert_to<std::int64_t>(),
            denominator(radius).convert_to<std::int64_t>()};
}

bool on_x_axis(const CoeffPoint& v) { return v.ay == 0 && v.by == 0; }

GoldenScalar golden_of(std::int64_t a, std::int64_t b) { return {Rat(a), Rat(b)}; }

double golden_dbl(std::int64_t a, std::int64_t b) {
    return static_cast<double>(a) + static_cast<double>(b) * kPhiD;
}

// Squared Euclidean distance as exact coefficients (a + b*phi); inputs are
// packed-range points, so everything fits comfortably in 64 bits.
struct G2 {
    std::int64_t a, b;
};

G2 dist_sq_small(const CoeffPoint& p, const CoeffPoint& q) {
    const std::int64_t dxa = p.ax - q.ax, dxb = p.bx - q.bx;
    const std::int64_t dya = p.ay - q.ay, dyb = p.by - q.by;
    return {dxa * dxa + dxb * dxb + dya * dya + dyb * dyb,
            2 * dxa * dxb + dxb * dxb + 2 * dya * dyb + dyb * dyb};
}

int cmp_g2(const G2& l, const G2& r) { return sgn_small(l.a - r.a, l.b - r.b); }

}  // namespace

Vec2 CoeffPoint::to_vec2() const {
    return {GoldenScalar(Rat(ax), Rat(bx)), GoldenScalar(Rat(ay), Rat(by))};
}

OrbitPointSet OrbitPointSet::enumerate(const Rat& radius) {
    const RadiusParts r = radius_parts(radius);
    const std::size_t budget = point_budget();

    OrbitPointSet set;
    set.radius_ = radius;

    const CoeffPoint root{1, 0, 0, 0};
    set.keys_.push_back(pack_key(root));
    std::vector<CoeffPoint> stack{root};
    while (!stack.empty()) {
        const CoeffPoint v = stack.back();
        stack.pop_back();
        for (int i = 0; i < 4; ++i) {
            if (i == 0 && on_x_axis(v)) continue;  // sigma_0 fixes the x-axis
            const CoeffPoint c = apply_gen(v, i);
            if (!le_radius(c.ax, c.bx, r.rn, r.rd)) continue;
            if (!le_radius(c.ay, c.by, r.rn, r.rd)) continue;
            if (classify_small(c) != i) continue;  // not the canonical itinerary
            check(set.keys_.size() < budget, ErrorCode::CapacityExceeded,
                  "orbit point budget exceeded (raise ORBIT_POINT_CAP)");
            set.keys_.push_back(pack_key(c));
            stack.push_back(c);
        }
    }

    std::sort(set.keys_.begin(), set.keys_.end());
    for (std::size_t i = 0; i + 1 < set.keys_.size(); ++i)
        check(set.keys_[i] != set.keys_[i + 1], ErrorCode::InternalCheck,
              "duplicate canonical key in the word tree");
    return set;
}

bool OrbitPointSet::contains(const Vec2& v) const {
    GoldenScalar cx = v.x, cy = v.y;
    for (int j = 0; j < 4; ++j) {
        if (j > 0) {
            GoldenScalar t = cx;  // rot^{-1}: (x, y) -> (y, -x)
            cx = cy;
            cy = -t;
        }
        if (denominator(cx.a) != 1 || denominator(cx.b) != 1 || denominator(cy.a) != 1 ||
            denominator(cy.b) != 1)
            continue;
        const Int na = numerator(cx.a), nb = numerator(cx.b);
        const Int ma = numerator(cy.a), mb = numerator(cy.b);
        if (na < 0 || na > kCoeffMax || nb < 0 || nb > kCoeffMax || ma < 0 || ma > kCoeffMax ||
            mb < 0 || mb > kCoeffMax)
            continue;
        const CoeffPoint p{na.convert_to<std::int64_t>(), nb.convert_to<std::int64_t>(),
                           ma.convert_to<std::int64_t>(), mb.convert_to<std::int64_t>()};
        if (std::binary_search(keys_.begin(), keys_.end(), pack_key(p))) return true;
    }
    return false;
}

void OrbitPointSet::for_each_tree(const std::function<void(const CoeffPoint&)>& f) const {
    for (const std::uint64_t k : keys_) f(unpack_key(k));
}

void OrbitPointSet::for_each_full(const std::function<void(const CoeffPoint&)>& f) const {
    for (const std::uint64_t k : keys_) {
        const CoeffPoint p = unpack_key(k);
        f(p);
        f({-p.ay, -p.by, p.ax, p.bx});   // rot^1: (-y, x)
        f({-p.ax, -p.bx, -p.ay, -p.by});  // rot^2
        f({p.ay, p.by, -p.ax, -p.bx});   // rot^3: (y, -x)
    }
}

void OrbitPointSet::walk_words(const std::function<void(const CoeffPoint&, const Word&)>& f) const {
    if (keys_.empty()) return;
    const RadiusParts r = radius_parts(radius_);

    // The DFS path applies sigma_{i_0}, ..., sigma_{i_L} left to right, so
    // the point is sigma_{i_L} ... sigma_{i_0} e1 and its canonical descent
    // itinerary is the path reversed.
    std::vector<Word::Run> runs;
    const auto emit = [&](const CoeffPoint& p) {
        Word w;
        for (auto it = runs.rbegin(); it != runs.rend(); ++it) w.append(it->letter, it->count);
        f(p, w);
    };
    const std::function<void(const CoeffPoint&)> walk = [&](const CoeffPoint& v) {
        emit(v);
        for (int i = 0; i < 4; ++i) {
            if (i == 0 && on_x_axis(v)) continue;
            const CoeffPoint c = apply_gen(v, i);
            if (!le_radius(c.ax, c.bx, r.rn, r.rd)) continue;
            if (!le_radius(c.ay, c.by, r.rn, r.rd)) continue;
            if (classify_small(c) != i) continue;
            if (!runs.empty() && runs.back().letter == i) {
                runs.back().count += 1;
            } else {
                runs.push_back({i, Int(1)});
            }
            walk(c);
            if (runs.back().count == 1) {
                runs.pop_back();
            } else {
                runs.back().count -= 1;
            }
        }
    };
    walk({1, 0, 0, 0});
}

MinGapResult min_pair_gap(const OrbitPointSet& set) {
    // The minimum over the full symmetric set is attained within the tree
    // plus (0,1): every full point has both |coordinates| in {0,1} ∪ [1,∞),
    // so pairs drawn from two different quarter-rotations are >= sqrt(2)
    // apart (checked case by case over adjacent/opposite quadrants), and the
    // grid set always contains (1,0),(0,1) at exactly sqrt(2).
    std::vector<CoeffPoint> pts;
    pts.reserve(set.tree_size() + 1);
    set.for_each_tree([&](const CoeffPoint& p) { pts.push_back(p); });
    pts.push_back({0, 0, 1, 0});
    check(pts.size() >= 2, ErrorCode::TooFew, "need at least two points for a pair gap");
    const std::size_t n = pts.size();

    G2 best = dist_sq_small(pts[0], pts[1]);
    std::size_t bi = 0, bj = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const G2 cand = dist_sq_small(pts[i], pts[i + 1]);
        if (cmp_g2(cand, best) < 0) {
            best = cand;
            bi = i;
            bj = i + 1;
        }
    }

    // Bucket by a conservative cell at least as wide as the true gap; the
    // provisional bound keeps cells near-optimal.  Coordinates are at most
    // ~1.7e5 so double rounding is far below the 1e-7 cell floor; a +/-2
    // ring absorbs boundary rounding.
    const double bestd = std::max(golden_dbl(best.a, best.b), 0.0);
    const double cell = std::max(std::sqrt(bestd) * 1.000001, 1e-7);
    struct Entry {
        std::int64_t ix, iy;
        std::uint32_t idx;
    };
    std::vector<Entry> es(n);
    for (std::size_t i = 0; i < n; ++i) {
        es[i] = {static_cast<std::int64_t>(std::floor(golden_dbl(pts[i].ax, pts[i].bx) / cell)),
                 static_cast<std::int64_t>(std::floor(golden_dbl(pts[i].ay, pts[i].by) / cell)),
                 static_cast<std::uint32_t>(i)};
    }
    std::sort(es.begin(), es.end(), [](const Entry& l, const Entry& r) {
        return l.ix != r.ix ? l.ix < r.ix : (l.iy != r.iy ? l.iy < r.iy : l.idx < r.idx);
    });
    const auto row_begin = [&](std::int64_t ix, std::int64_t iy) {
        return std::lower_bound(es.begin(), es.end(), std::make_pair(ix, iy),
                                [](const Entry& e, const std::pair<std::int64_t, std::int64_t>& k) {
                                    return e.ix != k.first ? e.ix < k.first : e.iy < k.second;
                                });
    };
    for (const Entry& e : es) {
        for (std::int64_t dx = -2; dx <= 2; ++dx) {
            auto it = row_begin(e.ix + dx, e.iy - 2);
            for (; it != es.end() && it->ix == e.ix + dx && it->iy <= e.iy + 2; ++it) {
                if (it->idx >= e.idx) continue;
                const G2 cand = dist_sq_small(pts[e.idx], pts[it->idx]);
                if (cmp_g2(cand, best) < 0) {
                    best = cand;
                    bi = it->idx;
                    bj = e.idx;
                }
            }
        }
    }

    MinGapResult out;
    out.gap_sq = golden_of(best.a, best.b);
    out.a = pts[bi].to_vec2();
    out.b = pts[bj].to_vec2();
    out.gap = std::sqrt(std::max(golden_dbl(best.a, best.b), 0.0));
    return out;
}

namespace {

struct ClusterCand {
    std::int64_t sa, sb;  // x-spread (a + b*phi)
    std::int64_t ya, yb;  // line height (signed)
    std::vector<std::pair<std::int64_t, std::int64_t>> xs;  // m x-coefficients, ascending
};

constexpr std::size_t kClusterGuard = 2'000'000;

void push_cluster(std::vector<ClusterCand>& out, ClusterCand cand) {
    check(out.size() < kClusterGuard, ErrorCode::CapacityExceeded,
          "cluster materialization guard exceeded; tighten epsilon or m");
    out.push_back(std::move(cand));
}

std::vector<Cluster> materialize(std::vector<ClusterCand>& cands) {
    std::sort(cands.begin(), cands.end(), [](const ClusterCand& l, const ClusterCand& r) {
        const int s = sgn_small(l.sa - r.sa, l.sb - r.sb);
        if (s != 0) return s < 0;
        const int sy = sgn_small(l.ya - r.ya, l.yb - r.yb);
        if (sy != 0) return sy < 0;
        return sgn_small(l.xs[0].first - r.xs[0].first, l.xs[0].second - r.xs[0].second) < 0;
    });
    std::vector<Cluster> out;
    out.reserve(cands.size());
    for (const ClusterCand& c : cands) {
        Cluster cl;
        cl.y = golden_of(c.ya, c.yb);
        cl.spread = golden_of(c.sa, c.sb);
        // Collinear horizontal points: diameter equals the x-spread.
        cl.diam_sq = cl.spread * cl.spread;
        cl.spread_float = golden_dbl(c.sa, c.sb);
        cl.points.reserve(c.xs.size());
        for (const auto& x : c.xs) cl.points.emplace_back(golden_of(x.first, x.second), cl.y);
        out.push_back(std::move(cl));
    }
    return out;
}

std::vector<Cluster> find_clusters_horizontal(const OrbitPointSet& set, long m,
                                              std::int64_t en, std::int64_t ed) {
    std::vector<ClusterCand> cands;
    const std::vector<std::uint64_t>& keys = set.keys();
    std::vector<std::pair<std::int64_t, std::int64_t>> xs;
    for (std::size_t lo = 0; lo < keys.size();) {
        std::size_t hi = lo;
        while (hi < keys.size() && (keys[hi] >> 32) == (keys[lo] >> 32)) ++hi;
        const CoeffPoint first = unpack_key(keys[lo]);
        const std::int64_t ya = first.ay, yb = first.by;

        // Full-set x values on this line: mirrored negatives, the y-axis
        // point on the lines y = +/-1, then the tree points.
        xs.clear();
        for (std::size_t i = hi; i-- > lo;) {
            const CoeffPoint p = unpack_key(keys[i]);
            xs.emplace_back(-p.ax, -p.bx);
        }
        // Sort the negated block ascending by value (the tree block need
        // not be in value order either; sort both).
        std::sort(xs.begin(), xs.end(),
                  [](const std::pair<std::int64_t, std::int64_t>& l,
                     const std::pair<std::int64_t, std::int64_t>& r) {
                      return sgn_small(l.first - r.first, l.second - r.second) < 0;
                  });
        if (ya == 1 && yb == 0) xs.emplace_back(0, 0);  // (0, 1)
        const std::size_t neg = xs.size();
        for (std::size_t i = lo; i < hi; ++i) {
            const CoeffPoint p = unpack_key(keys[i]);
            xs.emplace_back(p.ax, p.bx);
        }
        std::sort(xs.begin() + static_cast<std::ptrdiff_t>(neg), xs.end(),
                  [](const std::pair<std::int64_t, std::int64_t>& l,
                     const std::pair<std::int64_t, std::int64_t>& r) {
                      return sgn_small(l.first - r.first, l.second - r.second) < 0;
                  });

        if (xs.size() >= static_cast<std::size_t>(m)) {
            const std::size_t mm = static_cast<std::size_t>(m);
            for (std::size_t i = 0; i + mm <= xs.size(); ++i) {
                const std::int64_t sa = xs[i + mm - 1].first - xs[i].first;
                const std::int64_t sb = xs[i + mm - 1].second - xs[i].second;
                if (sgn_small(sa * ed - en, sb * ed) >= 0) continue;  // spread >= epsilon
                ClusterCand cand{sa, sb, ya, yb,
                                 {xs.begin() + static_cast<std::ptrdiff_t>(i),
                                  xs.begin() + static_cast<std::ptrdiff_t>(i + mm)}};
                if (ya != 0 || yb != 0) {
                    ClusterCand mirror = cand;  // the line y = -c has the same x set
                    mirror.ya = -ya;
                    mirror.yb = -yb;
                    push_cluster(cands, std::move(mirror));
                }
                push_cluster(cands, std::move(cand));
            }
        }
        lo = hi;
    }
    return materialize(cands);
}

std::vector<Cluster> find_clusters_general(const OrbitPointSet& set, long m, const Rat& eps) {
    check(set.size() <= kClusterGuard, ErrorCode::CapacityExceeded,
          "general cluster search materializes the full set; reduce the radius");
    std::vector<CoeffPoint> pts;
    pts.reserve(set.size());
    set.for_each_full([&](const CoeffPoint& p) { pts.push_back(p); });

    const GoldenScalar geps{eps, Rat(0)};
    const GoldenScalar eps_sq = geps * geps;
    const double epsd = rat_to_double(eps);
    const double cell = std::max(epsd * 1.000001, 1e-7);
    struct Entry {
        std::int64_t ix, iy;
        std::uint32_t idx;
    };
    std::vector<Entry> es(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        es[i] = {static_cast<std::int64_t>(std::floor(golden_dbl(pts[i].ax, pts[i].bx) / cell)),
                 static_cast<std::int64_t>(std::floor(golden_dbl(pts[i].ay, pts[i].by) / cell)),
                 static_cast<std::uint32_t>(i)};
    }
    std::sort(es.begin(), es.end(), [](const Entry& l, const Entry& r) {
        return l.ix != r.ix ? l.ix < r.ix : (l.iy != r.iy ? l.iy < r.iy : l.idx < r.idx);
    });
    const auto row_begin = [&](std::int64_t ix, std::int64_t iy) {
        return std::lower_bound(es.begin(), es.end(), std::make_pair(ix, iy),
                                [](const Entry& e, const std::pair<std::int64_t, std::int64_t>& k) {
                                    return e.ix != k.first ? e.ix < k.first : e.iy < k.second;
                                });
    };
    const auto exact_lt_eps = [&](const CoeffPoint& a, const CoeffPoint& b) {
        const G2 d = dist_sq_small(a, b);
        return golden_of(d.a, d.b) < eps_sq;
    };

    std::set<std::vector<std::array<std::int64_t, 4>>> seen;
    std::vector<Cluster> out;
    std::vector<std::uint32_t> near;
    // Sort candidate indices by the packed tree order for determinism.
    for (std::size_t i = 0; i < pts.size(); ++i) {
        near.clear();
        const std::int64_t ix =
            static_cast<std::int64_t>(std::floor(golden_dbl(pts[i].ax, pts[i].bx) / cell));
        const std::int64_t iy =
            static_cast<std::int64_t>(std::floor(golden_dbl(pts[i].ay, pts[i].by) / cell));
        for (std::int64_t dx = -2; dx <= 2; ++dx) {
            auto it = row_begin(ix + dx, iy - 2);
            for (; it != es.end() && it->ix == ix + dx && it->iy <= iy + 2; ++it) {
                if (it->idx == i) continue;
                if (exact_lt_eps(pts[i], pts[it->idx])) near.push_back(it->idx);
            }
        }
        if (near.size() + 1 < static_cast<std::size_t>(m)) continue;
        std::sort(near.begin(), near.end(), [&](std::uint32_t l, std::uint32_t r) {
            const int c = cmp_g2(dist_sq_small(pts[i], pts[l]), dist_sq_small(pts[i], pts[r]));
            return c != 0 ? c < 0 : l < r;
        });
        std::vector<std::uint32_t> grp{static_cast<std::uint32_t>(i)};
        for (std::size_t k = 0; k < near.size() && grp.size() < static_cast<std::size_t>(m); ++k)
            grp.push_back(near[k]);
        bool ok = true;
        G2 diam{0, 0};
        for (std::size_t a = 0; a < grp.size() && ok; ++a)
            for (std::size_t b = a + 1; b < grp.size() && ok; ++b) {
                const G2 d = dist_sq_small(pts[grp[a]], pts[grp[b]]);
                if (!(golden_of(d.a, d.b) < eps_sq)) ok = false;
                if (cmp_g2(d, diam) > 0) diam = d;
            }
        if (!ok) continue;
        std::vector<std::array<std::int64_t, 4>> sig;
        sig.reserve(grp.size());
        for (const std::uint32_t g : grp) sig.push_back({pts[g].ax, pts[g].bx, pts[g].ay, pts[g].by});
        std::sort(sig.begin(), sig.end());
        if (!seen.insert(sig).second) continue;
        check(out.size() < kClusterGuard, ErrorCode::CapacityExceeded,
              "cluster materialization guard exceeded; tighten epsilon or m");
        Cluster cl;
        cl.y = GoldenScalar(0);
        cl.spread = GoldenScalar(0);
        cl.diam_sq = golden_of(diam.a, diam.b);
        cl.spread_float = std::sqrt(std::max(golden_dbl(diam.a, diam.b), 0.0));
        for (const auto& s : sig) cl.points.push_back(CoeffPoint{s[0], s[1], s[2], s[3]}.to_vec2());
        out.push_back(std::move(cl));
    }
    std::sort(out.begin(), out.end(), [](const Cluster& l, const Cluster& r) {
        const int c = sign(l.diam_sq - r.diam_sq);
        if (c != 0) return c < 0;
        const int cx = sign(l.points[0].x - r.points[0].x);
        if (cx != 0) return cx < 0;
        return sign(l.points[0].y - r.points[0].y) < 0;
    });
    return out;
}

}  // namespace

std::vector<Cluster> find_clusters(const OrbitPointSet& set, const ClusterQuery& q) {
    check(q.m >= 1, ErrorCode::ConfigError, "cluster size m must be >= 1");
    check(q.epsilon > 0, ErrorCode::ConfigError, "epsilon must be positive");
    check(numerator(q.epsilon) <= Int(1'000'000'000'000LL), ErrorCode::ConfigError,
          "epsilon numerator must be <= 10^12");
    check(denominator(q.epsilon) <= 1'000'000, ErrorCode::ConfigError,
          "epsilon denominator must be <= 10^6");
    if (!q.horizontal_only) return find_clusters_general(set, q.m, q.epsilon);
    return find_clusters_horizontal(set, q.m, numerator(q.epsilon).convert_to<std::int64_t>(),
                                    denominator(q.epsilon).convert_to<std::int64_t>());
}

EmptyBall empty_ball_probe(const OrbitPointSet& set, double grid_step) {
    check(grid_step > 0, ErrorCode::ConfigError, "grid step must be positive");
    const double R = rat_to_double(set.radius());

    std::vector<std::pair<double, double>> fq;
    fq.reserve(set.tree_size());
    set.for_each_tree([&](const CoeffPoint& p) {
        fq.emplace_back(golden_dbl(p.ax, p.bx), golden_dbl(p.ay, p.by));
    });

    const double cw = std::max(R / 128.0, 1e-6);
    const std::int64_t ncells = static_cast<std::int64_t>(std::floor(R / cw)) + 2;
    std::vector<std::vector<std::uint32_t>> buckets(
        static_cast<std::size_t>(ncells * ncells));
    const auto cell_of = [&](double v) {
        std::int64_t c = static_cast<std::int64_t>(std::floor(v / cw));
        return c;
    };
    for (std::size_t i = 0; i < fq.size(); ++i) {
        const std::int64_t cx = std::clamp<std::int64_t>(cell_of(fq[i].first), 0, ncells - 1);
        const std::int64_t cy = std::clamp<std::int64_t>(cell_of(fq[i].second), 0, ncells - 1);
        buckets[static_cast<std::size_t>(cx * ncells + cy)].push_back(
            static_cast<std::uint32_t>(i));
    }

    const auto nearest_fq = [&](double qx, double qy) {
        double best = std::numeric_limits<double>::infinity();
        const std::int64_t cx = cell_of(qx), cy = cell_of(qy);
        const std::int64_t max_ring = 2 * ncells + std::llabs(cx) + std::llabs(cy) + 2;
        for (std::int64_t r = 0; r <= max_ring; ++r) {
            if (best <= (static_cast<double>(r) - 1.0) * cw) break;
            for (std::int64_t ix = cx - r; ix <= cx + r; ++ix) {
                for (std::int64_t iy = cy - r; iy <= cy + r; ++iy) {
                    if (std::max(std::llabs(ix - cx), std::llabs(iy - cy)) != r) continue;
                    if (ix < 0 || ix >= ncells || iy < 0 || iy >= ncells) continue;
                    for (const std::uint32_t idx : buckets[static_cast<std::size_t>(ix * ncells + iy)]) {
                        const double dx = fq[idx].first - qx;
                        const double dy = fq[idx].second - qy;
                        best = std::min(best, std::hypot(dx, dy));
                    }
                }
            }
        }
        return best;
    };

    EmptyBall out;
    for (double x = -R; x <= R + 1e-12; x += grid_step) {
        for (double y = -R; y <= R + 1e-12; y += grid_step) {
            ++out.samples;
            // Distance to the full set = min over the four rotated queries
            // against the first-quadrant tree.
            double qx = x, qy = y, d = std::numeric_limits<double>::infinity();
            for (int j = 0; j < 4; ++j) {
                if (j > 0) {
                    const double t = qx;  // rot^{-1}: (x, y) -> (y, -x)
                    qx = qy;
                    qy = -t;
                }
                d = std::min(d, nearest_fq(qx, qy));
            }
            const double bound = R - std::max(std::fabs(x), std::fabs(y));
            const double rad = std::max(0.0, std::min(d, bound));
            if (rad > out.radius) {
                out.radius = rad;
                out.cx = x;
                out.cy = y;
            }
        }
    }
    return out;
}

}  // namespace golden
