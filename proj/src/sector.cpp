#include "goldenl/sector.hpp"

#include <cstdlib>

namespace golden {

namespace {

const GoldenScalar kPhi = GoldenScalar::phi();

}  // namespace

SectorId classify(const Vec2& v) {
    if (v.is_zero()) raise(ErrorCode::ZeroVector, "classify: zero vector");
    if (sign(v.x) < 0 || sign(v.y) < 0)
        raise(ErrorCode::OutOfQuadrant, "classify: " + to_string(v) + " is outside the closed first quadrant");
    // y < phi^{-1} x  <=>  phi y < x
    if (sign(v.x - kPhi * v.y) > 0) return SectorId::S0;
    if (sign(v.x - v.y) > 0) return SectorId::S1;         // phi^{-1} x <= y < x
    if (sign(kPhi * v.x - v.y) > 0) return SectorId::S2;  // x <= y < phi x
    return SectorId::S3;                                  // phi x <= y
}

std::pair<SectorId, Vec2> descend_once(const Vec2& v) {
    SectorId k = classify(v);
    return {k, act(generator_inv(sector_index(k)), v)};
}

namespace {

// sigma_0^{-t} v = (x - t*phi*y, y);  sigma_3^{-t} v = (x, y - t*phi*x)
Vec2 apply_run(const Vec2& v, int k, const Int& t) {
    GoldenScalar tphi(Rat(0), Rat(t));
    if (k == 0) return {v.x - tphi * v.y, v.y};
    return {v.x, v.y - tphi * v.x};
}

bool in_sector(const Vec2& v, int k) {
    return sector_index(classify(v)) == k;
}

// Exhaustive fallback: doubling search for the largest t >= 1 with
// sigma_k^{-(t-1)} v still in Sigma_k.
Int run_length_search(const Vec2& v, int k) {
    Int lo = 1;  // invariant: sigma^{-(lo-1)} v in sector
    Int hi = 2;
    while (in_sector(apply_run(v, k, hi - 1), k)) {
        lo = hi;
        hi *= 2;
    }
    // binary search in (lo, hi)
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (in_sector(apply_run(v, k, mid - 1), k))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

Int run_length(const Vec2& v, int k) {
    if (k != 0 && k != 3) raise(ErrorCode::ConfigError, "run_length letter must be 0 or 3");
    if (!in_sector(v, k))
        raise(ErrorCode::WrongSector, "run_length: vector not in Sigma_" + std::to_string(k));
    // terminal rays: sigma_0^{-1} fixes (x, 0), sigma_3^{-1} fixes (0, y)
    if (k == 0 && sign(v.y) == 0)
        raise(ErrorCode::Unbounded, "run_length: terminal ray y = 0");
    if (k == 3 && sign(v.x) == 0)
        raise(ErrorCode::Unbounded, "run_length: terminal ray x = 0");

    // Closed forms from the half-open boundary lines.
    //   k = 0: staying needs phi*y < x - t*phi*y, i.e. t < C - 1, C = x/(phi y);
    //          run = t_stay + 1 = ceil(C - 1) = floor(C), minus 1 if C integral.
    //   k = 3: staying needs phi*x <= y - t*phi*x, i.e. t <= C' - 1, C' = y/(phi x);
    //          run = floor(C' - 1) + 1 = floor(C') in both integrality cases.
    Int t;
    if (k == 0) {
        GoldenScalar c = gdiv(v.x, kPhi * v.y);
        auto [fl, frac] = floor_frac(c);
        t = frac.is_zero() ? fl - 1 : fl;
    } else {
        GoldenScalar c = gdiv(v.y, kPhi * v.x);
        t = gfloor(c);
    }

    // Guard the floor expression with two exact classify calls.
    if (t >= 1 && in_sector(apply_run(v, k, t - 1), k) && !in_sector(apply_run(v, k, t), k))
        return t;
    return run_length_search(v, k);
}

Vec2 GcdResult::reconstruct() const {
    Vec2 v = act(word_to_matrix(word), Vec2::e1());
    v = l_v * v;
    if (swapped) std::swap(v.x, v.y);
    if (neg_x) v.x = -v.x;
    if (neg_y) v.y = -v.y;
    GoldenScalar inv_scale(Rat(1) / scaling);
    return {inv_scale * v.x, inv_scale * v.y};
}

namespace {

std::string rat_json(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace

std::string GcdResult::to_json() const {
    std::string s = "{";
    s += "\"word\": \"" + word.str() + "\", ";
    s += "\"l_v\": \"" + to_string(l_v) + "\", ";
    if (unit_exp) s += "\"unit_exponent\": " + std::to_string(*unit_exp) + ", ";
    s += "\"scaling\": \"" + rat_json(scaling) + "\", ";
    s += std::string("\"reflected\": [") + (neg_x ? "true" : "false") + ", " +
         (neg_y ? "true" : "false") + "], ";
    s += std::string("\"swapped\": ") + (swapped ? "true" : "false");
    s += "}";
    return s;
}

Int default_iteration_cap() {
    static const Int cap = [] {
        if (const char* env = std::getenv("ORBIT_ITER_CAP")) {
            try {
                Int v(env);
                if (v > 0) return v;
            } catch (...) {
            }
        }
        return Int(1000000);
    }();
    return cap;
}

GcdResult gcd_gamma_plus(const Vec2& v) { return gcd_gamma_plus(v, default_iteration_cap()); }

GcdResult gcd_gamma_plus(const Vec2& v, const Int& iteration_cap) {
    if (v.is_zero()) raise(ErrorCode::ZeroVector, "gcd_gamma_plus: zero vector");

    GcdResult result;
    Vec2 w = v;
    // (1) record sign flags, move to the closed first quadrant
    if (sign(w.x) < 0) {
        result.neg_x = true;
        w.x = -w.x;
    }
    if (sign(w.y) < 0) {
        result.neg_y = true;
        w.y = -w.y;
    }
    // y-axis inputs are fixed by sigma_3^{-1}; swap onto the terminal x-axis
    if (sign(w.x) == 0) {
        result.swapped = true;
        std::swap(w.x, w.y);
    }
    // (2) clear denominators with the least common positive denominator
    Int den = lcm(lcm(denominator(w.x.a), denominator(w.x.b)),
                  lcm(denominator(w.y.a), denominator(w.y.b)));
    result.scaling = Rat(den);
    if (den != 1) {
        GoldenScalar d{Rat(den)};
        w = {d * w.x, d * w.y};
    }

    // (3) descend with run-length batching until the terminal ray y = 0
    Int batches = 0;
    while (sign(w.y) != 0) {
        SectorId k = classify(w);
        int ki = sector_index(k);
        if (ki == 0 || ki == 3) {
            Int t = run_length(w, ki);
            w = apply_run(w, ki, t);
            result.word.append(ki, t);
        } else {
            w = act(generator_inv(ki), w);
            result.word.append(ki, 1);
        }
        if (++batches > iteration_cap)
            raise(ErrorCode::IterationCap,
                  "gcd_gamma_plus: itinerary exceeded " + iteration_cap.str() + " batches");
    }

    // (4) terminal x-coordinate is the gcd representative
    result.l_v = w.x;
    check(sign(result.l_v) > 0, "gcd terminal value must be positive");
    if (result.l_v.is_golden_integer()) {
        Rat n = field_norm(result.l_v);
        if (n == 1 || n == -1) result.unit_exp = unit_exponent(result.l_v);
    }
    return result;
}

bool is_in_S(const Vec2& v) {
    GcdResult g = gcd_gamma_plus(v);
    return g.scaling == 1 && g.l_v == GoldenScalar(1);
}

}  // namespace golden
