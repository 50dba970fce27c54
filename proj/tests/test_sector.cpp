#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "goldenl/constructions.hpp"
#include "goldenl/sector.hpp"

using namespace golden;

namespace {

GoldenScalar gs(long a, long b) { return {Rat(a), Rat(b)}; }
Vec2 v2(long ax, long bx, long ay, long by) { return {gs(ax, bx), gs(ay, by)}; }

// Membership in the half-open sector, straight from the boundary lines.
bool in_sector(const Vec2& v, int k) {
    const GoldenScalar phi = GoldenScalar::phi();
    switch (k) {
        case 0: return sign(v.y) >= 0 && v.y * phi < v.x;  // y < phi^{-1} x
        case 1: return v.y * phi >= v.x && v.y < v.x;
        case 2: return v.y >= v.x && v.y < phi * v.x;
        case 3: return v.y >= phi * v.x && sign(v.x) >= 0;
        default: return false;
    }
}

Vec2 rand_quadrant_vec(std::mt19937_64& eng) {
    std::uniform_int_distribution<long> c(0, 12);
    std::uniform_int_distribution<long> den(1, 4);
    Vec2 v{{Rat(c(eng), den(eng)), Rat(c(eng), den(eng))},
           {Rat(c(eng), den(eng)), Rat(c(eng), den(eng))}};
    return v;
}

}  // namespace

TEST_CASE("classify pinned examples") {
    CHECK(classify(v2(1, 0, 0, 0)) == SectorId::S0);   // (1, 0)
    CHECK(classify(v2(2, 0, 1, 0)) == SectorId::S0);   // (2, 1): 1 < 2/phi
    CHECK(classify(v2(0, 1, 1, 0)) == SectorId::S1);   // (phi, 1): boundary y = x/phi
    CHECK(classify(v2(1, 0, 1, 0)) == SectorId::S2);   // (1, 1): boundary y = x
    CHECK(classify(v2(0, 1, 0, 1)) == SectorId::S2);   // (phi, phi)
    CHECK(classify(v2(1, 0, 0, 1)) == SectorId::S3);   // (1, phi): boundary y = phi x
    CHECK(classify(v2(0, 0, 1, 0)) == SectorId::S3);   // (0, 1)
    CHECK(classify(v2(5, 0, 1, 0)) == SectorId::S0);
}

TEST_CASE("classify rejects the zero vector and other quadrants") {
    CHECK_THROWS_AS(classify(v2(0, 0, 0, 0)), Error);
    CHECK_THROWS_AS(classify(v2(-1, 0, 1, 0)), Error);
    CHECK_THROWS_AS(classify(v2(1, 0, -1, 0)), Error);
    CHECK_THROWS_AS(classify(v2(-1, 0, -1, 0)), Error);
}

TEST_CASE("classify agrees with the boundary-line definition on random vectors") {
    std::mt19937_64 eng(31);
    int seen[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4000; ++i) {
        Vec2 v = rand_quadrant_vec(eng);
        if (v.x.is_zero() && v.y.is_zero()) continue;
        SectorId s = classify(v);
        int k = sector_index(s);
        ++seen[k];
        CHECK(in_sector(v, k));
        for (int other = 0; other < 4; ++other)
            if (other != k) CHECK(!in_sector(v, other));
    }
    for (int k = 0; k < 4; ++k) CHECK(seen[k] > 100);
}

TEST_CASE("descend_once applies the inverse generator and never grows x") {
    std::mt19937_64 eng(37);
    for (int i = 0; i < 2000; ++i) {
        Vec2 v = rand_quadrant_vec(eng);
        if (v.x.is_zero() && v.y.is_zero()) continue;
        auto [k, w] = descend_once(v);
        CHECK(w == act(generator_inv(sector_index(k)), v));
        CHECK(sign(w.x) >= 0);
        CHECK(sign(w.y) >= 0);
        CHECK(w.x <= v.x);
    }
}

TEST_CASE("run_length counts exactly the stay-in-sector steps") {
    std::mt19937_64 eng(41);
    int tested = 0;
    for (int i = 0; i < 4000 && tested < 400; ++i) {
        Vec2 v = rand_quadrant_vec(eng);
        if (v.x.is_zero() && v.y.is_zero()) continue;
        int k = sector_index(classify(v));
        if (k != 0 && k != 3) continue;
        // skip terminal rays where the run never leaves the sector
        if (k == 0 && v.y.is_zero()) continue;
        if (k == 3 && v.x.is_zero()) continue;
        ++tested;
        Int t = run_length(v, k);
        CHECK(t >= 1);
        Mat2 back = mat_pow(generator_inv(k), t - 1);
        Vec2 last = act(back, v);
        CHECK(classify(last) == static_cast<SectorId>(k));
        Vec2 past = act(generator_inv(k), last);
        bool leaves = true;
        if (sign(past.x) >= 0 && sign(past.y) >= 0 && !(past.x.is_zero() && past.y.is_zero()))
            leaves = classify(past) != static_cast<SectorId>(k);
        CHECK(leaves);
    }
    CHECK(tested == 400);
    CHECK_THROWS_AS(run_length(v2(1, 0, 0, 0), 0), Error);  // terminal ray: unbounded
    CHECK_THROWS_AS(run_length(v2(0, 0, 1, 0), 3), Error);
    CHECK_THROWS_AS(run_length(v2(1, 0, 1, 0), 0), Error);  // wrong sector
}

TEST_CASE("gcd certificate for the pinned direction d_3") {
    GcdResult g = gcd_gamma_plus(dk(3));
    CHECK(g.l_v == phi_pow(-5));
    CHECK(g.word.str() == "0^10.3^4.0.2");
    CHECK(g.scaling == 1);
    CHECK(!g.neg_x);
    CHECK(!g.neg_y);
    CHECK(!g.swapped);
    REQUIRE(g.unit_exp.has_value());
    CHECK(*g.unit_exp == -5);
    CHECK(g.reconstruct() == dk(3));
}

TEST_CASE("gcd reconstruction on random inputs, all sign patterns") {
    std::mt19937_64 eng(43);
    std::uniform_int_distribution<long> c(-8, 8);
    std::uniform_int_distribution<long> den(1, 3);
    int done = 0;
    for (int i = 0; i < 3000 && done < 600; ++i) {
        Vec2 v{{Rat(c(eng), den(eng)), Rat(c(eng), den(eng))},
               {Rat(c(eng), den(eng)), Rat(c(eng), den(eng))}};
        if (v.x.is_zero() && v.y.is_zero()) continue;
        ++done;
        GcdResult g = gcd_gamma_plus(v);
        CHECK(g.reconstruct() == v);
        CHECK(sign(g.l_v) > 0);
        if (g.unit_exp.has_value()) CHECK(g.l_v == phi_pow(*g.unit_exp));
    }
    CHECK(done == 600);
    CHECK_THROWS_AS(gcd_gamma_plus(v2(0, 0, 0, 0)), Error);
}

TEST_CASE("iteration cap aborts a deep descent") {
    Vec2 v = dk(50);
    CHECK_THROWS_AS(gcd_gamma_plus(v, Int(1)), Error);
    GcdResult g = gcd_gamma_plus(v, Int(1000));
    CHECK(g.reconstruct() == v);
}

TEST_CASE("is_in_S pinned memberships") {
    CHECK(is_in_S(v2(1, 0, 0, 0)));    // e1
    CHECK(is_in_S(v2(0, 0, 1, 0)));    // e2 = rot e1
    CHECK(is_in_S(v2(-1, 0, 0, 0)));
    CHECK(is_in_S(v2(0, 0, -1, 0)));
    CHECK(is_in_S(v2(0, 1, 1, 0)));    // sigma_1 e1 = (phi, 1)
    CHECK(is_in_S(v2(1, 0, 0, 1)));    // sigma_3 e1 = (1, phi)
    CHECK(is_in_S(v2(0, 1, 0, 1)));    // sigma_2 e1 = (phi, phi)
    CHECK(!is_in_S(v2(1, 0, 1, 0)));   // (1,1): descends to l_v = phi^{-1}
    CHECK(!is_in_S(v2(2, 0, 1, 0)));   // (2,1): descends to l_v = phi^{-3}
    CHECK(!is_in_S(v2(2, 0, 0, 0)));   // (2,0): scaling-free but l_v = 2
    Vec2 half{{Rat(1, 2), Rat(0)}, {Rat(0), Rat(0)}};
    CHECK(!is_in_S(half));             // needs scaling
}

TEST_CASE("json certificate mentions every certificate field") {
    GcdResult g = gcd_gamma_plus(v2(0, 1, 1, 0));
    std::string j = g.to_json();
    CHECK(j.find("\"word\"") != std::string::npos);
    CHECK(j.find("\"l_v\"") != std::string::npos);
    CHECK(j.find("\"scaling\"") != std::string::npos);
    CHECK(j.find("\"reflected\"") != std::string::npos);
}
