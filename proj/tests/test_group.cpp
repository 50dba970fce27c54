#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "goldenl/group.hpp"

using namespace golden;

namespace {

GoldenScalar gs(long a, long b) { return {Rat(a), Rat(b)}; }

Mat2 rand_word_matrix(std::mt19937_64& eng, int len) {
    Mat2 m = Mat2::identity();
    std::uniform_int_distribution<int> gen(0, 3);
    for (int i = 0; i < len; ++i) m = mat_mul(m, generator(gen(eng)));
    return m;
}

}  // namespace

TEST_CASE("generators have determinant one and the pinned entries") {
    const GoldenScalar phi = GoldenScalar::phi();
    for (int i = 0; i < 4; ++i) CHECK(generator(i).det() == GoldenScalar(1));
    CHECK(generator(0).m12 == phi);
    CHECK(generator(0).m21 == GoldenScalar(0));
    CHECK(generator(3).m21 == phi);
    CHECK((generator(1) == Mat2{phi, phi, GoldenScalar(1), phi}));
    CHECK((generator(2) == Mat2{phi, GoldenScalar(1), phi, phi}));
    CHECK_THROWS_AS(generator(4), Error);
    CHECK_THROWS_AS(generator(-1), Error);
}

TEST_CASE("generator images of e1") {
    Vec2 e1 = Vec2::e1();
    CHECK((act(generator(0), e1) == Vec2{gs(1, 0), gs(0, 0)}));
    CHECK((act(generator(1), e1) == Vec2{gs(0, 1), gs(1, 0)}));
    CHECK((act(generator(2), e1) == Vec2{gs(0, 1), gs(0, 1)}));
    CHECK((act(generator(3), e1) == Vec2{gs(1, 0), gs(0, 1)}));
}

TEST_CASE("inverses and mat_inv agree") {
    for (int i = 0; i < 4; ++i) {
        CHECK(mat_mul(generator(i), generator_inv(i)) == Mat2::identity());
        CHECK(mat_mul(generator_inv(i), generator(i)) == Mat2::identity());
        CHECK(generator_inv(i) == mat_inv(generator(i)));
    }
    std::mt19937_64 eng(11);
    for (int t = 0; t < 200; ++t) {
        Mat2 m = rand_word_matrix(eng, 6);
        CHECK(mat_mul(m, mat_inv(m)) == Mat2::identity());
    }
    Mat2 not_unimodular{gs(2, 0), gs(0, 0), gs(0, 0), gs(1, 0)};
    CHECK_THROWS_AS(mat_inv(not_unimodular), Error);
}

TEST_CASE("mat_pow matches repeated multiplication, including negative powers") {
    std::mt19937_64 eng(23);
    for (int trial = 0; trial < 50; ++trial) {
        Mat2 m = rand_word_matrix(eng, 3);
        Mat2 acc = Mat2::identity();
        for (long t = 0; t <= 6; ++t) {
            CHECK(mat_pow(m, Int(t)) == acc);
            CHECK(mat_pow(m, Int(-t)) == mat_inv(acc));
            acc = mat_mul(acc, m);
        }
    }
}

TEST_CASE("unipotent powers are closed-form shears") {
    for (long t = -20; t <= 20; ++t) {
        CHECK(unipotent_pow(0, Int(t)) == mat_pow(generator(0), Int(t)));
        CHECK(unipotent_pow(3, Int(t)) == mat_pow(generator(3), Int(t)));
    }
    CHECK(unipotent_pow(0, Int(1'000'000)).m12 == gs(0, 1'000'000));
    CHECK_THROWS_AS(unipotent_pow(1, Int(2)), Error);
    CHECK_THROWS_AS(unipotent_pow(2, Int(2)), Error);
}

TEST_CASE("quarter rotation") {
    Mat2 r = rotation_quarter();
    CHECK(r == (Mat2{gs(0, 0), gs(-1, 0), gs(1, 0), gs(0, 0)}));
    Mat2 r4 = mat_pow(r, Int(4));
    CHECK(r4 == Mat2::identity());
    CHECK((act(r, Vec2::e1()) == Vec2{gs(0, 0), gs(1, 0)}));
}

TEST_CASE("vector arithmetic and norms") {
    Vec2 v{GoldenScalar::phi(), GoldenScalar(1)};
    CHECK(v.norm_sq() == gs(2, 1));  // phi^2 + 1 = 2 + phi
    CHECK((v - v).is_zero());
    CHECK((-v + v == Vec2{gs(0, 0), gs(0, 0)}));
    CHECK((GoldenScalar::phi() * Vec2::e1() == Vec2{gs(0, 1), gs(0, 0)}));
    CHECK(to_string(v) == "(0+1*phi, 1+0*phi)");
}

TEST_CASE("words: append, runs, parse/str round trip") {
    Word w;
    w.append(0, Int(10));
    w.append(3, Int(4));
    w.append(0);
    w.append(2);
    CHECK(w.str() == "0^10.3^4.0.2");
    CHECK(w.run_count() == 4);
    CHECK(w.total_letters() == 16);
    CHECK(Word::parse("0^10.3^4.0.2") == w);
    CHECK(Word::parse("") == Word{});
    CHECK(Word{}.empty());

    // appending the same letter merges runs
    Word m;
    m.append(1);
    m.append(1, Int(2));
    CHECK(m.str() == "1^3");
    CHECK(m.run_count() == 1);

    CHECK_THROWS_AS(Word{}.append(4), Error);
    CHECK_THROWS_AS(Word{}.append(0, Int(0)), Error);
    CHECK_THROWS_AS(Word{}.append(0, Int(-2)), Error);
    CHECK_THROWS_AS(Word::parse("0^"), Error);
    CHECK_THROWS_AS(Word::parse("5"), Error);
    CHECK_THROWS_AS(Word::parse("0..1"), Error);
}

TEST_CASE("word_to_matrix multiplies the runs in order") {
    CHECK(word_to_matrix(Word{}) == Mat2::identity());

    Word w = Word::parse("0^3.1.2^2");
    Mat2 expect = mat_pow(generator(0), Int(3));
    expect = mat_mul(expect, generator(1));
    expect = mat_mul(expect, mat_pow(generator(2), Int(2)));
    CHECK(word_to_matrix(w) == expect);

    // a long unipotent run stays closed-form cheap
    Word big;
    big.append(0, Int("123456789123456789"));
    CHECK(word_to_matrix(big).m12 == GoldenScalar(Rat(0), Rat(Int("123456789123456789"))));

    std::mt19937_64 eng(5);
    std::uniform_int_distribution<int> gen(0, 3);
    std::uniform_int_distribution<int> cnt(1, 5);
    for (int trial = 0; trial < 100; ++trial) {
        Word a, b;
        Mat2 direct = Mat2::identity();
        for (int i = 0; i < 8; ++i) {
            int g = gen(eng), c = cnt(eng);
            a.append(g, Int(c));
            direct = mat_mul(direct, mat_pow(generator(g), Int(c)));
        }
        CHECK(word_to_matrix(a) == direct);
        CHECK(Word::parse(a.str()) == a);
        (void)b;
    }
}
