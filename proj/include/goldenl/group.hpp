#pragma once

#include <string>
#include <vector>

#include "goldenl/ring.hpp"

namespace golden {

struct Vec2 {
    GoldenScalar x, y;

    Vec2() = default;
    Vec2(GoldenScalar x_, GoldenScalar y_) : x(std::move(x_)), y(std::move(y_)) {}

    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }

    GoldenScalar norm_sq() const { return x * x + y * y; }
    bool is_zero() const { return x.is_zero() && y.is_zero(); }

    static Vec2 e1() { return {GoldenScalar(1), GoldenScalar(0)}; }
};

Vec2 operator*(const GoldenScalar& s, const Vec2& v);
std::string to_string(const Vec2& v);

// 2x2 matrix over GoldenScalar, row-major.
struct Mat2 {
    GoldenScalar m11, m12, m21, m22;

    bool operator==(const Mat2& o) const {
        return m11 == o.m11 && m12 == o.m12 && m21 == o.m21 && m22 == o.m22;
    }
    bool operator!=(const Mat2& o) const { return !(*this == o); }

    static Mat2 identity() {
        return {GoldenScalar(1), GoldenScalar(0), GoldenScalar(0), GoldenScalar(1)};
    }

    GoldenScalar det() const { return m11 * m22 - m12 * m21; }
};

Mat2 mat_mul(const Mat2& a, const Mat2& b);
Vec2 act(const Mat2& a, const Vec2& v);
// Adjugate inverse for unimodular matrices; NotUnimodular when det != 1.
Mat2 mat_inv(const Mat2& a);
// A^t by binary powering (t may be negative; uses mat_inv).
Mat2 mat_pow(const Mat2& a, const Int& t);

// The four parabolic generators:
//   sigma_0 = [[1,phi],[0,1]]   sigma_1 = [[phi,phi],[1,phi]]
//   sigma_2 = [[phi,1],[phi,phi]]   sigma_3 = [[1,0],[phi,1]]
// Each has determinant 1.
Mat2 generator(int i);
Mat2 generator_inv(int i);

// Closed-form unipotent powers, O(1) in t (t may be negative):
//   sigma_0^t = [[1, t*phi],[0,1]],  sigma_3^t = [[1,0],[t*phi,1]]
Mat2 unipotent_pow(int i, const Int& t);

// sigma_0 sigma_3^{-1} sigma_0 sigma_3^{-1} sigma_0, asserted equal to
// [[0,-1],[1,0]] (rotation by pi/2).
Mat2 rotation_quarter();

// Word over the alphabet {0,1,2,3}, run-length encoded; counts >= 1.
// Serializes compactly as "0^10.3^4.0.2" (letter, optional ^count, dots).
class Word {
  public:
    struct Run {
        int letter;
        Int count;
        bool operator==(const Run& o) const { return letter == o.letter && count == o.count; }
    };

    Word() = default;

    // Appends `count` copies of `letter`, merging with the trailing run.
    void append(int letter, Int count = 1);

    const std::vector<Run>& runs() const { return runs_; }
    bool empty() const { return runs_.empty(); }
    size_t run_count() const { return runs_.size(); }
    Int total_letters() const;

    bool operator==(const Word& o) const { return runs_ == o.runs_; }
    bool operator!=(const Word& o) const { return !(*this == o); }

    std::string str() const;
    static Word parse(const std::string& s);

  private:
    std::vector<Run> runs_;
};

// Product sigma_{k_0} ... sigma_{k_n} in written order (empty word ->
// identity).  Runs of letters 0 and 3 use the closed form; runs of 1 and 2
// use binary powering.
Mat2 word_to_matrix(const Word& w);

}  // namespace golden
