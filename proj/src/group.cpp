#include "goldenl/group.hpp"

namespace golden {

Vec2 operator*(const GoldenScalar& s, const Vec2& v) { return {s * v.x, s * v.y}; }

std::string to_string(const Vec2& v) {
    return "(" + to_string(v.x) + ", " + to_string(v.y) + ")";
}

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

Vec2 act(const Mat2& a, const Vec2& v) {
    return {a.m11 * v.x + a.m12 * v.y, a.m21 * v.x + a.m22 * v.y};
}

Mat2 mat_inv(const Mat2& a) {
    if (a.det() != GoldenScalar(1))
        raise(ErrorCode::NotUnimodular, "matrix inverse requires determinant 1");
    return {a.m22, -a.m12, -a.m21, a.m11};
}

Mat2 mat_pow(const Mat2& a, const Int& t) {
    if (t < 0) return mat_pow(mat_inv(a), -t);
    Mat2 result = Mat2::identity();
    Mat2 base = a;
    Int n = t;
    while (n > 0) {
        if ((n & 1) != 0) result = mat_mul(result, base);
        base = mat_mul(base, base);
        n >>= 1;
    }
    return result;
}

Mat2 generator(int i) {
    const GoldenScalar one(1), zero(0), ph = GoldenScalar::phi();
    switch (i) {
        case 0: return {one, ph, zero, one};
        case 1: return {ph, ph, one, ph};
        case 2: return {ph, one, ph, ph};
        case 3: return {one, zero, ph, one};
        default: raise(ErrorCode::ConfigError, "generator index must be in {0,1,2,3}");
    }
}

Mat2 generator_inv(int i) {
    const GoldenScalar one(1), zero(0), ph = GoldenScalar::phi();
    switch (i) {
        case 0: return {one, -ph, zero, one};
        case 1: return {ph, -ph, -one, ph};
        case 2: return {ph, -one, -ph, ph};
        case 3: return {one, zero, -ph, one};
        default: raise(ErrorCode::ConfigError, "generator index must be in {0,1,2,3}");
    }
}

Mat2 unipotent_pow(int i, const Int& t) {
    const GoldenScalar one(1), zero(0);
    GoldenScalar tphi(Rat(0), Rat(t));
    if (i == 0) return {one, tphi, zero, one};
    if (i == 3) return {one, zero, tphi, one};
    raise(ErrorCode::ConfigError, "unipotent_pow letter must be 0 or 3");
}

Mat2 rotation_quarter() {
    Mat2 r = generator(0);
    r = mat_mul(r, generator_inv(3));
    r = mat_mul(r, generator(0));
    r = mat_mul(r, generator_inv(3));
    r = mat_mul(r, generator(0));
    const GoldenScalar one(1), zero(0);
    Mat2 expected{zero, -one, one, zero};
    check(r == expected, "rotation_quarter product mismatch");
    return r;
}

void Word::append(int letter, Int count) {
    if (letter < 0 || letter > 3)
        raise(ErrorCode::ConfigError, "word letter must be in {0,1,2,3}");
    if (count < 1) raise(ErrorCode::ConfigError, "run count must be >= 1");
    if (!runs_.empty() && runs_.back().letter == letter) {
        runs_.back().count += count;
    } else {
        runs_.push_back({letter, std::move(count)});
    }
}

Int Word::total_letters() const {
    Int n = 0;
    for (const auto& r : runs_) n += r.count;
    return n;
}

std::string Word::str() const {
    std::string s;
    for (size_t i = 0; i < runs_.size(); ++i) {
        if (i) s += ".";
        s += std::to_string(runs_[i].letter);
        if (runs_[i].count != 1) s += "^" + runs_[i].count.str();
    }
    return s;
}

Word Word::parse(const std::string& s) {
    Word w;
    if (s.empty()) return w;
    size_t i = 0;
    while (i < s.size()) {
        if (!isdigit(static_cast<unsigned char>(s[i])))
            raise(ErrorCode::ParseError, "expected letter in word '" + s + "'");
        int letter = s[i] - '0';
        ++i;
        Int count = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            size_t start = i;
            while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == start) raise(ErrorCode::ParseError, "expected count in word '" + s + "'");
            count = Int(s.substr(start, i - start));
        }
        w.append(letter, count);
        if (i < s.size()) {
            if (s[i] != '.') raise(ErrorCode::ParseError, "expected '.' in word '" + s + "'");
            ++i;
            if (i == s.size()) raise(ErrorCode::ParseError, "trailing '.' in word '" + s + "'");
        }
    }
    return w;
}

Mat2 word_to_matrix(const Word& w) {
    Mat2 result = Mat2::identity();
    for (const auto& r : w.runs()) {
        Mat2 block = (r.letter == 0 || r.letter == 3)
                         ? unipotent_pow(r.letter, r.count)
                         : mat_pow(generator(r.letter), r.count);
        result = mat_mul(result, block);
    }
    return result;
}

}  // namespace golden
