#pragma once

#include "sgenus/int_math.hpp"
#include "sgenus/rational.hpp"

#include <array>
#include <compare>
#include <string>

namespace sgenus {

using Vec3 = std::array<i64, 3>;
using Mat3 = std::array<std::array<i64, 3>, 3>; // row-major

// Integer change of basis with determinant +-1.  Column j holds the image of
// the j-th standard basis vector.
struct UnimodularChange {
    Mat3 u{};

    static UnimodularChange identity();
    static UnimodularChange from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);
    i64 det() const;
    Vec3 apply(const Vec3& x) const; // u * x
};

i64 det3(const Vec3& c0, const Vec3& c1, const Vec3& c2);

// Integer-valued ternary quadratic form
//   Q(x,y,z) = a x^2 + b y^2 + c z^2 + r yz + s xz + t xy.
struct TernaryForm {
    i64 a{}, b{}, c{}, r{}, s{}, t{};

    i64 evaluate(i64 x, i64 y, i64 z) const {
        return a * x * x + b * y * y + c * z * z + r * y * z + s * x * z + t * x * y;
    }
    i64 evaluate(const Vec3& v) const { return evaluate(v[0], v[1], v[2]); }

    // Doubled Gram matrix [[2a,t,s],[t,2b,r],[s,r,2c]]; Q(v) = v^T M v / 2.
    Mat3 doubled_gram() const {
        return {{{2 * a, t, s}, {t, 2 * b, r}, {s, r, 2 * c}}};
    }
    // 4 * det(Gram matrix); always an integer.
    i64 gram_det4() const {
        return 4 * a * b * c + r * s * t - a * r * r - b * s * s - c * t * t;
    }
    Rational gram_det() const { return Rational(gram_det4(), 4); }

    bool is_positive_definite() const {
        return a > 0 && 4 * a * b - t * t > 0 && gram_det4() > 0;
    }

    auto coeffs() const { return std::array<i64, 6>{a, b, c, r, s, t}; }
    friend bool operator==(const TernaryForm&, const TernaryForm&) = default;
    friend auto operator<=>(const TernaryForm& f, const TernaryForm& g) {
        return f.coeffs() <=> g.coeffs();
    }

    std::string str() const;
};

// Q(U x) as a ternary form; exact, via the doubled Gram matrix.
TernaryForm compose(const TernaryForm& q, const UnimodularChange& u);

// 2 * B(v, w) where B is the bilinear form of q: v^T (doubled Gram) w.
i64 doubled_inner(const TernaryForm& q, const Vec3& v, const Vec3& w);

// Binary quadratic form f(x,y) = a x^2 + b xy + c y^2.
struct BinaryForm {
    i64 a{}, b{}, c{};

    i64 evaluate(i64 x, i64 y) const { return a * x * x + b * x * y + c * y * y; }
    i64 disc() const { return b * b - 4 * a * c; }
    bool is_positive_definite() const { return a > 0 && disc() < 0; }
    // Reduced: |b| <= a <= c, with b >= 0 whenever |b| = a or a = c.
    bool is_reduced() const {
        if (!(std::abs(b) <= a && a <= c)) return false;
        if ((std::abs(b) == a || a == c) && b < 0) return false;
        return true;
    }

    auto coeffs() const { return std::array<i64, 3>{a, b, c}; }
    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
    friend auto operator<=>(const BinaryForm& f, const BinaryForm& g) {
        return f.coeffs() <=> g.coeffs();
    }

    std::string str() const;
};

// Gauss reduction of a positive definite binary form.
BinaryForm reduce_binary(BinaryForm f);

} // namespace sgenus
