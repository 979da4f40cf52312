#include "sgenus/forms.hpp"

#include "sgenus/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace sgenus {

UnimodularChange UnimodularChange::identity() {
    UnimodularChange u;
    u.u = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    return u;
}

UnimodularChange UnimodularChange::from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
    UnimodularChange u;
    for (int i = 0; i < 3; ++i) {
        u.u[i][0] = c0[i];
        u.u[i][1] = c1[i];
        u.u[i][2] = c2[i];
    }
    if (std::abs(u.det()) != 1)
        throw PreconditionViolated("change of basis must have determinant +-1");
    return u;
}

i64 det3(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
    return c0[0] * (c1[1] * c2[2] - c1[2] * c2[1]) - c1[0] * (c0[1] * c2[2] - c0[2] * c2[1]) +
           c2[0] * (c0[1] * c1[2] - c0[2] * c1[1]);
}

i64 UnimodularChange::det() const {
    Vec3 c0{u[0][0], u[1][0], u[2][0]};
    Vec3 c1{u[0][1], u[1][1], u[2][1]};
    Vec3 c2{u[0][2], u[1][2], u[2][2]};
    return det3(c0, c1, c2);
}

Vec3 UnimodularChange::apply(const Vec3& x) const {
    Vec3 y{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) y[i] += u[i][j] * x[j];
    return y;
}

TernaryForm compose(const TernaryForm& q, const UnimodularChange& u) {
    Mat3 m = q.doubled_gram();
    Mat3 um{}, res{};
    // um = m * u
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) um[i][j] += m[i][k] * u.u[k][j];
    // res = u^T * um
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) res[i][j] += u.u[k][i] * um[k][j];
    TernaryForm out;
    out.a = res[0][0] / 2;
    out.b = res[1][1] / 2;
    out.c = res[2][2] / 2;
    out.r = res[1][2];
    out.s = res[0][2];
    out.t = res[0][1];
    return out;
}

i64 doubled_inner(const TernaryForm& q, const Vec3& v, const Vec3& w) {
    Mat3 m = q.doubled_gram();
    i64 acc = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) acc += v[i] * m[i][j] * w[j];
    return acc;
}

namespace {

void append_term(std::ostringstream& os, i64 coef, const char* mon) {
    if (coef == 0) return;
    if (os.tellp() == std::streampos(0)) {
        if (coef == -1)
            os << "-";
        else if (coef != 1)
            os << coef;
    } else {
        os << (coef > 0 ? " + " : " - ");
        i64 ac = std::abs(coef);
        if (ac != 1) os << ac;
    }
    os << mon;
}

} // namespace

std::string TernaryForm::str() const {
    std::ostringstream os;
    append_term(os, a, "x^2");
    append_term(os, b, "y^2");
    append_term(os, c, "z^2");
    append_term(os, r, "yz");
    append_term(os, s, "xz");
    append_term(os, t, "xy");
    if (os.tellp() == std::streampos(0)) return "0";
    return os.str();
}

std::string BinaryForm::str() const {
    std::ostringstream os;
    append_term(os, a, "x^2");
    append_term(os, b, "xy");
    append_term(os, c, "y^2");
    if (os.tellp() == std::streampos(0)) return "0";
    return os.str();
}

BinaryForm reduce_binary(BinaryForm f) {
    if (!f.is_positive_definite())
        throw NotPositiveDefinite("reduce_binary requires a positive definite form");
    while (!f.is_reduced()) {
        // translate x -> x + qy so that -a < b <= a
        if (f.b > f.a || f.b <= -f.a) {
            i64 twoa = 2 * f.a;
            i64 b = f.b % twoa;
            if (b > f.a) b -= twoa;
            if (b <= -f.a) b += twoa;
            i64 q = (b - f.b) / twoa;
            f.c = f.a * q * q + f.b * q + f.c;
            f.b = b;
        }
        if (f.a > f.c) {
            // swap x and -y
            std::swap(f.a, f.c);
            f.b = -f.b;
        } else if (f.b < 0 && (f.a == f.c || f.b == -f.a)) {
            // negate x (a = c case) or translate off the b = -a boundary
            f.b = -f.b;
        }
    }
    return f;
}

} // namespace sgenus
