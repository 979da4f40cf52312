#include "sgenus/reduction.hpp"

#include "sgenus/errors.hpp"
#include "sgenus/rational.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>

namespace sgenus {

namespace {

i64 to_i64(const mpz_class& z) {
    if (!z.fits_slong_p())
        throw PreconditionViolated("integer out of native range");
    return static_cast<i64>(z.get_si());
}

mpz_class floor_div(const mpz_class& n, const mpz_class& d) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

// Largest integer n with (n - c)^2 <= r2 or n <= c; requires r2 >= 0.
i64 upper_bound_int(const Rational& c, const Rational& r2) {
    mpz_class fl = floor_div(c.num(), c.den());
    mpz_class root = sqrt(floor_div(r2.num(), r2.den()));
    mpz_class n = fl + root + 3;
    auto ok = [&](const mpz_class& k) {
        Rational kr{mpz_class(k)};
        if (kr <= c) return true;
        Rational d = kr - c;
        return d * d <= r2;
    };
    while (!ok(n)) --n;
    return to_i64(n);
}

i64 lower_bound_int(const Rational& c, const Rational& r2) {
    return -upper_bound_int(-c, r2);
}

bool parallel(const Vec3& u, const Vec3& v) {
    return u[1] * v[2] - u[2] * v[1] == 0 && u[2] * v[0] - u[0] * v[2] == 0 &&
           u[0] * v[1] - u[1] * v[0] == 0;
}

} // namespace

std::vector<Vec3> short_vectors(const TernaryForm& q, i64 bound) {
    if (!q.is_positive_definite())
        throw NotPositiveDefinite("short_vectors requires a positive definite form");
    std::vector<Vec3> out;
    if (bound <= 0) return out;

    // Q = a(x + alpha*y + beta*z)^2 + q22*(y + gamma*z)^2 + q33*z^2
    Rational a{q.a};
    Rational alpha = Rational{q.t} / Rational{2 * q.a};
    Rational beta = Rational{q.s} / Rational{2 * q.a};
    Rational q22 = Rational{q.b} - Rational{q.t} * alpha / Rational{2};
    Rational rp = Rational{q.r} - Rational{q.t} * beta;
    Rational gamma = rp / (Rational{2} * q22);
    Rational q33 = Rational{q.c} - Rational{q.s} * beta / Rational{2} - q22 * gamma * gamma;
    Rational B{bound};

    i64 zmax = upper_bound_int(Rational{0}, B / q33);
    for (i64 z = -zmax; z <= zmax; ++z) {
        Rational rem1 = B - q33 * Rational{z} * Rational{z};
        Rational yc = -gamma * Rational{z};
        Rational yr2 = rem1 / q22;
        i64 ylo = lower_bound_int(yc, yr2);
        i64 yhi = upper_bound_int(yc, yr2);
        for (i64 y = ylo; y <= yhi; ++y) {
            Rational dy = Rational{y} - yc;
            Rational rem2 = rem1 - q22 * dy * dy;
            Rational xc = -alpha * Rational{y} - beta * Rational{z};
            Rational xr2 = rem2 / a;
            i64 xlo = lower_bound_int(xc, xr2);
            i64 xhi = upper_bound_int(xc, xr2);
            for (i64 x = xlo; x <= xhi; ++x) {
                if (x == 0 && y == 0 && z == 0) continue;
                out.push_back(Vec3{x, y, z});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<i64> theta_counts(const TernaryForm& q, i64 bound) {
    if (bound < 0) throw PreconditionViolated("theta_counts requires bound >= 0");
    std::vector<i64> counts(static_cast<size_t>(bound) + 1, 0);
    counts[0] = 1;
    for (const Vec3& v : short_vectors(q, bound)) ++counts[static_cast<size_t>(q.evaluate(v[0], v[1], v[2]))];
    return counts;
}

i64 representation_count(const TernaryForm& q, i64 m) {
    if (m < 0) throw PreconditionViolated("representation_count requires m >= 0");
    if (m == 0) return 1;
    i64 n = 0;
    for (const Vec3& v : short_vectors(q, m))
        if (q.evaluate(v[0], v[1], v[2]) == m) ++n;
    return n;
}

std::pair<i64, i64> successive_minima2(const TernaryForm& q) {
    if (!q.is_positive_definite())
        throw NotPositiveDefinite("successive_minima2 requires a positive definite form");
    i64 bound = std::min({q.a, q.b, q.c});
    for (;;) {
        auto vs = short_vectors(q, bound);
        if (!vs.empty()) {
            i64 mu1 = std::numeric_limits<i64>::max();
            Vec3 v1{};
            for (const Vec3& v : vs) {
                i64 n = q.evaluate(v[0], v[1], v[2]);
                if (n < mu1) {
                    mu1 = n;
                    v1 = v;
                }
            }
            i64 mu2 = std::numeric_limits<i64>::max();
            for (const Vec3& v : vs) {
                if (parallel(v1, v)) continue;
                mu2 = std::min(mu2, q.evaluate(v[0], v[1], v[2]));
            }
            if (mu2 != std::numeric_limits<i64>::max()) return {mu1, mu2};
        }
        bound *= 2;
    }
}

ReductionResult reduce_ternary(const TernaryForm& q) {
    if (!q.is_positive_definite())
        throw NotPositiveDefinite("reduce_ternary requires a positive definite form");
    auto [mu1, mu2] = successive_minima2(q);
    i64 g4 = q.gram_det4();
    i64 bv = std::max(g4 / (2 * mu1 * mu2), mu2);
    auto vecs = short_vectors(q, bv);

    std::vector<i64> norms(vecs.size());
    for (size_t i = 0; i < vecs.size(); ++i) norms[i] = q.evaluate(vecs[i][0], vecs[i][1], vecs[i][2]);
    std::vector<size_t> order(vecs.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
        if (norms[i] != norms[j]) return norms[i] < norms[j];
        return vecs[i] < vecs[j];
    });

    std::array<i64, 6> best{};
    bool have = false;
    Vec3 b1{}, b2{}, b3{};
    for (size_t i1 : order) {
        if (norms[i1] != mu1) break;
        const Vec3& v1 = vecs[i1];
        for (size_t i2 : order) {
            if (norms[i2] < mu2) continue;
            if (norms[i2] > mu2) break;
            const Vec3& v2 = vecs[i2];
            i64 tt = doubled_inner(q, v1, v2);
            if (tt > mu1 || tt < -mu1) continue;
            for (size_t i3 : order) {
                i64 n3 = norms[i3];
                if (n3 < mu2) continue;
                if (4 * mu1 * mu2 * n3 > 2 * g4) break;
                if (have && n3 > best[2]) break;
                const Vec3& v3 = vecs[i3];
                i64 ss = doubled_inner(q, v1, v3);
                if (ss > mu1 || ss < -mu1) continue;
                i64 rr = doubled_inner(q, v2, v3);
                if (rr > mu2 || rr < -mu2) continue;
                i64 d = det3(v1, v2, v3);
                if (d != 1 && d != -1) continue;
                std::array<i64, 6> tup{mu1, mu2, n3, rr, ss, tt};
                if (!have || tup < best) {
                    have = true;
                    best = tup;
                    b1 = v1;
                    b2 = v2;
                    b3 = v3;
                }
            }
        }
    }
    if (!have) throw PreconditionViolated("reduction search exhausted without a basis");

    TernaryForm canon{best[0], best[1], best[2], best[3], best[4], best[5]};
    if (canon == q) return {q, UnimodularChange::identity()};
    ReductionResult res{canon, UnimodularChange::from_columns(b1, b2, b3)};
    if (compose(q, res.change) != canon)
        throw PreconditionViolated("reduction change of basis does not reproduce the canonical form");
    return res;
}

bool is_equivalent(const TernaryForm& q1, const TernaryForm& q2) {
    if (!q1.is_positive_definite() || !q2.is_positive_definite())
        throw NotPositiveDefinite("is_equivalent requires positive definite forms");
    if (q1.gram_det4() != q2.gram_det4()) return false;
    return reduce_ternary(q1).form == reduce_ternary(q2).form;
}

i64 isometry_count(const TernaryForm& q1, const TernaryForm& q2) {
    if (!q1.is_positive_definite() || !q2.is_positive_definite())
        throw NotPositiveDefinite("isometry_count requires positive definite forms");
    if (q1.gram_det4() != q2.gram_det4()) return 0;
    std::array<i64, 3> target{q2.a, q2.b, q2.c};
    auto vecs = short_vectors(q1, std::max({q2.a, q2.b, q2.c}));
    std::map<i64, std::vector<Vec3>> by_norm;
    for (const Vec3& v : vecs) by_norm[q1.evaluate(v[0], v[1], v[2])].push_back(v);
    for (i64 n : target)
        if (by_norm.find(n) == by_norm.end()) return 0;

    i64 count = 0;
    for (const Vec3& w1 : by_norm[target[0]]) {
        for (const Vec3& w2 : by_norm[target[1]]) {
            if (doubled_inner(q1, w1, w2) != q2.t) continue;
            for (const Vec3& w3 : by_norm[target[2]]) {
                if (doubled_inner(q1, w1, w3) != q2.s) continue;
                if (doubled_inner(q1, w2, w3) != q2.r) continue;
                i64 d = det3(w1, w2, w3);
                if (d != 1 && d != -1) continue;
                ++count;
            }
        }
    }
    return count;
}

i64 automorphism_count(const TernaryForm& q) {
    return isometry_count(q, q);
}

} // namespace sgenus
