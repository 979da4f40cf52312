#include "sgenus/density.hpp"

#include "sgenus/errors.hpp"
#include "sgenus/int_math.hpp"
#include "sgenus/jordan.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace sgenus {

namespace {

void check_odd_prime(i64 p) {
    if (p == 2 || !is_prime(p))
        throw InvalidPrime("expected an odd prime, got " + std::to_string(p));
}

void check_sign(i64 v, const char* what) {
    if (v != 1 && v != -1) throw PreconditionViolated(std::string(what) + " must be +1 or -1");
}

// 1 + 1/p + ... + 1/p^(k-1)
Rational geom_inv_sum(i64 p, int k) {
    Rational s{0};
    Rational term{1};
    Rational ip{1, p};
    for (int j = 0; j < k; ++j) {
        s += term;
        term *= ip;
    }
    return s;
}

Rational inv_pow(i64 p, int k) {
    return Rational{1, ipow(p, k)};
}

} // namespace

i64 congruence_count(const TernaryForm& q, i64 p, int k, i64 m) {
    if (!is_prime(p)) throw InvalidPrime("congruence_count requires a prime");
    if (k < 1) throw PreconditionViolated("congruence_count requires k >= 1");
    i64 mod = ipow(p, k);
    if (mod > 2048) throw PreconditionViolated("congruence modulus too large");
    i64 mm = m % mod;
    if (mm < 0) mm += mod;

    auto red = [mod](i64 v) {
        v %= mod;
        return v < 0 ? v + mod : v;
    };
    // table[L*mod + R] = #{x : a x^2 + L x = R mod p^k}
    std::vector<uint32_t> table(static_cast<size_t>(mod) * static_cast<size_t>(mod), 0);
    for (i64 L = 0; L < mod; ++L)
        for (i64 x = 0; x < mod; ++x)
            ++table[static_cast<size_t>(L) * mod + red(q.a * x % mod * x + L * x)];

    i64 total = 0;
    for (i64 y = 0; y < mod; ++y) {
        for (i64 z = 0; z < mod; ++z) {
            i64 L = red(q.t * y + q.s * z);
            i64 C = red(q.b * y % mod * y + q.c * z % mod * z + q.r * y % mod * z);
            total += table[static_cast<size_t>(L) * mod + red(mm - C)];
        }
    }
    return total;
}

Rational density_three_squares_branch(i64 p, int k, bool odd_ord, i64 chi) {
    check_odd_prime(p);
    if (k < 0) throw PreconditionViolated("negative branch index");
    Rational one{1};
    Rational p2inv{1, p * p};
    if (odd_ord) return (one - p2inv) * geom_inv_sum(p, k + 1);
    check_sign(chi, "chi");
    return (one - p2inv) * geom_inv_sum(p, k) +
           inv_pow(p, k) * (one + Rational{chi, p});
}

Rational density_three_squares_odd(i64 p, i64 m) {
    check_odd_prime(p);
    if (m < 1) throw PreconditionViolated("m must be positive");
    int ord = ord_p(m, p);
    i64 core = m / ipow(p, ord);
    if (ord % 2 == 0) return density_three_squares_branch(p, ord / 2, false, legendre(-core, p));
    return density_three_squares_branch(p, ord / 2, true, 0);
}

Rational density_three_squares_goodbad(i64 p, i64 m) {
    check_odd_prime(p);
    if (m < 1) throw PreconditionViolated("m must be positive");
    if (m % p != 0) return Rational{p * p + p * legendre(-m, p), p * p};
    return Rational{p * p - 1, p * p};
}

Rational density_sgenus_branch(i64 p, i64 eps, int k, bool odd_ord, i64 chi) {
    check_odd_prime(p);
    check_sign(eps, "eps");
    if (k < 0) throw PreconditionViolated("negative branch index");
    Rational one{1};
    Rational head = (one - Rational{1, p}) * Rational{1 + eps} * geom_inv_sum(p, k);
    if (odd_ord) return head + inv_pow(p, k) * (one - Rational{eps, p});
    check_sign(chi, "chi");
    return head + inv_pow(p, k) * (one + Rational{eps * chi});
}

Rational density_sgenus_odd(i64 p, i64 eps, i64 m) {
    check_odd_prime(p);
    check_sign(eps, "eps");
    if (m < 1) throw PreconditionViolated("m must be positive");
    int ord = ord_p(m, p);
    i64 core = m / ipow(p, ord);
    if (ord % 2 == 0) return density_sgenus_branch(p, eps, ord / 2, false, legendre(-core, p));
    return density_sgenus_branch(p, eps, ord / 2, true, 0);
}

Rational density_sgenus_goodbad(i64 p, i64 eps, i64 m) {
    check_odd_prime(p);
    check_sign(eps, "eps");
    if (m < 1) throw PreconditionViolated("m must be positive");
    int ord = ord_p(m, p);
    if (ord == 0) return Rational{1 + eps * legendre(-m, p)};
    if (ord == 1) return Rational{1} - Rational{eps, p};
    return (Rational{1} - Rational{1, p}) * Rational{1 + eps};
}

Rational zero_type_recursion(const Rational& goodbad, const Rational& beta_quotient, i64 p) {
    check_odd_prime(p);
    return goodbad + beta_quotient / Rational{p};
}

namespace {

Rational density_two_counted(const TernaryForm& q, i64 m) {
    if (m < 1) throw PreconditionViolated("m must be positive");
    if (m % 4 == 0) throw UnsupportedOrder("2-adic density requires m not divisible by 4");
    i64 c4 = congruence_count(q, 2, 4, m);
    i64 c5 = congruence_count(q, 2, 5, m);
    if (c5 != 4 * c4)
        throw NotStabilized("2-adic congruence count not stable between 2^4 and 2^5");
    return Rational{c4, 256};
}

} // namespace

Rational density_two_form(const TernaryForm& q, i64 m) {
    return density_two_counted(q, m);
}

Rational density_two_three_squares(i64 m) {
    Rational v = density_two_counted(TernaryForm{1, 1, 1, 0, 0, 0}, m);
    Rational expect = (m % 4 == 3) ? (m % 8 == 3 ? Rational{1} : Rational{0}) : Rational{3, 2};
    if (v != expect)
        throw PreconditionViolated("2-adic count disagrees with the residue table for m = " +
                                   std::to_string(m));
    return v;
}

Rational density_two_sgenus(i64 u, i64 m) {
    if (u % 2 == 0) throw PreconditionViolated("u must be odd");
    Rational v = density_two_counted(TernaryForm{u, 2 * u, 2, 0, 0, 0}, m);
    if (m % 4 == 3) {
        if (!v.is_zero() && v != Rational{2})
            throw PreconditionViolated("2-adic count off the residue table for m = " +
                                       std::to_string(m));
    } else if (v != Rational{1}) {
        throw PreconditionViolated("2-adic count off the residue table for m = " +
                                   std::to_string(m));
    }
    return v;
}

namespace {

// Congruence counts for a p-adically diagonalized form, one power of p at a
// time, with per-axis tables and a length-q convolution.
class DiagonalCounter {
  public:
    DiagonalCounter(const TernaryForm& q, i64 p) : p_(p) {
        auto diag = diagonalize_at_odd_prime(q, p);
        for (int i = 0; i < 3; ++i) {
            mpz_class num = diag[i].num(), den = diag[i].den();
            i64 e = 0;
            while (mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(p))) {
                num /= static_cast<unsigned long>(p);
                ++e;
            }
            exp_[i] = e;
            unit_num_[i] = num;
            unit_den_[i] = den;
        }
    }

    i64 max_exp() const { return *std::max_element(exp_.begin(), exp_.end()); }

    // N_k(mu) = #{v mod p^k : Q(v) = mu mod p^k}; N_0 := 1.
    i64 count(int k, i64 mu) {
        if (k == 0) return 1;
        auto& sums = pair_sums(k);
        i64 q = ipow(p_, k);
        i64 target = mu % q;
        if (target < 0) target += q;
        const auto& a3 = axis(k, 2);
        i64 total = 0;
        for (i64 w = 0; w < q; ++w) {
            i64 rest = target - w;
            if (rest < 0) rest += q;
            total += sums[static_cast<size_t>(w)] * a3[static_cast<size_t>(rest)];
        }
        return total;
    }

  private:
    i64 coeff_mod(int axis_idx, i64 q) const {
        if (exp_[axis_idx] >= 63 || ipow(p_, static_cast<int>(exp_[axis_idx])) >= q) return 0;
        mpz_class qm{static_cast<long>(q)};
        mpz_class n = unit_num_[axis_idx] % qm;
        if (n < 0) n += qm;
        mpz_class d = unit_den_[axis_idx] % qm;
        if (d < 0) d += qm;
        i64 u = n.get_si() * mod_inv(d.get_si(), q) % q;
        return u * ipow(p_, static_cast<int>(exp_[axis_idx])) % q;
    }

    const std::vector<i64>& axis(int k, int idx) {
        auto key = std::make_pair(k, idx);
        auto it = axes_.find(key);
        if (it != axes_.end()) return it->second;
        i64 q = ipow(p_, k);
        i64 c = coeff_mod(idx, q);
        std::vector<i64> a(static_cast<size_t>(q), 0);
        for (i64 x = 0; x < q; ++x) ++a[static_cast<size_t>(c * x % q * x % q)];
        return axes_.emplace(key, std::move(a)).first->second;
    }

    const std::vector<i64>& pair_sums(int k) {
        auto it = pair_.find(k);
        if (it != pair_.end()) return it->second;
        i64 q = ipow(p_, k);
        const auto& a1 = axis(k, 0);
        const auto& a2 = axis(k, 1);
        std::vector<i64> b(static_cast<size_t>(q), 0);
        for (i64 u = 0; u < q; ++u) {
            if (a1[static_cast<size_t>(u)] == 0) continue;
            for (i64 v = 0; v < q; ++v) {
                i64 w = u + v;
                if (w >= q) w -= q;
                b[static_cast<size_t>(w)] += a1[static_cast<size_t>(u)] * a2[static_cast<size_t>(v)];
            }
        }
        return pair_.emplace(k, std::move(b)).first->second;
    }

    i64 p_;
    std::array<i64, 3> exp_{};
    std::array<mpz_class, 3> unit_num_, unit_den_;
    std::map<std::pair<int, int>, std::vector<i64>> axes_;
    std::map<int, std::vector<i64>> pair_;
};

// #{primitive v mod p^k : Q(v) = mu}, via total minus imprimitive.
i64 primitive_count(DiagonalCounter& dc, i64 p, int k, i64 mu) {
    i64 total = dc.count(k, mu);
    if (k == 1) return total - (mu % p == 0 ? 1 : 0);
    if (mu % (p * p) != 0) return total;
    return total - p * p * p * dc.count(k - 2, mu / (p * p));
}

} // namespace

Rational density_generic_oracle(const TernaryForm& q, i64 p, i64 m) {
    check_odd_prime(p);
    if (m < 1) throw PreconditionViolated("m must be positive");
    if (!q.is_positive_definite())
        throw NotPositiveDefinite("density oracle requires a positive definite form");
    DiagonalCounter dc(q, p);
    int k0 = static_cast<int>(2 * dc.max_exp() + 1);
    if (ipow(p, k0 + 1) > 20000)
        throw PreconditionViolated("density oracle modulus too large");
    int ord = ord_p(m, p);
    Rational total{0};
    for (int j = 0; 2 * j <= ord; ++j) {
        i64 mu = m / ipow(p, 2 * j);
        i64 n0 = primitive_count(dc, p, k0, mu);
        i64 n1 = primitive_count(dc, p, k0 + 1, mu);
        if (n1 != p * p * n0)
            throw NotStabilized("primitive congruence count not stable at level " +
                                std::to_string(k0));
        total += Rational{n0, ipow(p, 2 * k0)} * inv_pow(p, j);
    }
    return total;
}

Rational ArchimedeanDensity::pi_multiple() const {
    if (radicand != 1)
        throw IrrationalDet("archimedean density is pi times the irrational sqrt(" +
                            std::to_string(radicand) + ")");
    return coeff;
}

ArchimedeanDensity density_archimedean(const TernaryForm& q, i64 m) {
    if (m < 1) throw PreconditionViolated("m must be positive");
    if (!q.is_positive_definite())
        throw NotPositiveDefinite("archimedean density requires a positive definite form");
    // 2 pi sqrt(m / det) with det the Gram determinant = gram_det4 / 4
    Rational f = Rational{4 * m} / Rational{q.gram_det4()};
    i64 n = f.num().get_si();
    i64 d = f.den().get_si();
    i64 rad = squarefree_part(n * d);
    i64 s = isqrt_floor(n * d / rad);
    return ArchimedeanDensity{Rational{2 * s, d}, rad};
}

} // namespace sgenus
