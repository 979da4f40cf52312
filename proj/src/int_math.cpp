#include "sgenus/int_math.hpp"

#include "sgenus/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sgenus {

i64 ipow(i64 base, int exp) {
    i64 r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

i64 isqrt_floor(i64 n) {
    if (n < 0) throw std::domain_error("isqrt of negative number");
    if (n == 0) return 0;
    i64 x = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (x > 0 && x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

bool is_perfect_square(i64 n, i64* root) {
    if (n < 0) return false;
    i64 r = isqrt_floor(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

int ord_p(i64 n, i64 p) {
    if (n == 0) throw std::domain_error("ord_p of zero");
    int k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    if (n < 1) throw std::domain_error("factorize requires n >= 1");
    std::vector<std::pair<i64, int>> out;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_squarefree(i64 n) {
    for (auto& [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

i64 squarefree_part(i64 n) {
    i64 out = 1;
    for (auto& [p, e] : factorize(n))
        if (e % 2 == 1) out *= p;
    return out;
}

std::vector<i64> divisors(i64 n) {
    std::vector<i64> out{1};
    for (auto& [p, e] : factorize(n)) {
        size_t sz = out.size();
        i64 pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

i64 mod_pow(i64 base, i64 exp, i64 mod) {
    base %= mod;
    if (base < 0) base += mod;
    i64 r = 1 % mod;
    while (exp > 0) {
        if (exp & 1) r = static_cast<i64>((__int128)r * base % mod);
        base = static_cast<i64>((__int128)base * base % mod);
        exp >>= 1;
    }
    return r;
}

i64 mod_inv(i64 a, i64 mod) {
    i64 t = 0, new_t = 1, r = mod, new_r = a % mod;
    if (new_r < 0) new_r += mod;
    while (new_r != 0) {
        i64 q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw std::domain_error("mod_inv: arguments not coprime");
    return t < 0 ? t + mod : t;
}

int kronecker(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        int e = 0;
        while (n % 2 == 0) {
            n /= 2;
            ++e;
        }
        i64 am8 = ((a % 8) + 8) % 8;
        if (e % 2 == 1 && (am8 == 3 || am8 == 5)) sign = -sign;
    }
    // now n odd positive: Jacobi symbol by reciprocity
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

int legendre(i64 a, i64 p) {
    if (p == 2 || !is_prime(p)) throw InvalidPrime("legendre symbol requires an odd prime");
    return kronecker(a, p);
}

} // namespace sgenus
