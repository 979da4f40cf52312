#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace sgenus {

using i64 = std::int64_t;

i64 ipow(i64 base, int exp);
i64 isqrt_floor(i64 n);                    // n >= 0
bool is_perfect_square(i64 n, i64* root);  // root may be null
int ord_p(i64 n, i64 p);                   // n != 0, p >= 2
bool is_prime(i64 n);
std::vector<std::pair<i64, int>> factorize(i64 n);  // n >= 1, ascending primes
bool is_squarefree(i64 n);                 // n >= 1
i64 squarefree_part(i64 n);                // n >= 1
std::vector<i64> divisors(i64 n);          // n >= 1, ascending
i64 mod_pow(i64 base, i64 exp, i64 mod);
i64 mod_inv(i64 a, i64 mod);               // gcd(a, mod) = 1

// Kronecker symbol (a/n), defined for all integers n.
int kronecker(i64 a, i64 n);

// Legendre symbol (a/p) for an odd prime p; values in {-1, 0, 1}.
// Throws InvalidPrime if p is not an odd prime.
int legendre(i64 a, i64 p);

} // namespace sgenus
