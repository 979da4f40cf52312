#include "sgenus/binary_genus.hpp"

#include "sgenus/errors.hpp"
#include "sgenus/int_math.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sgenus {

namespace {

void check_s(i64 S) {
    if (S < 1 || S % 2 == 0 || !is_squarefree(S))
        throw InvalidS("S must be a positive odd squarefree integer, got " + std::to_string(S));
}

} // namespace

std::vector<i64> odd_prime_divisors(i64 S) {
    std::vector<i64> ps;
    for (auto [p, e] : factorize(S))
        if (p != 2) ps.push_back(p);
    return ps;
}

std::vector<BinaryForm> enumerate_binary_classes(i64 S) {
    check_s(S);
    std::vector<BinaryForm> out;
    for (i64 beta = 0; 3 * beta * beta <= 2 * S; ++beta) {
        i64 n = beta * beta + 2 * S; // ac for b = 2*beta
        for (i64 a : divisors(n)) {
            if (a < 2 * beta || a * a > n) continue;
            i64 c = n / a;
            BinaryForm f{a, 2 * beta, c};
            if (!f.is_reduced() || f.disc() != -8 * S)
                throw PreconditionViolated("binary enumeration produced a non-reduced form");
            if (std::gcd(std::gcd(f.a, f.b), f.c) != 1)
                throw PreconditionViolated("binary enumeration produced an imprimitive form");
            out.push_back(f);
            if (0 < f.b && f.b < a && a < c) out.push_back(BinaryForm{a, -2 * beta, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

i64 genus_character(const BinaryForm& B, i64 p) {
    for (i64 x = 0; x <= 2; ++x) {
        for (i64 y = 0; y <= 2; ++y) {
            if (x == 0 && y == 0) continue;
            i64 v = B.evaluate(x, y);
            if (v % p != 0) return legendre(v, p);
        }
    }
    throw NoCoprimeValue("no represented value coprime to " + std::to_string(p));
}

i64 binary_epsilon(const BinaryForm& B, i64 p) {
    return legendre(-1, p) * genus_character(B, p);
}

std::map<GenusKey, std::vector<BinaryForm>> partition_into_genera(i64 S) {
    check_s(S);
    auto ps = odd_prime_divisors(S);
    std::map<GenusKey, std::vector<BinaryForm>> cells;
    for (const BinaryForm& f : enumerate_binary_classes(S)) {
        GenusKey key;
        for (i64 p : ps) key.emplace_back(p, binary_epsilon(f, p));
        cells[key].push_back(f);
    }
    size_t expect = size_t{1} << ps.size();
    if (cells.size() != expect)
        throw GenusCountMismatch("expected " + std::to_string(expect) + " genera, found " +
                                 std::to_string(cells.size()));
    return cells;
}

} // namespace sgenus
