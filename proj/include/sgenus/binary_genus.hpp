#pragma once

#include "sgenus/forms.hpp"

#include <map>
#include <utility>
#include <vector>

namespace sgenus {

std::vector<i64> odd_prime_divisors(i64 S);

// All reduced positive definite binary forms of discriminant -8S, sorted by
// coefficient tuple.  S must be odd, squarefree and positive.
std::vector<BinaryForm> enumerate_binary_classes(i64 S);

// Legendre symbol (v|p) for any value v represented by B with gcd(v,p)=1.
i64 genus_character(const BinaryForm& B, i64 p);

// eps_p(B) = (-v|p) for a represented v coprime to p.
i64 binary_epsilon(const BinaryForm& B, i64 p);

using GenusKey = std::vector<std::pair<i64, i64>>; // (p, eps_p), p ascending

// Split the class list of discriminant -8S by the tuple (eps_p) over odd
// p | S.  Exactly 2^r nonempty cells must appear, r = #odd prime divisors.
std::map<GenusKey, std::vector<BinaryForm>> partition_into_genera(i64 S);

} // namespace sgenus
