#pragma once

#include "sgenus/forms.hpp"
#include "sgenus/rational.hpp"

#include <array>
#include <vector>

namespace sgenus {

// Exact diagonalization of the Gram matrix of q over the p-local integers,
// p an odd prime.  Returns three p-integral rationals d1,d2,d3 with
// q ~ d1 x^2 + d2 y^2 + d3 z^2 over Z_p.
std::array<Rational, 3> diagonalize_at_odd_prime(const TernaryForm& q, i64 p);

// One block of a p-adic Jordan splitting.  For odd p the block is
// p^scale_exp times a unimodular diagonal form and unit_sign is the Legendre
// symbol of its determinant; type_even is unused (false).  For p = 2 the
// splitting is taken of the doubled Gram matrix, unit_sign is unused (0) and
// type_even records whether the block has even diagonal.
struct JordanBlock {
    i64 scale_exp = 0;
    int dim = 0;
    i64 unit_sign = 0;
    bool type_even = false;

    bool operator==(const JordanBlock&) const = default;
};

struct JordanSymbol {
    i64 p = 0;
    std::vector<JordanBlock> blocks; // ascending scale_exp

    bool operator==(const JordanSymbol&) const = default;
};

JordanSymbol jordan_symbol(const TernaryForm& q, i64 p);

// Genus equality: equal determinants, equal Jordan symbols at every odd
// prime dividing the determinant, equal 2-adic scale/dimension/parity
// pattern, and equal histograms of represented values modulo 32.
bool same_genus(const TernaryForm& q1, const TernaryForm& q2);

} // namespace sgenus
