#pragma once

#include "sgenus/binary_genus.hpp"
#include "sgenus/rational.hpp"

#include <utility>
#include <vector>

namespace sgenus {

// Mass of the genus with the given label: (1/16) * prod_{p|S} (p + eps_p)/2.
Rational mass_closed_form(const GenusKey& label);

// The same mass assembled factor by factor.  Symbolic powers of pi are
// tracked as integer exponents of sqrt(pi); they must cancel exactly and the
// assembled total must match the closed form, else FactorMismatch.
struct MassBreakdown {
    Rational total;
    Rational prefactor_coeff;
    int prefactor_pi_half = 0;
    Rational tail_coeff; // prod over all odd p of (1 - p^-2)^{-1} = (pi^2/8)
    int tail_pi_half = 0;
    Rational factor_two; // doubled 2-adic mass factor
    std::vector<std::pair<i64, Rational>> factors_odd; // p -> doubled p-adic mass factor
};

MassBreakdown mass_factorwise(const GenusKey& label);

} // namespace sgenus
