#include "sgenus/mass.hpp"

#include "sgenus/errors.hpp"
#include "sgenus/int_math.hpp"

#include <string>

namespace sgenus {

Rational mass_closed_form(const GenusKey& label) {
    Rational m{1, 16};
    for (auto [p, eps] : label) {
        if (p < 3 || !is_prime(p) || (eps != 1 && eps != -1))
            throw PreconditionViolated("malformed genus label");
        m *= Rational{p + eps, 2};
    }
    return m;
}

MassBreakdown mass_factorwise(const GenusKey& label) {
    MassBreakdown b;
    // 2 * pi^-3 * sqrt(pi) * sqrt(pi)/2 from the dimension-3 standing factors
    b.prefactor_coeff = Rational{1};
    b.prefactor_pi_half = -4;
    // product over every odd prime of (1 - p^-2)^{-1} = zeta(2) * (3/4)
    b.tail_coeff = Rational{1, 8};
    b.tail_pi_half = 4;
    // doubled 2-adic factor: four unimodular species, 2 * (1/2)^4 * 2 * 2
    b.factor_two = Rational{1, 2};

    Rational total = b.prefactor_coeff * b.tail_coeff * b.factor_two;
    int pi_half = b.prefactor_pi_half + b.tail_pi_half;
    for (auto [p, eps] : label) {
        if (p < 3 || !is_prime(p) || (eps != 1 && eps != -1))
            throw PreconditionViolated("malformed genus label");
        // doubled local factor p / (2 (1 - eps/p)); the generic Euler factor
        // (1 - p^-2)^{-1} is already inside the tail, so take it back out
        Rational local{p * p, 2 * (p - eps)};
        b.factors_odd.emplace_back(p, local);
        total *= local * (Rational{1} - Rational{1, p * p});
    }
    if (pi_half != 0)
        throw FactorMismatch("powers of pi fail to cancel in the mass assembly");
    b.total = total;
    Rational closed = mass_closed_form(label);
    if (total != closed)
        throw FactorMismatch("factorwise mass " + total.fraction_str() + " differs from " +
                             closed.fraction_str());
    return b;
}

} // namespace sgenus
