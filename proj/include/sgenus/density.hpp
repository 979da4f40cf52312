#pragma once

#include "sgenus/forms.hpp"
#include "sgenus/rational.hpp"

namespace sgenus {

// #{v in (Z/p^k)^3 : Q(v) = m mod p^k}, exact table-based count.
// Guarded to moduli p^k <= 2048.
i64 congruence_count(const TernaryForm& q, i64 p, int k, i64 m);

// Closed-form local density of x^2+y^2+z^2 at an odd prime.  The _branch
// variant takes the case data directly: ord_p(m) = 2k (odd_ord=false, chi the
// symbol (-m'|p) for the prime-to-p part m') or 2k+1 (odd_ord=true, chi
// ignored).
Rational density_three_squares_branch(i64 p, int k, bool odd_ord, i64 chi);
Rational density_three_squares_odd(i64 p, i64 m);
Rational density_three_squares_goodbad(i64 p, i64 m);

// Closed-form local density at an odd prime p | S for a genus with local
// unit symbol eps in {-1,+1}; same branch conventions as above.
Rational density_sgenus_branch(i64 p, i64 eps, int k, bool odd_ord, i64 chi);
Rational density_sgenus_odd(i64 p, i64 eps, i64 m);
Rational density_sgenus_goodbad(i64 p, i64 eps, i64 m);

// beta(m) = beta_goodbad(m) + beta(m/p^2)/p.
Rational zero_type_recursion(const Rational& goodbad, const Rational& beta_quotient, i64 p);

// 2-adic densities via congruence counts modulo 16 with a modulo-32
// stabilization recheck.  m must not be divisible by 4.
Rational density_two_form(const TernaryForm& q, i64 m);
Rational density_two_three_squares(i64 m);
Rational density_two_sgenus(i64 u, i64 m); // local shape u x^2 + 2u y^2 + 2 z^2

// Independent local density at an odd prime for any positive definite q:
// p-adic diagonalization, then primitive congruence counts layer by layer,
// each layer checked for stabilization one level higher.
Rational density_generic_oracle(const TernaryForm& q, i64 p, i64 m);

// Archimedean density coeff * pi * sqrt(radicand), radicand squarefree.
struct ArchimedeanDensity {
    Rational coeff;
    i64 radicand = 1;

    Rational pi_multiple() const; // throws IrrationalDet unless radicand == 1
};

ArchimedeanDensity density_archimedean(const TernaryForm& q, i64 m);

} // namespace sgenus
