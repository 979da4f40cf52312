#pragma once

#include "sgenus/rational.hpp"
#include "sgenus/sgenus.hpp"

#include <string>
#include <vector>

namespace sgenus {

// r_3(m) for m not divisible by 4, assembled exactly from the archimedean
// density, the 2-adic density, closed-form odd local densities, and the
// finite character-sum value of the associated L-series.  All powers of pi
// and all square roots cancel; the result is an exact integer count.
Rational siegel_product_three_squares(i64 m);

// Sum over every class Q of the S-genus of eps_W(Q) r_Q(m) / |Aut(Q)|.
Rational siegel_weil_lhs(const SGenus& sg, i64 W, i64 m);

// W * r_3(m / W^2) / 48, or 0 when W^2 does not divide m.
Rational theorem_rhs(i64 W, i64 m);

struct VerificationRow {
    i64 S = 0, W = 0, m = 0;
    Rational lhs, rhs;
    bool pass = false;
};

struct VerificationReport {
    i64 S = 0;
    std::vector<VerificationRow> rows;
    bool all_pass = true;
};

// Checks lhs == rhs for every m <= m_max with m = 1,2 mod 4 and W | m.
// W = 0 sweeps all divisors of S.
VerificationReport verify_theorem(const SGenus& sg, i64 W, i64 m_max, int jobs = 1);

std::string report_to_json(const VerificationReport& rep);
std::string report_to_csv(const VerificationReport& rep);

// Parametric check of the two local averaging identities at an odd prime:
//   plain:   sum_eps (p+eps)/(2p) beta_eps(m)       == beta_3sq(m)
//   twisted: sum_eps eps (p+eps)/(2p) beta_eps(m)   == beta_3sq(m/p^2)
// for ord_p(m) = 2k (odd_ord false, chi the unit symbol) or 2k+1.  The
// twisted identity with even order needs k >= 1 (InvalidBranch otherwise);
// with odd order and k = 0 the right side degenerates to zero.
bool verify_lemma_case(i64 p, bool odd_ord, int k, i64 chi, bool twisted);

struct EResult {
    bool zero_denominator = false;
    Rational value;
};

// The full weighted-average identity divided through by its right side:
// E = 48 sum_G mass(G)/(2S) prod_{p|W} eps_p beta_{G,p}(m)/beta_{3sq,p}(m/p^2)
//        prod_{p|2S, p∤W} beta_{G,p}(m)/beta_{3sq,p}(m), which must equal 1.
// zero_denominator is set (and the value meaningless) when some p | W has
// ord_p(m) < 2.
EResult reduce_to_E(const SGenus& sg, i64 W, i64 m);

} // namespace sgenus
