#pragma once

#include "sgenus/forms.hpp"

#include <utility>
#include <vector>

namespace sgenus {

// All nonzero integer vectors v with 0 < Q(v) <= bound, both signs included,
// sorted lexicographically.  Exact arithmetic throughout.
std::vector<Vec3> short_vectors(const TernaryForm& q, i64 bound);

// result[k] = #{v in Z^3 : Q(v) = k} for 0 <= k <= bound (result[0] = 1).
std::vector<i64> theta_counts(const TernaryForm& q, i64 bound);

i64 representation_count(const TernaryForm& q, i64 m);

// First two successive minima of the lattice of q.
std::pair<i64, i64> successive_minima2(const TernaryForm& q);

struct ReductionResult {
    TernaryForm form;
    UnimodularChange change; // q(change * x) = form(x)
};

// Canonical representative of the equivalence class of q: the
// lexicographically least coefficient tuple (a,b,c,r,s,t) over all bases
// satisfying a <= b <= c, |t| <= a, |s| <= a, |r| <= b, abc <= 2 det(Gram).
ReductionResult reduce_ternary(const TernaryForm& q);

bool is_equivalent(const TernaryForm& q1, const TernaryForm& q2);

// Number of integer matrices U with det +-1 and q1(U x) = q2(x).
i64 isometry_count(const TernaryForm& q1, const TernaryForm& q2);

// |Aut(q)|, including -I.
i64 automorphism_count(const TernaryForm& q);

} // namespace sgenus
