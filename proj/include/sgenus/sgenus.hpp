#pragma once

#include "sgenus/binary_genus.hpp"
#include "sgenus/forms.hpp"
#include "sgenus/rational.hpp"

#include <string>
#include <vector>

namespace sgenus {

// eps_p(q) = (-v|p) for any value v represented by q with gcd(v,p) = 1.
i64 epsilon_p(const TernaryForm& q, i64 p);

// One ternary seed B(x,y) + 2S z^2 per reduced binary class of disc -8S.
std::vector<TernaryForm> seed_forms(i64 S);

// Every equivalence class in the genus of rep, as sorted canonical forms.
std::vector<TernaryForm> enumerate_genus_classes(const TernaryForm& rep, int jobs = 1);

struct ClassRecord {
    TernaryForm form;
    i64 aut = 0;
};

struct GenusRecord {
    GenusKey label;
    std::vector<ClassRecord> classes;
    Rational mass;
};

struct SGenus {
    i64 S = 0;
    std::vector<GenusRecord> genera; // eps = +1 ordered before eps = -1
};

// Constructs all 2^r genera for odd squarefree S, with class lists,
// automorphism counts, and the mass identity checked per genus.
SGenus build_sgenus(i64 S, int jobs = 1);

std::string sgenus_to_json(const SGenus& sg);

} // namespace sgenus
