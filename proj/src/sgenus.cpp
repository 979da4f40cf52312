#include "sgenus/sgenus.hpp"

#include "sgenus/errors.hpp"
#include "sgenus/int_math.hpp"
#include "sgenus/jordan.hpp"
#include "sgenus/mass.hpp"
#include "sgenus/parallel.hpp"
#include "sgenus/reduction.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "json.hpp"

namespace sgenus {

namespace {

// Candidate coefficient tuples satisfying the canonical-form inequalities
// (a <= b <= c, |t| <= a, |s| <= a, |r| <= b, abc <= det4/2) with the given
// determinant, up to coordinate sign flips (representatives have s,t >= 0).
std::vector<TernaryForm> scan_reduced_tuples(i64 det4) {
    std::vector<TernaryForm> out;
    for (i64 a = 1; a * a * a <= det4; ++a) {
        for (i64 b = a; a * b * b <= det4; ++b) {
            for (i64 t = 0; t <= a; ++t) {
                i64 den = 4 * a * b - t * t;
                for (i64 s = 0; s <= a; ++s) {
                    for (i64 r = -b; r <= b; ++r) {
                        i64 num = det4 - r * s * t + a * r * r + b * s * s;
                        if (num % den != 0) continue;
                        i64 c = num / den;
                        if (c < b || 2 * a * b * c > det4) continue;
                        out.push_back(TernaryForm{a, b, c, r, s, t});
                    }
                }
            }
        }
    }
    return out;
}

int gram_rank_mod_p(const TernaryForm& q, i64 p) {
    auto m = q.doubled_gram();
    i64 g[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            g[i][j] = m[i][j] % p;
            if (g[i][j] < 0) g[i][j] += p;
        }
    int rank = 0;
    int row = 0;
    for (int col = 0; col < 3 && row < 3; ++col) {
        int piv = -1;
        for (int i = row; i < 3; ++i)
            if (g[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(g[piv], g[row]);
        i64 inv = mod_inv(g[row][col], p);
        for (int i = row + 1; i < 3; ++i) {
            i64 f = g[i][col] * inv % p;
            for (int j = col; j < 3; ++j) {
                g[i][j] = (g[i][j] - f * g[row][j]) % p;
                if (g[i][j] < 0) g[i][j] += p;
            }
        }
        ++rank;
        ++row;
    }
    return rank;
}

std::vector<TernaryForm> canonical_distinct(const std::vector<TernaryForm>& candidates, int jobs) {
    std::vector<TernaryForm> canon(candidates.size(), TernaryForm{});
    parallel_for(static_cast<i64>(candidates.size()), jobs,
                 [&](i64 i) { canon[static_cast<size_t>(i)] = reduce_ternary(candidates[static_cast<size_t>(i)]).form; });
    std::set<TernaryForm> uniq(canon.begin(), canon.end());
    return std::vector<TernaryForm>(uniq.begin(), uniq.end());
}

} // namespace

i64 epsilon_p(const TernaryForm& q, i64 p) {
    if (p < 3 || !is_prime(p)) throw InvalidPrime("epsilon_p requires an odd prime");
    for (i64 x = 0; x < p; ++x)
        for (i64 y = 0; y < p; ++y)
            for (i64 z = 0; z < p; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                i64 v = q.evaluate(x, y, z);
                if (v % p != 0) return legendre(-v, p);
            }
    throw NoCoprimeValue("form represents no value coprime to " + std::to_string(p));
}

std::vector<TernaryForm> seed_forms(i64 S) {
    std::vector<TernaryForm> out;
    for (const BinaryForm& b : enumerate_binary_classes(S))
        out.push_back(TernaryForm{b.a, b.c, 2 * S, 0, 0, b.b});
    return out;
}

std::vector<TernaryForm> enumerate_genus_classes(const TernaryForm& rep, int jobs) {
    if (!rep.is_positive_definite())
        throw NotPositiveDefinite("genus enumeration requires a positive definite form");
    i64 det4 = rep.gram_det4();
    std::vector<i64> odd_ps;
    std::vector<int> ranks;
    for (auto [p, e] : factorize(det4))
        if (p != 2) {
            odd_ps.push_back(p);
            ranks.push_back(gram_rank_mod_p(rep, p));
        }
    std::vector<TernaryForm> screened;
    for (const TernaryForm& f : scan_reduced_tuples(det4)) {
        bool ok = true;
        for (size_t i = 0; i < odd_ps.size() && ok; ++i)
            ok = gram_rank_mod_p(f, odd_ps[i]) == ranks[i];
        if (ok) screened.push_back(f);
    }
    std::vector<TernaryForm> classes;
    for (const TernaryForm& f : canonical_distinct(screened, jobs))
        if (same_genus(rep, f)) classes.push_back(f);
    TernaryForm rep_canon = reduce_ternary(rep).form;
    if (std::find(classes.begin(), classes.end(), rep_canon) == classes.end())
        throw PreconditionViolated("genus enumeration lost its own representative");
    return classes;
}

SGenus build_sgenus(i64 S, int jobs) {
    auto cells = partition_into_genera(S);
    auto odd_ps = odd_prime_divisors(S);

    struct Bucket {
        GenusKey label;
        TernaryForm seed;
        std::vector<TernaryForm> classes;
    };
    std::vector<Bucket> buckets;
    for (const auto& [label, binaries] : cells) {
        const BinaryForm& b = binaries.front();
        TernaryForm seed{b.a, b.c, 2 * S, 0, 0, b.b};
        for (auto [p, eps] : label)
            if (epsilon_p(seed, p) != eps)
                throw PreconditionViolated("seed form disagrees with its genus label");
        buckets.push_back(Bucket{label, seed, {}});
    }

    std::vector<TernaryForm> screened;
    for (const TernaryForm& f : scan_reduced_tuples(16 * S * S)) {
        bool ok = true;
        for (i64 p : odd_ps)
            if (gram_rank_mod_p(f, p) != 1) {
                ok = false;
                break;
            }
        if (ok) screened.push_back(f);
    }

    for (const TernaryForm& f : canonical_distinct(screened, jobs)) {
        Bucket* hit = nullptr;
        for (Bucket& bu : buckets) {
            if (!same_genus(bu.seed, f)) continue;
            if (hit) throw PreconditionViolated("class matched two distinct genera");
            hit = &bu;
        }
        if (hit) hit->classes.push_back(f);
    }

    SGenus sg;
    sg.S = S;
    for (Bucket& bu : buckets) {
        TernaryForm seed_canon = reduce_ternary(bu.seed).form;
        if (std::find(bu.classes.begin(), bu.classes.end(), seed_canon) == bu.classes.end())
            throw PreconditionViolated("seed class missing from its own genus");
        GenusRecord rec;
        rec.label = bu.label;
        Rational mass{0};
        for (const TernaryForm& f : bu.classes) {
            i64 aut = automorphism_count(f);
            for (auto [p, eps] : bu.label)
                if (epsilon_p(f, p) != eps)
                    throw PreconditionViolated("class form disagrees with its genus label");
            rec.classes.push_back(ClassRecord{f, aut});
            mass += Rational{1, aut};
        }
        rec.mass = mass;
        Rational expect = mass_closed_form(bu.label);
        if (mass != expect)
            throw MassMismatch("genus mass " + mass.fraction_str() + " for S = " +
                               std::to_string(S) + " does not match " + expect.fraction_str());
        sg.genera.push_back(std::move(rec));
    }
    std::sort(sg.genera.begin(), sg.genera.end(), [](const GenusRecord& x, const GenusRecord& y) {
        for (size_t i = 0; i < x.label.size(); ++i) {
            if (x.label[i].first != y.label[i].first) return x.label[i].first < y.label[i].first;
            if (x.label[i].second != y.label[i].second) return x.label[i].second > y.label[i].second;
        }
        return false;
    });
    return sg;
}

std::string sgenus_to_json(const SGenus& sg) {
    nlohmann::ordered_json j;
    j["S"] = sg.S;
    j["genera"] = nlohmann::ordered_json::array();
    for (const GenusRecord& g : sg.genera) {
        nlohmann::ordered_json jg;
        jg["label"] = nlohmann::ordered_json::object();
        for (auto [p, eps] : g.label) jg["label"][std::to_string(p)] = eps;
        jg["classes"] = nlohmann::ordered_json::array();
        for (const ClassRecord& c : g.classes) {
            nlohmann::ordered_json jc;
            jc["form"] = c.form.coeffs();
            jc["aut"] = c.aut;
            jg["classes"].push_back(jc);
        }
        jg["mass"] = g.mass.fraction_str();
        j["genera"].push_back(jg);
    }
    return j.dump(2);
}

} // namespace sgenus
