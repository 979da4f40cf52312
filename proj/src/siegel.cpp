#include "sgenus/siegel.hpp"

#include "sgenus/density.hpp"
#include "sgenus/errors.hpp"
#include "sgenus/int_math.hpp"
#include "sgenus/parallel.hpp"
#include "sgenus/reduction.hpp"

#include <map>
#include <sstream>
#include <string>

#include "json.hpp"

namespace sgenus {

Rational siegel_product_three_squares(i64 m) {
    if (m < 1) throw PreconditionViolated("m must be positive");
    if (m % 4 == 0) throw UnsupportedM("r_3 product is computed for m not divisible by 4");
    Rational beta2 = density_two_three_squares(m);
    if (beta2.is_zero()) return Rational{0};

    // -4m = d f^2 with d a fundamental discriminant
    i64 m0 = squarefree_part(m);
    i64 g = isqrt_floor(m / m0);
    i64 d = (m0 % 4 == 3) ? -m0 : -4 * m0;

    // L(1, chi_d) = pi sqrt(r) (-sum_{a<|d|} (d|a) a) / (s^3 r^2), |d| = s^2 r
    i64 ad = -d;
    i64 ksum = 0;
    for (i64 a = 1; a < ad; ++a) ksum += kronecker(d, a) * a;
    i64 rd = squarefree_part(ad);
    i64 sd = isqrt_floor(ad / rd);
    Rational lcoeff = Rational{-ksum} / Rational{sd * sd * sd * rd * rd};

    Rational odd_local{1};
    for (auto [p, e] : factorize(m))
        if (p != 2) odd_local *= density_three_squares_odd(p, m);

    // prod over p not dividing 2m of (1 + (d|p)/p), Euler-completed:
    // (6/pi^2) prod_{p|2m} (1-p^-2)^{-1} L(1,chi_d) prod_{p|2m} (1 - (d|p)/p)
    Rational tail{6};
    std::vector<i64> ps{2};
    for (auto [p, e] : factorize(m))
        if (p != 2) ps.push_back(p);
    for (i64 p : ps) {
        tail /= Rational{1} - Rational{1, p * p};
        tail *= Rational{1} - Rational{kronecker(d, p), p};
    }

    // archimedean factor 2 pi sqrt(m) = 2g pi sqrt(m0); with the pi^-2 of the
    // tail and the pi sqrt(rd) of the L-value everything transcendental cancels
    i64 rad = m0 * rd;
    i64 sr = isqrt_floor(rad);
    if (sr * sr != rad)
        throw PreconditionViolated("square roots fail to cancel in the r_3 product");
    return Rational{2 * g} * beta2 * odd_local * tail * lcoeff * Rational{sr};
}

namespace {

i64 eps_for(const GenusKey& label, i64 p) {
    for (auto [q, eps] : label)
        if (q == p) return eps;
    throw PreconditionViolated("label missing prime " + std::to_string(p));
}

i64 label_weight(const GenusKey& label, i64 W) {
    i64 w = 1;
    for (auto [p, eps] : label)
        if (W % p == 0) w *= eps;
    return w;
}

void check_w(i64 S, i64 W) {
    if (W < 1 || S % W != 0)
        throw PreconditionViolated("W must be a positive divisor of S");
}

} // namespace

Rational siegel_weil_lhs(const SGenus& sg, i64 W, i64 m) {
    check_w(sg.S, W);
    if (m < 1) throw PreconditionViolated("m must be positive");
    Rational sum{0};
    for (const GenusRecord& g : sg.genera) {
        i64 w = label_weight(g.label, W);
        for (const ClassRecord& c : g.classes)
            sum += Rational{w * representation_count(c.form, m), c.aut};
    }
    return sum;
}

Rational theorem_rhs(i64 W, i64 m) {
    if (W < 1 || m < 1) throw PreconditionViolated("W and m must be positive");
    if (m % (W * W) != 0) return Rational{0};
    return Rational{W} * siegel_product_three_squares(m / (W * W)) / Rational{48};
}

VerificationReport verify_theorem(const SGenus& sg, i64 W, i64 m_max, int jobs) {
    if (m_max < 1) throw PreconditionViolated("m_max must be positive");
    std::vector<i64> ws;
    if (W == 0)
        ws = divisors(sg.S);
    else {
        check_w(sg.S, W);
        ws.push_back(W);
    }

    std::vector<const ClassRecord*> all_classes;
    for (const GenusRecord& g : sg.genera)
        for (const ClassRecord& c : g.classes) all_classes.push_back(&c);
    std::vector<std::vector<i64>> thetas(all_classes.size());
    parallel_for(static_cast<i64>(all_classes.size()), jobs, [&](i64 i) {
        thetas[static_cast<size_t>(i)] = theta_counts(all_classes[static_cast<size_t>(i)]->form, m_max);
    });

    std::map<i64, Rational> r3_memo;
    auto r3 = [&r3_memo](i64 m) -> const Rational& {
        auto it = r3_memo.find(m);
        if (it == r3_memo.end()) it = r3_memo.emplace(m, siegel_product_three_squares(m)).first;
        return it->second;
    };

    VerificationReport rep;
    rep.S = sg.S;
    for (i64 w : ws) {
        for (i64 m = 1; m <= m_max; ++m) {
            if (m % 4 != 1 && m % 4 != 2) continue;
            if (m % w != 0) continue;
            Rational lhs{0};
            size_t idx = 0;
            for (const GenusRecord& g : sg.genera) {
                i64 wt = label_weight(g.label, w);
                for (const ClassRecord& c : g.classes) {
                    lhs += Rational{wt * thetas[idx][static_cast<size_t>(m)], c.aut};
                    ++idx;
                }
            }
            Rational rhs = (m % (w * w) == 0) ? Rational{w} * r3(m / (w * w)) / Rational{48}
                                              : Rational{0};
            VerificationRow row{sg.S, w, m, lhs, rhs, lhs == rhs};
            rep.all_pass = rep.all_pass && row.pass;
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

std::string report_to_json(const VerificationReport& rep) {
    nlohmann::ordered_json j;
    j["S"] = rep.S;
    j["all_pass"] = rep.all_pass;
    j["rows"] = nlohmann::ordered_json::array();
    for (const VerificationRow& r : rep.rows) {
        nlohmann::ordered_json jr;
        jr["S"] = r.S;
        jr["W"] = r.W;
        jr["m"] = r.m;
        jr["lhs"] = r.lhs.fraction_str();
        jr["rhs"] = r.rhs.fraction_str();
        jr["status"] = r.pass ? "pass" : "fail";
        j["rows"].push_back(jr);
    }
    return j.dump(2);
}

std::string report_to_csv(const VerificationReport& rep) {
    std::ostringstream out;
    out << "S,W,m,lhs,rhs,status\n";
    for (const VerificationRow& r : rep.rows)
        out << r.S << ',' << r.W << ',' << r.m << ',' << r.lhs.fraction_str() << ','
            << r.rhs.fraction_str() << ',' << (r.pass ? "pass" : "fail") << '\n';
    return out.str();
}

bool verify_lemma_case(i64 p, bool odd_ord, int k, i64 chi, bool twisted) {
    if (k < 0) throw PreconditionViolated("negative branch index");
    Rational lhs{0};
    for (i64 eps : {i64{1}, i64{-1}}) {
        Rational w{p + eps, 2 * p};
        if (twisted) w *= Rational{eps};
        lhs += w * density_sgenus_branch(p, eps, k, odd_ord, chi);
    }
    if (!twisted) return lhs == density_three_squares_branch(p, k, odd_ord, chi);
    if (!odd_ord && k == 0)
        throw InvalidBranch("twisted identity requires ord >= 2");
    if (odd_ord && k == 0) return lhs.is_zero();
    return lhs == density_three_squares_branch(p, k - 1, odd_ord, chi);
}

EResult reduce_to_E(const SGenus& sg, i64 W, i64 m) {
    check_w(sg.S, W);
    if (m < 1) throw PreconditionViolated("m must be positive");
    if (m % 4 != 1 && m % 4 != 2)
        throw PreconditionViolated("identity applies to m = 1,2 mod 4");
    auto odd_ps = odd_prime_divisors(sg.S);
    for (i64 p : odd_ps)
        if (W % p == 0 && ord_p(m, p) < 2) return EResult{true, Rational{0}};

    Rational beta2_sq = density_two_three_squares(m);
    Rational sum{0};
    for (const GenusRecord& g : sg.genera) {
        Rational term = g.mass / Rational{2 * sg.S};
        for (i64 p : odd_ps) {
            i64 eps = eps_for(g.label, p);
            Rational num = density_sgenus_odd(p, eps, m);
            if (W % p == 0) {
                term *= Rational{eps} * num /
                        density_three_squares_odd(p, m / (p * p));
            } else {
                term *= num / density_three_squares_odd(p, m);
            }
        }
        term *= density_two_form(g.classes.front().form, m) / beta2_sq;
        sum += term;
    }
    return EResult{false, Rational{48} * sum};
}

} // namespace sgenus
