// End-to-end acceptance checks, one printed line per criterion.
#include "sgenus/density.hpp"
#include "sgenus/errors.hpp"
#include "sgenus/int_math.hpp"
#include "sgenus/mass.hpp"
#include "sgenus/reduction.hpp"
#include "sgenus/sgenus.hpp"
#include "sgenus/siegel.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

using namespace sgenus;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("%s %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

i64 smallest_nonresidue(i64 p) {
    for (i64 n = 2; n < p; ++n)
        if (legendre(n, p) == -1) return n;
    throw PreconditionViolated("no nonresidue found");
}

} // namespace

int main() {
    const std::vector<i64> all_S{1, 3, 5, 7, 11, 15, 21, 33, 35, 105};
    auto t0 = std::chrono::steady_clock::now();

    // 1. genus counts: exactly 2^r genera per S
    std::map<i64, SGenus> built;
    bool c1 = true;
    std::string c1_detail;
    try {
        for (i64 S : all_S) {
            SGenus sg = build_sgenus(S);
            size_t expect = size_t{1} << odd_prime_divisors(S).size();
            if (sg.genera.size() != expect) {
                c1 = false;
                c1_detail = "S = " + std::to_string(S) + " gave " +
                            std::to_string(sg.genera.size()) + " genera, expected " +
                            std::to_string(expect);
                break;
            }
            built.emplace(S, std::move(sg));
        }
    } catch (const std::exception& e) {
        c1 = false;
        c1_detail = std::string("exception: ") + e.what();
    }
    double build_time = seconds_since(t0);
    if (c1 && build_time >= 600.0) {
        c1 = false;
        c1_detail = "construction exceeded the time budget";
    }
    if (c1)
        c1_detail = "genus count is 2^r for all " + std::to_string(all_S.size()) +
                    " values of S (" + std::to_string(build_time).substr(0, 5) + "s)";
    report(1, c1, c1_detail);
    if (!c1) return 1; // later criteria need the built structures

    // 2. mass formula: enumerated sum, closed form, factorwise recombination
    bool c2 = true;
    std::string c2_detail = "enumerated, closed-form, and factorwise masses agree";
    try {
        for (const auto& [S, sg] : built) {
            for (const GenusRecord& g : sg.genera) {
                Rational enumerated{0};
                for (const ClassRecord& c : g.classes)
                    enumerated += Rational{1, automorphism_count(c.form)};
                Rational closed = mass_closed_form(g.label);
                Rational factorwise = mass_factorwise(g.label).total;
                if (enumerated != closed || closed != factorwise) {
                    c2 = false;
                    c2_detail = "mass mismatch at S = " + std::to_string(S);
                }
            }
        }
    } catch (const std::exception& e) {
        c2 = false;
        c2_detail = std::string("exception: ") + e.what();
    }
    report(2, c2, c2_detail);

    // 3. main identity, W = 1, m <= 500
    bool c3 = true;
    std::string c3_detail;
    i64 c3_rows = 0;
    try {
        for (i64 S : all_S) {
            VerificationReport rep = verify_theorem(built.at(S), 1, 500);
            c3_rows += static_cast<i64>(rep.rows.size());
            if (!rep.all_pass) {
                c3 = false;
                c3_detail = "failure at S = " + std::to_string(S);
            }
        }
    } catch (const std::exception& e) {
        c3 = false;
        c3_detail = std::string("exception: ") + e.what();
    }
    if (c3)
        c3_detail = "mass-weighted average equals r3(m)/48 in all " + std::to_string(c3_rows) +
                    " cases";
    report(3, c3, c3_detail);

    // 4. twisted identity for every W | S with W > 1
    bool c4 = true;
    std::string c4_detail;
    i64 c4_rows = 0;
    try {
        for (i64 S : {3, 15, 105}) {
            VerificationReport rep = verify_theorem(built.at(S), 0, 500);
            for (const VerificationRow& row : rep.rows) {
                if (row.W == 1) continue;
                ++c4_rows;
                if (!row.pass) {
                    c4 = false;
                    c4_detail = "failure at S = " + std::to_string(S) + ", W = " +
                                std::to_string(row.W) + ", m = " + std::to_string(row.m);
                }
            }
        }
    } catch (const std::exception& e) {
        c4 = false;
        c4_detail = std::string("exception: ") + e.what();
    }
    if (c4)
        c4_detail = "signed averages match W r3(m/W^2)/48 in all " + std::to_string(c4_rows) +
                    " cases";
    report(4, c4, c4_detail);

    // 5. closed-form local densities against the congruence-count oracle
    bool c5 = true;
    std::string c5_detail;
    i64 c5_cases = 0;
    try {
        for (i64 p : {3, 5, 7}) {
            i64 residue = smallest_nonresidue(p);
            for (int ord = 0; ord <= 4; ++ord) {
                for (i64 u : {i64{1}, residue}) {
                    i64 m = u * ipow(p, ord);
                    TernaryForm three{1, 1, 1, 0, 0, 0};
                    if (density_generic_oracle(three, p, m) != density_three_squares_odd(p, m)) {
                        c5 = false;
                        c5_detail = "three-squares mismatch at p = " + std::to_string(p) +
                                    ", m = " + std::to_string(m);
                    }
                    ++c5_cases;
                    for (i64 eps : {i64{1}, i64{-1}}) {
                        i64 alpha = (legendre(-1, p) == eps) ? 1 : residue;
                        TernaryForm shape{alpha, alpha * p, p, 0, 0, 0};
                        if (density_generic_oracle(shape, p, m) != density_sgenus_odd(p, eps, m)) {
                            c5 = false;
                            c5_detail = "genus-shape mismatch at p = " + std::to_string(p) +
                                        ", eps = " + std::to_string(eps) +
                                        ", m = " + std::to_string(m);
                        }
                        ++c5_cases;
                    }
                }
            }
        }
        if (c5_cases < 60) {
            c5 = false;
            c5_detail = "only " + std::to_string(c5_cases) + " cases exercised";
        }
    } catch (const std::exception& e) {
        c5 = false;
        c5_detail = std::string("exception: ") + e.what();
    }
    if (c5)
        c5_detail = "closed forms equal the counting oracle in all " + std::to_string(c5_cases) +
                    " cases";
    report(5, c5, c5_detail);

    // 6. dyadic densities: residue table and mod-32 recount, m <= 30, ord_2 <= 1
    bool c6 = true;
    std::string c6_detail;
    try {
        TernaryForm three{1, 1, 1, 0, 0, 0};
        for (i64 m = 1; m <= 30; ++m) {
            if (m % 4 == 0) continue;
            Rational v = density_two_three_squares(m);
            Rational expect = (m % 4 == 1 || m % 4 == 2) ? Rational{3, 2}
                              : (m % 8 == 3)             ? Rational{1}
                                                         : Rational{0};
            Rational recount{congruence_count(three, 2, 5, m), 1024};
            if (v != expect || v != recount) {
                c6 = false;
                c6_detail = "three-squares table broken at m = " + std::to_string(m);
            }
            // genus-family shape: density 1 whenever m = 1,2 mod 4
            if (m % 4 != 3) {
                for (i64 S : {3, 15}) {
                    for (const GenusRecord& g : built.at(S).genera) {
                        const TernaryForm& rep = g.classes.front().form;
                        Rational w = density_two_form(rep, m);
                        Rational wre{congruence_count(rep, 2, 5, m), 1024};
                        if (w != Rational{1} || w != wre) {
                            c6 = false;
                            c6_detail = "genus-family value broken at S = " + std::to_string(S) +
                                        ", m = " + std::to_string(m);
                        }
                    }
                }
            }
        }
    } catch (const std::exception& e) {
        c6 = false;
        c6_detail = std::string("exception: ") + e.what();
    }
    if (c6) c6_detail = "mod-16 densities match the residue table and the mod-32 recount";
    report(6, c6, c6_detail);

    // 7. local averaging identities and the reduction to E = 1
    bool c7 = true;
    std::string c7_detail;
    i64 c7_triples = 0;
    try {
        for (i64 p : {3, 5, 7, 11}) {
            for (int k = 0; k <= 3; ++k) {
                for (bool odd_ord : {false, true}) {
                    for (i64 chi : {i64{1}, i64{-1}}) {
                        if (!verify_lemma_case(p, odd_ord, k, chi, false)) c7 = false;
                        if (!odd_ord && k == 0) continue;
                        if (!verify_lemma_case(p, odd_ord, k, chi, true)) c7 = false;
                    }
                }
            }
        }
        if (!c7) c7_detail = "a local averaging identity failed";
        for (i64 S : {3, 15, 21, 35, 105}) {
            const SGenus& sg = built.at(S);
            for (i64 W : divisors(S)) {
                for (i64 u : {i64{1}, i64{2}, i64{5}, i64{6}}) {
                    i64 m = W * W * u;
                    EResult e = reduce_to_E(sg, W, m);
                    if (e.zero_denominator) continue;
                    ++c7_triples;
                    if (e.value != Rational{1}) {
                        c7 = false;
                        c7_detail = "E != 1 at S = " + std::to_string(S) + ", W = " +
                                    std::to_string(W) + ", m = " + std::to_string(m);
                    }
                }
            }
        }
        if (c7_triples < 50) {
            c7 = false;
            c7_detail = "only " + std::to_string(c7_triples) + " nondegenerate triples";
        }
    } catch (const std::exception& e) {
        c7 = false;
        c7_detail = std::string("exception: ") + e.what();
    }
    if (c7)
        c7_detail = "averaging identities hold and E = 1 on " + std::to_string(c7_triples) +
                    " triples";
    report(7, c7, c7_detail);

    // 8. Siegel product calibration against literal representation counts
    bool c8 = true;
    std::string c8_detail;
    i64 c8_cases = 0;
    try {
        TernaryForm three{1, 1, 1, 0, 0, 0};
        std::vector<i64> theta = theta_counts(three, 200);
        for (i64 m = 1; m <= 200; ++m) {
            if (m % 4 == 0) continue;
            Rational r = siegel_product_three_squares(m);
            ++c8_cases;
            if (!r.is_integer() || r != Rational{theta[static_cast<size_t>(m)]}) {
                c8 = false;
                c8_detail = "product disagrees with the point count at m = " + std::to_string(m);
            }
        }
    } catch (const std::exception& e) {
        c8 = false;
        c8_detail = std::string("exception: ") + e.what();
    }
    if (c8)
        c8_detail = "density product reproduces r3(m) exactly in all " +
                    std::to_string(c8_cases) + " cases";
    report(8, c8, c8_detail);

    std::printf("%s (%.1fs total)\n", failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT",
                seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
