#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sgenus/errors.hpp"
#include "sgenus/int_math.hpp"
#include "sgenus/mass.hpp"
#include "sgenus/reduction.hpp"
#include "sgenus/siegel.hpp"

#include "json.hpp"

#include <sstream>

using namespace sgenus;

TEST_CASE("mass closed form") {
    CHECK(mass_closed_form(GenusKey{}) == Rational{1, 16});
    CHECK(mass_closed_form(GenusKey{{3, 1}}) == Rational{1, 8});
    CHECK(mass_closed_form(GenusKey{{3, -1}}) == Rational{1, 16});
    CHECK(mass_closed_form(GenusKey{{3, 1}, {5, 1}, {7, 1}}) == Rational{3, 2});
    CHECK(mass_closed_form(GenusKey{{3, -1}, {5, 1}, {7, -1}}) == Rational{9, 16});
    CHECK_THROWS_AS(mass_closed_form(GenusKey{{3, 2}}), PreconditionViolated);
    CHECK_THROWS_AS(mass_closed_form(GenusKey{{4, 1}}), PreconditionViolated);
}

TEST_CASE("mass assembled factor by factor") {
    for (const GenusKey& label :
         {GenusKey{}, GenusKey{{3, 1}}, GenusKey{{3, -1}}, GenusKey{{3, 1}, {5, -1}},
          GenusKey{{3, -1}, {5, 1}, {7, 1}}, GenusKey{{41, 1}}}) {
        MassBreakdown mb = mass_factorwise(label);
        CHECK(mb.total == mass_closed_form(label));
        // symbolic pi powers cancel between the prefactor and the zeta tail
        CHECK(mb.prefactor_pi_half + mb.tail_pi_half == 0);
        CHECK(mb.factor_two == Rational{1, 2});
        REQUIRE(mb.factors_odd.size() == label.size());
        for (size_t i = 0; i < label.size(); ++i) {
            auto [p, eps] = label[i];
            CHECK(mb.factors_odd[i].first == p);
            // doubled local mass factor p^2 / (2 (p - eps))
            CHECK(mb.factors_odd[i].second == Rational{p * p, 2 * (p - eps)});
        }
    }
    MassBreakdown mb3 = mass_factorwise(GenusKey{{3, 1}});
    CHECK(mb3.factors_odd[0].second == Rational{9, 4});
    CHECK(mb3.tail_coeff == Rational{1, 8});
}

TEST_CASE("exact representation numbers of x^2 + y^2 + z^2") {
    CHECK(siegel_product_three_squares(1) == Rational{6});
    CHECK(siegel_product_three_squares(2) == Rational{12});
    CHECK(siegel_product_three_squares(3) == Rational{8});
    CHECK(siegel_product_three_squares(5) == Rational{24});
    CHECK(siegel_product_three_squares(6) == Rational{24});
    CHECK(siegel_product_three_squares(7) == Rational{0});
    CHECK(siegel_product_three_squares(9) == Rational{30});
    CHECK(siegel_product_three_squares(11) == Rational{24});
    CHECK(siegel_product_three_squares(25) == Rational{30});
    CHECK(siegel_product_three_squares(27) == Rational{32});
    CHECK_THROWS_AS(siegel_product_three_squares(4), UnsupportedM);
    CHECK_THROWS_AS(siegel_product_three_squares(12), UnsupportedM);

    TernaryForm three{1, 1, 1, 0, 0, 0};
    for (i64 m = 1; m <= 100; ++m) {
        if (m % 4 == 0) continue;
        Rational r = siegel_product_three_squares(m);
        CHECK(r.is_integer());
        CHECK(r == Rational{representation_count(three, m)});
    }
}

TEST_CASE("weighted average identity: both sides") {
    CHECK(theorem_rhs(1, 1) == Rational{1, 8});
    CHECK(theorem_rhs(1, 2) == Rational{1, 4});
    CHECK(theorem_rhs(3, 9) == Rational{3, 8}); // 3 * r_3(1) / 48
    CHECK(theorem_rhs(3, 18) == Rational{3, 4});
    CHECK(theorem_rhs(3, 3) == Rational{0});  // 9 does not divide 3
    CHECK(theorem_rhs(3, 21) == Rational{0});

    SGenus sg1 = build_sgenus(1);
    CHECK(siegel_weil_lhs(sg1, 1, 1) == Rational{1, 8});
    SGenus sg3 = build_sgenus(3);
    CHECK(siegel_weil_lhs(sg3, 3, 9) == Rational{3, 8});
    CHECK(siegel_weil_lhs(sg3, 1, 2) == Rational{1, 4});
    // eps_W weights: for W = 3 and m = 6 (where 9 does not divide m) the
    // signed average cancels to zero
    CHECK(siegel_weil_lhs(sg3, 3, 6) == Rational{0});
    CHECK(theorem_rhs(3, 6) == Rational{0});
}

TEST_CASE("identity verification sweep") {
    SGenus sg = build_sgenus(3);
    VerificationReport rep = verify_theorem(sg, 0, 100);
    CHECK(rep.S == 3);
    CHECK(rep.all_pass);
    CHECK(!rep.rows.empty());
    for (const VerificationRow& row : rep.rows) {
        CHECK(row.S == 3);
        CHECK((row.W == 1 || row.W == 3));
        CHECK((row.m % 4 == 1 || row.m % 4 == 2));
        CHECK(row.m % row.W == 0);
        CHECK(row.pass);
        CHECK(row.lhs == row.rhs);
    }
    // every admissible m appears for W = 1
    i64 w1_rows = 0;
    for (const VerificationRow& row : rep.rows)
        if (row.W == 1) ++w1_rows;
    CHECK(w1_rows == 50); // m = 1,2,5,6,... up to 100: two per block of four

    // CSV round trip
    std::string csv = report_to_csv(rep);
    CHECK(csv.substr(0, csv.find('\n')) == "S,W,m,lhs,rhs,status");
    size_t lines = std::count(csv.begin(), csv.end(), '\n');
    CHECK(lines == rep.rows.size() + 1);

    // JSON structure
    auto j = nlohmann::json::parse(report_to_json(rep));
    CHECK(j.at("S") == 3);
    CHECK(j.at("all_pass") == true);
    CHECK(j.at("rows").size() == rep.rows.size());
    CHECK(j.at("rows").at(0).at("lhs") == j.at("rows").at(0).at("rhs"));
}

TEST_CASE("local averaging identities") {
    // plain and twisted, across parities, branch indices, and symbols
    for (i64 p : {3, 5, 7, 11}) {
        for (int k = 0; k <= 3; ++k) {
            for (bool odd_ord : {false, true}) {
                for (i64 chi : {1LL, -1LL}) {
                    CHECK(verify_lemma_case(p, odd_ord, k, chi, false));
                    if (!odd_ord && k == 0) continue; // twisted branch undefined
                    CHECK(verify_lemma_case(p, odd_ord, k, chi, true));
                }
            }
        }
    }
    CHECK_THROWS_AS(verify_lemma_case(3, false, 0, 1, true), InvalidBranch);
}

TEST_CASE("single-identity reduction to E = 1") {
    SGenus sg3 = build_sgenus(3);
    EResult e1 = reduce_to_E(sg3, 1, 1);
    CHECK(!e1.zero_denominator);
    CHECK(e1.value == Rational{1});
    EResult e2 = reduce_to_E(sg3, 3, 9);
    CHECK(!e2.zero_denominator);
    CHECK(e2.value == Rational{1});
    EResult e3 = reduce_to_E(sg3, 3, 6); // ord_3(6) = 1 < 2
    CHECK(e3.zero_denominator);
    EResult e4 = reduce_to_E(sg3, 3, 21); // 21 = 1 mod 4, ord_3 = 1
    CHECK(e4.zero_denominator);

    SGenus sg15 = build_sgenus(15);
    for (i64 W : {1LL, 3LL, 5LL, 15LL}) {
        for (i64 m : {W * W, 2 * W * W, 9 * W * W}) {
            if (m % 4 == 0 || m % 4 == 3) continue;
            EResult e = reduce_to_E(sg15, W, m);
            CHECK(!e.zero_denominator);
            CHECK(e.value == Rational{1});
        }
    }
    CHECK_THROWS_AS(reduce_to_E(sg3, 1, 3), PreconditionViolated); // m = 3 mod 4
}

TEST_CASE("representation numbers feed the identity") {
    // r_Q(m) summed with mass weights reproduces r_3 for squarefree W = 1
    SGenus sg = build_sgenus(5);
    for (i64 m : {1, 2, 5, 6, 9, 10, 13, 25, 50}) {
        CHECK(siegel_weil_lhs(sg, 1, m) == theorem_rhs(1, m));
    }
}
