#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "molien/closed_forms.hpp"
#include "molien/decomposition.hpp"
#include "molien/format.hpp"

using namespace molien;

namespace {

Poly lam(int e, long c = 1) { return Poly::monomial(c, e); }

Decomposition dec(int n, int l) { return decompose(MolienQuery::make(n, l)); }

std::vector<std::pair<int, Poly>> nonzero(const std::vector<std::pair<int, Poly>>& fractions) {
    std::vector<std::pair<int, Poly>> out;
    for (const auto& f : fractions) {
        if (!f.second.is_zero()) {
            out.push_back(f);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("tabulated decompositions") {
    CHECK(dec(3, 2).fractions == std::vector<std::pair<int, Poly>>{{6, lam(2, 5) + lam(3, 5)},
                                                                    {5, lam(2) + lam(3, 3) + lam(4)}});
    CHECK(dec(4, 3).fractions == std::vector<std::pair<int, Poly>>{{9, lam(3, 20) + lam(4, 28) + lam(5, 8)},
                                                                    {8, lam(4, 14) + lam(5, 8)},
                                                                    {7, lam(4, 3) + lam(5, 4) + lam(6)}});
    CHECK(dec(5, 4).fractions == std::vector<std::pair<int, Poly>>{{12, lam(4, 70) + lam(5, 180) + lam(6, 110)},
                                                                    {11, lam(5, 44) + lam(6, 65) + lam(7)},
                                                                    {10, lam(6, 29) + lam(7, 10)},
                                                                    {9, lam(6, 6) + lam(7, 5) + lam(8)}});
    CHECK(dec(1, 7).fractions == std::vector<std::pair<int, Poly>>{{1, lam(7)}});

    const Decomposition d417 = dec(4, 17);
    CHECK(d417.fraction_count() == 3);
    CHECK(d417.fractions.front() == std::pair<int, Poly>{9, lam(17, 140) + lam(18, 140)});
}

TEST_CASE("division signatures and variant labels") {
    CHECK(dec(3, 0).signature() == DivisionSignature{1, {}});
    CHECK(dec(3, 2).signature() == DivisionSignature{2, {3}});
    CHECK(dec(4, 3).signature() == DivisionSignature{3, {5, 3}});
    CHECK(dec(4, 5).signature() == DivisionSignature{3, {6, 3}});
    CHECK(dec(4, 17).signature() == DivisionSignature{3, {6, 4}});
    CHECK(dec(5, 82).signature() == DivisionSignature{4, {9, 7, 5}});

    CHECK(fraction_count(MolienQuery::make(3, 0)) == 1);
    CHECK(fraction_count(MolienQuery::make(4, 5)) == 3);
    CHECK(fraction_count(MolienQuery::make(5, 82)) == 4);

    CHECK(variant_index(MolienQuery::make(4, 5)) == 3);
    CHECK(variant_index(MolienQuery::make(4, 17)) == 4);
    CHECK(variant_index(MolienQuery::make(5, 82)) == 7);
    CHECK(variant_index(MolienQuery::make(5, 81)) == 6);
    CHECK(variant_index(MolienQuery::make(3, 1)) == 1);
}

TEST_CASE("decompositions recombine and respect the conjectured shape") {
    for (int n = 1; n <= 6; ++n) {
        const int top = presentation_exponent(n);
        for (int l = 0; l <= 100; l += (n >= 5 ? 3 : 1)) {
            const Decomposition d = dec(n, l);
            CAPTURE(n);
            CAPTURE(l);
            REQUIRE(d.fraction_count() >= 1);
            CHECK(d.fraction_count() <= 3 * n - 2);
            CHECK(recombine(d) == molien_so3(MolienQuery::make(n, l)));
            int expected = top;
            for (const auto& [e, numerator] : d.fractions) {
                CHECK(e == expected--);
                CHECK(numerator.all_nonnegative());
                CHECK(numerator.all_integer());
                CHECK(numerator.lowest_degree() >= l);
            }
        }
    }
}

TEST_CASE("conjecture violations are reported") {
    CHECK_THROWS_AS(decompose_presented(-lam(4), 3), ConjectureViolation);
    CHECK_THROWS_AS(decompose_presented(Poly(-1), 0), ConjectureViolation);
    CHECK_THROWS_AS(decompose_presented(Poly(ExactRational(1, 2)), 2), ConjectureViolation);
    // 1 + l - l^3 over (1 - l^2)^2: one step leaves rest 1, quotient l
    const Decomposition d = decompose_presented(Poly::dense({1, 1, 0, -1}), 2);
    CHECK(d.fractions == std::vector<std::pair<int, Poly>>{{2, Poly(1)}, {1, lam(1)}});
    CHECK(d.division_steps == std::vector<int>{1});
}

TEST_CASE("closed forms agree with the division algorithm inside their ranges") {
    for (int n = 2; n <= 5; ++n) {
        for (const ClosedFormFamily& family : closed_form_families(n)) {
            const int to = family.valid_to.value_or(family.valid_from + 25);
            for (int l = family.valid_from; l <= to; ++l) {
                CAPTURE(n);
                CAPTURE(family.variant);
                CAPTURE(l);
                CHECK(closed_form_numerator(family, l) == nonzero(dec(n, l).fractions));
            }
        }
    }
}

TEST_CASE("closed form ranges") {
    const ClosedFormFamily& g = closed_form_family(4, 3);
    CHECK(g.valid_from == 5);
    CHECK(g.valid_to == 16);
    CHECK_THROWS_AS(closed_form_numerator(g, 17), ClosedFormRangeError);
    CHECK_THROWS_AS(closed_form_numerator(g, 4), ClosedFormRangeError);
    CHECK_THROWS_AS(closed_form_family(4, 5), std::out_of_range);
    CHECK_THROWS_AS(closed_form_families(6), std::out_of_range);
    CHECK(closed_form_families(5).size() == 7);
}

TEST_CASE("thresholds") {
    const ThresholdReport r4 = find_threshold(4, 60, 30);
    CHECK(r4.conclusive);
    CHECK(r4.first_stable_l == 17);
    CHECK(r4.stable_from == 17);
    CHECK(r4.stable_k == 3);
    CHECK(r4.matches_tabulated());
    CHECK(r4.k_decreases.empty());

    const ThresholdReport r3 = find_threshold(3, 40, 20);
    CHECK(r3.stable_from == 2);
    CHECK(r3.first_stable_l == 1);
    CHECK(r3.matches_tabulated());

    const ThresholdReport short_scan = find_threshold(5, 90, 20);
    CHECK_FALSE(short_scan.conclusive);
    CHECK_FALSE(short_scan.matches_tabulated());

    CHECK_THROWS_AS(find_threshold(4, 10, 10), std::invalid_argument);
    CHECK_THROWS_AS(find_threshold(4, 10, 0), std::invalid_argument);
}

TEST_CASE("asymptotic coefficient totals") {
    const CoefficientTotals t3 = asymptotic_coefficient_totals(3, 5);
    CHECK(t3.per_fraction == std::vector<std::pair<int, ExactRational>>{{6, 22}, {5, 44}});
    CHECK(t3.total == ExactRational(66));
    CHECK(asymptotic_coefficient_totals(4, 20).total == ExactRational(11562));
    CHECK(asymptotic_coefficient_totals(5, 100).total == ExactRational(66098850));
    for (int n = 3; n <= 5; ++n) {
        for (int l = *tabulated_threshold(n) + 1; l <= *tabulated_threshold(n) + 20; ++l) {
            CAPTURE(n);
            CAPTURE(l);
            const CoefficientTotals computed = asymptotic_coefficient_totals(n, l);
            const CoefficientTotals closed = asymptotic_coefficient_totals_closed_form(n, l);
            CHECK(computed.per_fraction == closed.per_fraction);
            CHECK(computed.total == closed.total);
        }
    }
    CHECK_THROWS_AS(asymptotic_coefficient_totals(4, 16), std::domain_error);
    CHECK_THROWS_AS(asymptotic_coefficient_totals(6, 400), std::invalid_argument);
}

TEST_CASE("free (1)-covariant modules") {
    const Conjecture2Report report = conjecture2_check(5);
    CHECK(report.l1_free);
    bool saw_n3 = false;
    for (const Conjecture2Entry& e : report.entries) {
        if (e.target_l == 1) {
            CHECK(e.fraction_count == 1);
        }
        if (e.n_vectors == 3 && e.target_l == 1) {
            CHECK(e.numerator == lam(1, 3) + lam(2, 3));
            saw_n3 = true;
        }
        if (e.n_vectors == 4 && e.target_l == 2) {
            CHECK(e.numerator == lam(2, 10) + lam(3, 20) + lam(4, 10));
        }
        if (e.n_vectors == 5 && e.target_l == 3) {
            CHECK(e.numerator == lam(3, 35) + lam(4, 105) + lam(5, 105) + lam(6, 35));
        }
    }
    CHECK(saw_n3);

    // L = N - 1 already needs N - 1 fractions for N = 3, 4, 5.
    CHECK_FALSE(report.below_n_single);
    CHECK_FALSE(report.holds());
    const auto bad = report.counterexamples();
    REQUIRE(bad.size() == 3);
    for (std::size_t i = 0; i < bad.size(); ++i) {
        CHECK(bad[i].n_vectors == static_cast<int>(i) + 3);
        CHECK(bad[i].target_l == static_cast<int>(i) + 2);
        CHECK(bad[i].fraction_count == static_cast<int>(i) + 2);
    }
}

TEST_CASE("golden tables") {
    for (const auto& [n, name] : std::vector<std::pair<int, std::string>>{{3, "table2"}, {4, "table3"}, {5, "table5"}}) {
        std::ifstream in(std::string(MOLIEN_FIXTURE_DIR) + "/" + name + ".txt");
        REQUIRE(in.good());
        std::string line;
        int rows = 0;
        while (std::getline(in, line)) {
            std::istringstream fields(line);
            int variant = 0;
            std::string l_text;
            fields >> variant >> l_text;
            const int l = std::stoi(l_text.substr(1, l_text.size() - 2));
            std::string expression;
            std::getline(fields >> std::ws, expression);
            const MolienQuery q = MolienQuery::make(n, l);
            CAPTURE(line);
            CHECK(variant_index(q) == variant);
            CHECK(format_fraction_sum(decompose(q).fractions, Notation{true}) == expression);
            ++rows;
        }
        CHECK(rows > 5);
    }
}
