#include <doctest.h>

#include "molien/finite_group.hpp"

using namespace molien;

namespace {

const std::string kGroups = std::string(MOLIEN_FIXTURE_DIR) + "/groups/";

// Monomials of degree d in 3 variables: (d+1)(d+2)/2. Inversion keeps even degrees in A1, odd in A2.
std::vector<ExactRational> parity_counts(int parity, int order) {
    std::vector<ExactRational> c(static_cast<std::size_t>(order + 1));
    for (int d = parity; d <= order; d += 2) {
        c[static_cast<std::size_t>(d)] = ExactRational((d + 1) * (d + 2) / 2);
    }
    return c;
}

}  // namespace

TEST_CASE("characteristic determinants") {
    CHECK(characteristic_determinant({{1, 0}, {0, 1}}) == one_minus_lambda().pow(2));
    CHECK(characteristic_determinant({{0, 1}, {1, 0}}) == one_minus_lambda_sq());
    // cyclic permutation: 1 - l^3, needs a row swap on the way
    CHECK(characteristic_determinant({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}) == Poly::dense({1, 0, 0, -1}));
    CHECK(characteristic_determinant({{ExactRational(1, 2)}}) == Poly::dense({1, ExactRational(-1, 2)}));
}

TEST_CASE("inversion group") {
    const FiniteGroupRep ci = FiniteGroupRep::inversion();
    const RationalFraction a1 = molien_finite(ci, "A1");
    const RationalFraction a2 = molien_finite(ci, "A2");
    CHECK(a1.numerator() == Poly::dense({1, 0, 3}));
    CHECK(a1.exp_one_minus_lambda() == 0);
    CHECK(a1.exp_one_minus_lambda_sq() == 3);
    CHECK(a2.numerator() == Poly::dense({0, 3, 0, 1}));
    CHECK(a2.exp_one_minus_lambda_sq() == 3);
    CHECK(fraction_to_series(a1, 12).coefficients() == parity_counts(0, 12));
    CHECK(fraction_to_series(a2, 12).coefficients() == parity_counts(1, 12));
    CHECK(finite_dimension_sum_rule(ci, 12));
    CHECK(finite_dimension_sum_rule(ci.on_copies(2), 12));
    CHECK_THROWS_AS(molien_finite(ci, "Eg"), std::invalid_argument);
}

TEST_CASE("trivial group") {
    const RationalFraction g = molien_finite(FiniteGroupRep::trivial(), "A");
    CHECK(g == RationalFraction::unreduced(Poly(1), 3, 0));
    CHECK(g.exp_one_minus_lambda() == 3);
}

TEST_CASE("several vectors") {
    const FiniteGroupRep ci2 = FiniteGroupRep::inversion().on_copies(2);
    CHECK(ci2.dimension() == 6);
    // (1/2)(1/(1-l)^6 + 1/(1+l)^6), series has only even degrees
    const TruncatedSeries s = fraction_to_series(molien_finite(ci2, "A1"), 6);
    CHECK(s.coefficients() == std::vector<ExactRational>{1, 0, 21, 0, 126, 0, 462});
}

TEST_CASE("group files") {
    const FiniteGroupRep cs = FiniteGroupRep::from_file(kGroups + "cs.json");
    CHECK(cs.name() == "Cs");
    CHECK(cs.order() == 2);
    // z odd, x and y even: A' = 1/((1-l)^2 (1-l^2)), A'' = l/((1-l)^2 (1-l^2))
    CHECK(molien_finite(cs, "A'") == RationalFraction::unreduced(Poly(1), 2, 1));
    CHECK(molien_finite(cs, "A''") == RationalFraction::unreduced(Poly::monomial(1, 1), 2, 1));
    CHECK(finite_dimension_sum_rule(cs, 10));

    const FiniteGroupRep c3 = FiniteGroupRep::from_file(kGroups + "c3_cyclic.json");
    CHECK_THROWS_AS(molien_finite(c3, "A"), std::domain_error);
    CHECK_THROWS_AS(FiniteGroupRep::from_file(kGroups + "missing.json"), std::invalid_argument);
}

TEST_CASE("group validation") {
    const auto doc = [](const std::string& elements, const std::string& irreps, int order = 2) {
        return R"({"schema": "molien-finite-group/1", "name": "G", "order": )" + std::to_string(order) +
               R"(, "elements": )" + elements + R"(, "irreps": )" + irreps + "}";
    };
    const std::string good_elements = R"([{"label": "E", "matrix": [[1]]}, {"label": "s", "matrix": [[-1]]}])";
    const std::string good_irreps =
        R"([{"label": "A", "dimension": 1, "characters": [1, 1]}, {"label": "B", "dimension": 1, "characters": [1, -1]}])";
    const FiniteGroupRep g = FiniteGroupRep::from_json(doc(good_elements, good_irreps));
    CHECK(molien_finite(g, "B") == RationalFraction::unreduced(Poly::monomial(1, 1), 0, 1));

    CHECK_THROWS_AS(FiniteGroupRep::from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroupRep::from_json(R"({"schema": "other"})"), std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroupRep::from_json(doc(good_elements, good_irreps, 3)), std::invalid_argument);
    // not orthogonal
    CHECK_THROWS_AS(FiniteGroupRep::from_json(doc(R"([{"label": "E", "matrix": [[1]]}, {"label": "s", "matrix": [["1/2"]]}])",
                                                  good_irreps)),
                    std::invalid_argument);
    // not closed
    CHECK_THROWS_AS(FiniteGroupRep::from_json(doc(R"([{"label": "E", "matrix": [[1, 0], [0, 1]]}, {"label": "r", "matrix": [[0, -1], [1, 0]]}])",
                                                  good_irreps)),
                    std::invalid_argument);
    // characters not orthonormal
    CHECK_THROWS_AS(FiniteGroupRep::from_json(doc(good_elements,
                                                  R"([{"label": "A", "dimension": 1, "characters": [1, 1]}, {"label": "B", "dimension": 1, "characters": [1, 1]}])")),
                    std::invalid_argument);
    // wrong dimension at the identity
    CHECK_THROWS_AS(FiniteGroupRep::from_json(doc(good_elements,
                                                  R"([{"label": "A", "dimension": 2, "characters": [1, 1]}])")),
                    std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroupRep::from_json(doc(good_elements, R"([{"label": "A", "dimension": 1, "characters": ["x", 1]}])")),
                    std::invalid_argument);
}
