#include <doctest.h>

#include <cmath>
#include <random>

#include "molien/covariants.hpp"
#include "molien/so3_molien.hpp"

using namespace molien;

namespace {

const double kPi = std::acos(-1.0);

RotationParams random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    return RotationParams{2.0 * kPi * unit(rng) * 0.999999, kPi * unit(rng), kPi * unit(rng)};
}

VectorPair random_pair(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    VectorPair p;
    for (int i = 0; i < 3; ++i) {
        p.v1[i] = coord(rng);
        p.v2[i] = coord(rng);
    }
    return p;
}

}  // namespace

TEST_CASE("invariants") {
    const auto q = primary_invariants({Vector3::UnitX(), Vector3::UnitY()});
    CHECK(q == std::array<double, 3>{1.0, 1.0, 0.0});
    const auto ones = primary_invariants({Vector3::Ones(), Vector3::Ones()});
    CHECK(ones == std::array<double, 3>{3.0, 3.0, 3.0});
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const VectorPair p = random_pair(rng);
        const auto a = primary_invariants(p);
        const auto b = primary_invariants(p.rotated(rotation(random_params(rng))));
        for (int k = 0; k < 3; ++k) {
            CHECK(std::abs(a[static_cast<std::size_t>(k)] - b[static_cast<std::size_t>(k)]) < 1e-12);
        }
    }
}

TEST_CASE("vector covariants") {
    CHECK(l1_covariants({Vector3::UnitX(), Vector3::UnitY()})[2] == Vector3::UnitZ());
    CHECK(l1_covariants({Vector3(1, 2, 3), Vector3(2, 4, 6)})[2].isZero());
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const VectorPair p = random_pair(rng);
        const Matrix3 r = rotation(random_params(rng));
        const auto before = l1_covariants(p);
        const auto after = l1_covariants(p.rotated(r));
        for (std::size_t k = 0; k < 3; ++k) {
            CHECK((r * before[k] - after[k]).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("quadratic quintets") {
    CHECK(l2_covariants({Vector3::UnitZ(), Vector3::Zero()})[0] == (Quintet() << 2, 0, 0, 0, 0).finished());
    CHECK(l2_covariants({Vector3::UnitX(), Vector3::Zero()})[0] == (Quintet() << -1, 0, 0, 0, 1).finished());
    const VectorPair p{Vector3(1, 2, 3), Vector3(-1, 0, 2)};
    // x1 z2 + x2 z1, y1 z2 + z1 y2, x1 y2 + y1 x2
    CHECK(l2_covariants(p)[2] == (Quintet() << 2 * 6 - (-1) - 0, 2 - 3, 4, -2, -1).finished());

    std::mt19937_64 rng(9);
    for (int i = 0; i < 30; ++i) {
        const RotationParams params = random_params(rng);
        for (int which = 0; which < 3; ++which) {
            const QuintetClosure c = quintet_closure(which, params, rng);
            CHECK(c.residual < 1e-12);
            CHECK(std::abs(c.trace - c.expected_trace) < 1e-10);
        }
    }
    CHECK_THROWS_AS(quintet_closure(3, RotationParams{}, rng), std::invalid_argument);
}

TEST_CASE("generator counts match the series") {
    std::mt19937_64 rng(13);
    for (const auto& [key, listed] : listed_generator_counts()) {
        const auto [l, degree] = key;
        CAPTURE(l);
        CAPTURE(degree);
        CHECK(independent_generator_count(l, degree, rng) == listed);
        const TruncatedSeries s = fraction_to_series(molien_so3(MolienQuery::make(2, l)), degree);
        CHECK(s[degree] == ExactRational(listed));
    }
    CHECK_THROWS_AS(independent_generator_count(3, 3, rng), std::invalid_argument);
}
