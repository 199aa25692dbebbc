#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdlib>
#include <random>

#include "molien/quadrature.hpp"
#include "molien/rotation.hpp"
#include "molien/so3_molien.hpp"

using namespace molien;

namespace {

const double kPi = std::acos(-1.0);

RotationParams random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    return RotationParams::make(2.0 * kPi * unit(rng) * 0.999999, kPi * unit(rng), kPi * unit(rng));
}

double exact(int n, int l, double lambda) { return molien_so3(MolienQuery::make(n, l)).evaluate(lambda); }

}  // namespace

TEST_CASE("gauss-legendre rules") {
    const GaussLegendre& g3 = GaussLegendre::cached(3);
    CHECK(g3.nodes()[2] == doctest::Approx(std::sqrt(0.6)).epsilon(1e-15));
    CHECK(g3.weights()[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-15));
    CHECK(&GaussLegendre::cached(3) == &g3);
    const GaussLegendre g1(1);
    CHECK(g1.nodes()[0] == doctest::Approx(0.0));
    CHECK(g1.weights()[0] == doctest::Approx(2.0));
    // exact for degree 2n - 1
    const GaussLegendre g5(5);
    CHECK(g5.integrate([](double x) { return std::pow(x, 9) + std::pow(x, 8); }, -1.0, 1.0) ==
          doctest::Approx(2.0 / 9.0).epsilon(1e-14));
    double sum = 0.0;
    for (double w : GaussLegendre::cached(256).weights()) {
        sum += w;
    }
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-13));
    CHECK_THROWS_AS(GaussLegendre(0), std::invalid_argument);
}

TEST_CASE("quadrature order from the environment") {
    ::setenv("MOLIEN_QUAD_ORDER", "128", 1);
    CHECK(default_quadrature_order() == 128);
    ::setenv("MOLIEN_QUAD_ORDER", "12x", 1);
    CHECK(default_quadrature_order() == 256);
    ::unsetenv("MOLIEN_QUAD_ORDER");
    CHECK(default_quadrature_order() == 256);
}

TEST_CASE("rotation matrices") {
    CHECK(m1(0.0, 0.0).isApprox(Matrix3::Identity(), 1e-15));
    Eigen::Vector3d axis = m1(kPi / 2, 0.0).col(2);
    CHECK(axis.isApprox(Eigen::Vector3d(1.0, 0.0, 0.0), 1e-15));
    CHECK(rotation(RotationParams::make(1.0, 2.0, 0.0)).isApprox(Matrix3::Identity(), 1e-15));
    CHECK(rotation(RotationParams::make(0.0, 0.0, 0.7)).isApprox(m2(0.7), 1e-15));
    CHECK_THROWS_AS(RotationParams::make(-0.1, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(RotationParams::make(0.0, 3.2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(RotationParams::make(0.0, 0.0, 3.2), std::invalid_argument);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const RotationParams p = random_params(rng);
        const Matrix3 f = m1(p.theta, p.phi);
        const Matrix3 r = rotation(p);
        CHECK((f * f.transpose() - Matrix3::Identity()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((r * r.transpose() - Matrix3::Identity()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(std::abs(r.determinant() - 1.0) < 1e-12);
        CHECK(std::abs(r.trace() - (1.0 + 2.0 * std::cos(p.omega))) < 1e-12);
        const Eigen::Vector3d n(std::sin(p.theta) * std::cos(p.phi), std::sin(p.theta) * std::sin(p.phi),
                                std::cos(p.theta));
        CHECK((f.col(2) - n).norm() < 1e-12);
        CHECK((r * n - n).norm() < 1e-12);
    }
}

TEST_CASE("determinant identity") {
    const DetIdentityResult identity = det_identity_check(RotationParams::make(0.4, 1.1, 0.0), 0.35, 1);
    CHECK(identity.lhs == doctest::Approx(std::pow(0.65, 3)).epsilon(1e-14));
    const DetIdentityResult half_turn = det_identity_check(RotationParams::make(0.0, 0.0, kPi), 0.3, 1);
    CHECK(half_turn.rhs == doctest::Approx(0.7 * 1.69).epsilon(1e-14));
    CHECK(half_turn.difference < 1e-12);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        CHECK(det_identity_check(random_params(rng), 0.2, 3).difference < 1e-10);
    }
    CHECK_THROWS_AS(det_identity_check(RotationParams{}, 1.0, 1), std::invalid_argument);
}

TEST_CASE("half-angle product") {
    for (int l = 0; l <= 6; ++l) {
        for (double w = 0.0; w <= kPi; w += 0.05) {
            const double lhs = std::sin((l + 0.5) * w) * std::sin(0.5 * w);
            const double rhs = 0.5 * (std::cos(l * w) - std::cos((l + 1) * w));
            CHECK(std::abs(lhs - rhs) < 1e-14);
        }
    }
}

TEST_CASE("one-dimensional integral matches the exact functions") {
    CHECK(molien_numeric(1, 0, 0.1, 256) == doctest::Approx(1.0 / 0.99).epsilon(1e-12));
    CHECK(molien_numeric(2, 1, 0.1, 256) == doctest::Approx(0.21 / std::pow(0.99, 3)).epsilon(1e-12));
    CHECK(molien_numeric(3, 0, 0.2, 256) == doctest::Approx(1.008 / std::pow(0.96, 6)).epsilon(1e-12));
    for (int n = 1; n <= 5; ++n) {
        for (int l = 0; l <= 6; ++l) {
            for (double lambda : {0.05, 0.1, 0.2}) {
                CAPTURE(n);
                CAPTURE(l);
                CAPTURE(lambda);
                CHECK(std::abs(molien_numeric(n, l, lambda, 128) - exact(n, l, lambda)) < 1e-8);
            }
        }
    }
    CHECK_THROWS_AS(molien_numeric(1, 0, 1.2, 64), std::invalid_argument);
    CHECK_THROWS_AS(molien_numeric(1, -1, 0.1, 64), std::invalid_argument);
}

TEST_CASE("full group average reduces to the omega integral") {
    for (int n = 1; n <= 2; ++n) {
        for (int l = 0; l <= 2; ++l) {
            CAPTURE(n);
            CAPTURE(l);
            CHECK(std::abs(molien_numeric_group_average(n, l, 0.2, 24) - exact(n, l, 0.2)) < 1e-9);
        }
    }
}
