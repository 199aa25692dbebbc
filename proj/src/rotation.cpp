#include "molien/rotation.hpp"

#include <Eigen/LU>
#include <cmath>
#include <stdexcept>

#include "molien/quadrature.hpp"
#include "molien/so3_molien.hpp"

namespace molien {

namespace {

const double kPi = std::acos(-1.0);

void check_lambda(double lambda) {
    if (!(std::abs(lambda) < 1.0)) {
        throw std::invalid_argument("lambda must satisfy |lambda| < 1");
    }
}

void check_vectors(int n_vectors) {
    if (n_vectors < 1) {
        throw std::invalid_argument("number of vectors must be >= 1");
    }
}

}  // namespace

RotationParams RotationParams::make(double phi, double theta, double omega) {
    if (!(phi >= 0.0 && phi < 2.0 * kPi)) {
        throw std::invalid_argument("phi must lie in [0, 2 pi)");
    }
    if (!(theta >= 0.0 && theta <= kPi)) {
        throw std::invalid_argument("theta must lie in [0, pi]");
    }
    if (!(omega >= 0.0 && omega <= kPi)) {
        throw std::invalid_argument("omega must lie in [0, pi]");
    }
    return RotationParams{phi, theta, omega};
}

Matrix3 m1(double theta, double phi) {
    const double ct = std::cos(theta), st = std::sin(theta);
    const double cp = std::cos(phi), sp = std::sin(phi);
    Matrix3 m;
    m << cp * ct, -sp, cp * st,
         sp * ct, cp, sp * st,
         -st, 0.0, ct;
    return m;
}

Matrix3 m2(double omega) {
    const double c = std::cos(omega), s = std::sin(omega);
    Matrix3 m;
    m << c, -s, 0.0,
         s, c, 0.0,
         0.0, 0.0, 1.0;
    return m;
}

Matrix3 rotation(const RotationParams& params) {
    const Matrix3 frame = m1(params.theta, params.phi);
    return frame * m2(params.omega) * frame.transpose();
}

DetIdentityResult det_identity_check(const RotationParams& params, double lambda, int n_vectors) {
    check_lambda(lambda);
    check_vectors(n_vectors);
    const Matrix3 r = rotation(params);
    const Eigen::Index dim = 3 * n_vectors;
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(dim, dim);
    for (int k = 0; k < n_vectors; ++k) {
        d.block<3, 3>(3 * k, 3 * k) = r;
    }
    DetIdentityResult out;
    out.lhs = (Eigen::MatrixXd::Identity(dim, dim) - lambda * d).partialPivLu().determinant();
    out.rhs = std::pow((1.0 - lambda) * (1.0 - 2.0 * lambda * std::cos(params.omega) + lambda * lambda), n_vectors);
    out.difference = std::abs(out.lhs - out.rhs);
    return out;
}

double molien_numeric(int n_vectors, int target_l, double lambda, int quad_points) {
    check_lambda(lambda);
    check_vectors(n_vectors);
    if (target_l < 0) {
        throw std::invalid_argument("L must be >= 0");
    }
    if (quad_points < 1) {
        throw std::invalid_argument("quadrature order must be >= 1");
    }
    const GaussLegendre& rule = GaussLegendre::cached(quad_points);
    const double integral = rule.integrate(
        [&](double w) {
            return std::sin((target_l + 0.5) * w) * std::sin(0.5 * w) /
                   std::pow(1.0 - 2.0 * lambda * std::cos(w) + lambda * lambda, n_vectors);
        },
        0.0, kPi);
    return 2.0 / kPi * integral / std::pow(1.0 - lambda, n_vectors);
}

double molien_numeric(int n_vectors, int target_l, double lambda) {
    return molien_numeric(n_vectors, target_l, lambda, default_quadrature_order());
}

double molien_numeric_group_average(int n_vectors, int target_l, double lambda, int points_per_axis) {
    check_lambda(lambda);
    check_vectors(n_vectors);
    if (target_l < 0) {
        throw std::invalid_argument("L must be >= 0");
    }
    const GaussLegendre& rule = GaussLegendre::cached(points_per_axis);
    const auto integrate = [&](const std::function<double(double)>& f, double a, double b) {
        return rule.integrate(f, a, b);
    };
    const double total = integrate(
        [&](double omega) {
            const double weight = std::pow(std::sin(0.5 * omega), 2) * character(target_l, omega);
            return weight * integrate(
                                [&](double theta) {
                                    return std::sin(theta) *
                                           integrate(
                                               [&](double phi) {
                                                   const Matrix3 r = rotation(RotationParams{phi, theta, omega});
                                                   const double det =
                                                       (Matrix3::Identity() - lambda * r).determinant();
                                                   return 1.0 / std::pow(det, n_vectors);
                                               },
                                               0.0, 2.0 * kPi);
                                },
                                0.0, kPi);
        },
        0.0, kPi);
    return total / (2.0 * kPi * kPi);
}

}  // namespace molien
