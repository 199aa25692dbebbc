#pragma once

#include <Eigen/Core>

namespace molien {

using Matrix3 = Eigen::Matrix3d;

/// Axis direction (theta, phi) in spherical angles and rotation angle omega.
struct RotationParams {
    double phi = 0.0;    // [0, 2 pi)
    double theta = 0.0;  // [0, pi]
    double omega = 0.0;  // [0, pi]

    /// Throws std::invalid_argument when an angle is out of range.
    static RotationParams make(double phi, double theta, double omega);
};

/// Orthogonal frame whose third column is the rotation axis
/// (sin theta cos phi, sin theta sin phi, cos theta).
Matrix3 m1(double theta, double phi);

/// Rotation by omega about the z axis.
Matrix3 m2(double omega);

/// m1 * m2 * m1^T: rotation by omega about the axis of m1.
Matrix3 rotation(const RotationParams& params);

struct DetIdentityResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double difference = 0.0;
};

/// det(I - lambda D) for D the 3N x 3N block-diagonal action on N vectors,
/// against [(1 - lambda)(1 - 2 lambda cos omega + lambda^2)]^N.
DetIdentityResult det_identity_check(const RotationParams& params, double lambda, int n_vectors);

/// g(N, L) at lambda from the one-dimensional omega integral,
/// (2/pi) (1 - lambda)^-N int_0^pi sin((L+1/2) w) sin(w/2) / (1 - 2 lambda cos w + lambda^2)^N dw.
double molien_numeric(int n_vectors, int target_l, double lambda, int quad_points);
double molien_numeric(int n_vectors, int target_l, double lambda);

/// Same value from the full group average over (phi, theta, omega) with the
/// invariant measure sin(theta) sin^2(omega/2) / (2 pi^2) and det(I - lambda D)
/// taken from the rotation matrices themselves. Slow; product rule with
/// `points_per_axis` nodes on each axis.
double molien_numeric_group_average(int n_vectors, int target_l, double lambda, int points_per_axis);

}  // namespace molien
