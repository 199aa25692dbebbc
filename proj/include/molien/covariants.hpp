#pragma once

#include <Eigen/Core>
#include <array>
#include <map>
#include <random>
#include <utility>

#include "molien/rotation.hpp"

namespace molien {

using Vector3 = Eigen::Vector3d;
using Quintet = Eigen::Matrix<double, 5, 1>;

struct VectorPair {
    Vector3 v1 = Vector3::Zero();
    Vector3 v2 = Vector3::Zero();

    VectorPair rotated(const Matrix3& r) const { return {r * v1, r * v2}; }
};

/// |v1|^2, |v2|^2, v1.v2
std::array<double, 3> primary_invariants(const VectorPair& p);

/// v1, v2 and v1 x v2.
std::array<Vector3, 3> l1_covariants(const VectorPair& p);

/// Quadratic (2)-covariants: (2z^2 - x^2 - y^2, xz, yz, xy, x^2 - y^2) of v1
/// and of v2, then the mixed
/// (2 z1 z2 - x1 x2 - y1 y2, x1 z2 + x2 z1, y1 z2 + y2 z1, x1 y2 + x2 y1, x1 x2 - y1 y2).
std::array<Quintet, 3> l2_covariants(const VectorPair& p);

struct QuintetClosure {
    /// max |T q(v) - q(R v)| over the sample set, T fitted by least squares.
    double residual = 0.0;
    double trace = 0.0;
    /// 1 + 2 cos w + 2 cos 2w for the rotation angle w.
    double expected_trace = 0.0;
};

/// Fits the 5 x 5 matrix carrying quintet `which` (0..2) at v to the same
/// quintet at R v over `samples` random pairs.
QuintetClosure quintet_closure(int which, const RotationParams& rotation_params, std::mt19937_64& rng,
                               int samples = 40);

/// Numerical rank of the component functions of all listed generators of a
/// given (L, degree), divided by 2L + 1, from `samples` random pairs.
int independent_generator_count(int l, int degree, std::mt19937_64& rng, int samples = 60);

/// Generators the catalog lists, keyed by (L, degree).
std::map<std::pair<int, int>, int> listed_generator_counts();

}  // namespace molien
