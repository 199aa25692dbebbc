#include "molien/covariants.hpp"

#include <Eigen/Geometry>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace molien {

namespace {

Quintet quintet(const Vector3& a, const Vector3& b, bool pure) {
    const double f = pure ? 0.5 : 1.0;
    Quintet q;
    q << 2.0 * a.z() * b.z() - a.x() * b.x() - a.y() * b.y(),
         f * (a.x() * b.z() + a.z() * b.x()),
         f * (a.y() * b.z() + a.z() * b.y()),
         f * (a.x() * b.y() + a.y() * b.x()),
         a.x() * b.x() - a.y() * b.y();
    return q;
}

VectorPair random_pair(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    VectorPair p;
    for (int i = 0; i < 3; ++i) {
        p.v1[i] = gauss(rng);
        p.v2[i] = gauss(rng);
    }
    return p;
}

// Component functions of every listed generator for (L, degree), stacked.
std::vector<double> components(int l, int degree, const VectorPair& p) {
    std::vector<double> out;
    if (l == 0 && degree == 2) {
        for (double q : primary_invariants(p)) {
            out.push_back(q);
        }
    } else if (l == 1 && (degree == 1 || degree == 2)) {
        const auto c = l1_covariants(p);
        for (int k = degree == 1 ? 0 : 2; k < (degree == 1 ? 2 : 3); ++k) {
            out.insert(out.end(), c[static_cast<std::size_t>(k)].data(), c[static_cast<std::size_t>(k)].data() + 3);
        }
    } else if (l == 2 && degree == 2) {
        for (const Quintet& q : l2_covariants(p)) {
            out.insert(out.end(), q.data(), q.data() + 5);
        }
    } else {
        throw std::invalid_argument("no generators listed for this (L, degree)");
    }
    return out;
}

}  // namespace

std::array<double, 3> primary_invariants(const VectorPair& p) {
    return {p.v1.squaredNorm(), p.v2.squaredNorm(), p.v1.dot(p.v2)};
}

std::array<Vector3, 3> l1_covariants(const VectorPair& p) { return {p.v1, p.v2, p.v1.cross(p.v2)}; }

std::array<Quintet, 3> l2_covariants(const VectorPair& p) {
    return {quintet(p.v1, p.v1, true), quintet(p.v2, p.v2, true), quintet(p.v1, p.v2, false)};
}

QuintetClosure quintet_closure(int which, const RotationParams& rotation_params, std::mt19937_64& rng, int samples) {
    if (which < 0 || which > 2) {
        throw std::invalid_argument("quintet index must be 0, 1 or 2");
    }
    if (samples < 5) {
        throw std::invalid_argument("need at least 5 samples");
    }
    const Matrix3 r = rotation(rotation_params);
    Eigen::MatrixXd before(5, samples);
    Eigen::MatrixXd after(5, samples);
    for (int s = 0; s < samples; ++s) {
        const VectorPair p = random_pair(rng);
        before.col(s) = l2_covariants(p)[static_cast<std::size_t>(which)];
        after.col(s) = l2_covariants(p.rotated(r))[static_cast<std::size_t>(which)];
    }
    // T before = after  <=>  before^T T^T = after^T
    const Eigen::MatrixXd t = before.transpose().colPivHouseholderQr().solve(after.transpose()).transpose();
    QuintetClosure out;
    out.residual = (t * before - after).cwiseAbs().maxCoeff();
    out.trace = t.trace();
    out.expected_trace = 1.0 + 2.0 * std::cos(rotation_params.omega) + 2.0 * std::cos(2.0 * rotation_params.omega);
    return out;
}

int independent_generator_count(int l, int degree, std::mt19937_64& rng, int samples) {
    const std::size_t rows = components(l, degree, VectorPair{}).size();
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows), samples);
    for (int s = 0; s < samples; ++s) {
        const std::vector<double> c = components(l, degree, random_pair(rng));
        for (std::size_t i = 0; i < rows; ++i) {
            m(static_cast<Eigen::Index>(i), s) = c[i];
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    svd.setThreshold(1e-10);
    return static_cast<int>(svd.rank()) / (2 * l + 1);
}

std::map<std::pair<int, int>, int> listed_generator_counts() {
    return {{{0, 2}, 3}, {{1, 1}, 2}, {{1, 2}, 1}, {{2, 2}, 3}};
}

}  // namespace molien
