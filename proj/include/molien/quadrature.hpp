#pragma once

#include <functional>
#include <vector>

namespace molien {

/// Gauss-Legendre rule on [-1, 1].
class GaussLegendre {
public:
    explicit GaussLegendre(int order);

    /// Shared, lazily built rule of the given order.
    static const GaussLegendre& cached(int order);

    int order() const { return static_cast<int>(nodes_.size()); }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

    double integrate(const std::function<double(double)>& f, double a, double b) const;

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

/// MOLIEN_QUAD_ORDER if set to an integer >= 1, else 256.
int default_quadrature_order();

}  // namespace molien
