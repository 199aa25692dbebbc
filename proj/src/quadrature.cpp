#include "molien/quadrature.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace molien {

GaussLegendre::GaussLegendre(int order) {
    if (order < 1) {
        throw std::invalid_argument("Gauss-Legendre order must be >= 1");
    }
    const auto n = static_cast<std::size_t>(order);
    nodes_.resize(n);
    weights_.resize(n);
    const double pi = std::acos(-1.0);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double derivative = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // P_n(x) by the three-term recurrence
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double pn = order == 1 ? x : p1;
            const double pn_1 = order == 1 ? 1.0 : p0;
            derivative = order * (x * pn - pn_1) / (x * x - 1.0);
            const double step = pn / derivative;
            x -= step;
            if (std::abs(step) < 1e-16) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
        nodes_[i] = -x;
        nodes_[n - 1 - i] = x;
        weights_[i] = w;
        weights_[n - 1 - i] = w;
    }
}

const GaussLegendre& GaussLegendre::cached(int order) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussLegendre>> rules;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = rules[order];
    if (!slot) {
        slot = std::make_unique<GaussLegendre>(order);
    }
    return *slot;
}

double GaussLegendre::integrate(const std::function<double(double)>& f, double a, double b) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        sum += weights_[i] * f(mid + half * nodes_[i]);
    }
    return half * sum;
}

int default_quadrature_order() {
    if (const char* env = std::getenv("MOLIEN_QUAD_ORDER")) {
        try {
            std::size_t used = 0;
            const int order = std::stoi(env, &used);
            if (used == std::string(env).size() && order >= 1) {
                return order;
            }
        } catch (const std::exception&) {
        }
    }
    return 256;
}

}  // namespace molien
