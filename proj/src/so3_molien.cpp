#include "molien/so3_molien.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace molien {

MolienQuery MolienQuery::make(int n_vectors, int target_l) {
    if (n_vectors < 1) {
        throw std::invalid_argument("number of vectors must be >= 1, got " + std::to_string(n_vectors));
    }
    if (target_l < 0) {
        throw std::invalid_argument("L must be >= 0, got " + std::to_string(target_l));
    }
    return MolienQuery{n_vectors, target_l};
}

Poly gr_integral_numerator(int n, int m) {
    if (n < 0 || m < 1) {
        throw std::invalid_argument("gr_integral: need n >= 0 and m >= 1");
    }
    Poly numerator;
    for (int k = 0; k < m; ++k) {
        const ExactRational c = binomial(m + n - 1, k) * binomial(2 * m - k - 2, m - 1);
        numerator += Poly::monomial(c, 2 * m + n - 2 - 2 * k) * one_minus_lambda_sq().pow(static_cast<unsigned>(k));
    }
    return numerator;
}

RationalFraction gr_integral(int n, int m) {
    return RationalFraction::canonical(gr_integral_numerator(n, m), 0, 2 * m - 1);
}

RationalFraction molien_so2(int l, int n_vectors) {
    if (n_vectors < 1) {
        throw std::invalid_argument("molien_so2: number of vectors must be >= 1");
    }
    return gr_integral(l, n_vectors);
}

RationalFraction molien_so3(const MolienQuery& query) {
    const int n = query.n_vectors;
    const int l = query.target_l;
    const RationalFraction difference = fraction_add(molien_so2(l, n), fraction_scale(molien_so2(l + 1, n), -1));
    return RationalFraction::canonical(difference.numerator(), difference.exp_one_minus_lambda() + n,
                                       difference.exp_one_minus_lambda_sq());
}

int presentation_exponent(int n_vectors) {
    return n_vectors == 1 ? 1 : 3 * n_vectors - 3;
}

Poly molien_so3_presented(const MolienQuery& query) {
    return molien_so3(query).presented_over_one_minus_lambda_sq(presentation_exponent(query.n_vectors));
}

double character(int l, double omega) {
    if (l < 0) {
        throw std::invalid_argument("character: L must be >= 0");
    }
    const double half = std::sin(0.5 * omega);
    if (std::abs(half) < 1e-6) {
        // 1 + 2 sum_k cos(k w), regular at w = 0
        double sum = 1.0;
        for (int k = 1; k <= l; ++k) {
            sum += 2.0 * std::cos(k * omega);
        }
        return sum;
    }
    return std::sin((l + 0.5) * omega) / half;
}

SumRuleReport sum_rule_check(int n_vectors, int order) {
    if (order < 0) {
        throw std::invalid_argument("sum_rule_check: negative order");
    }
    SumRuleReport report;
    report.weighted_sum = TruncatedSeries(order);
    // g(N, L) starts at lambda^L, so L > order cannot contribute.
    for (int l = 0; l <= order; ++l) {
        report.weighted_sum +=
            fraction_to_series(molien_so3(MolienQuery::make(n_vectors, l)), order) * ExactRational(2 * l + 1);
    }
    report.expected = TruncatedSeries::inverse_power(1, 3 * n_vectors, order);
    report.holds = true;
    for (int d = 0; d <= order; ++d) {
        if (report.weighted_sum[d] != report.expected[d]) {
            report.holds = false;
            report.first_failing_degree = d;
            break;
        }
    }
    return report;
}

}  // namespace molien
