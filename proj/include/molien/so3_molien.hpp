#pragma once

#include <optional>

#include "molien/fraction.hpp"
#include "molien/series.hpp"

namespace molien {

/// Number of vectors N >= 1 and target irrep (L), L >= 0.
struct MolienQuery {
    int n_vectors = 1;
    int target_l = 0;

    /// Validates and builds a query; throws std::invalid_argument.
    static MolienQuery make(int n_vectors, int target_l);
};

/// (1/pi) * integral_0^pi cos(n x) / (1 - 2 lambda cos x + lambda^2)^m dx for |lambda| < 1,
/// as a rational function of lambda. Requires n >= 0, m >= 1.
///
/// Unreduced, the denominator is (1 - lambda^2)^(2m-1) over the numerator
/// sum_{k<m} C(m+n-1, k) C(2m-k-2, m-1) lambda^(2m+n-2-2k) (1 - lambda^2)^k.
RationalFraction gr_integral(int n, int m);

/// Numerator of gr_integral over (1 - lambda^2)^(2m-1), before any reduction.
Poly gr_integral_numerator(int n, int m);

/// SO(2)-type Molien integral for N vectors and final weight l.
RationalFraction molien_so2(int l, int n_vectors);

/// Generating function of (L)-covariants of N vectors under SO(3):
/// (1 - lambda)^-N [g_SO2(L) - g_SO2(L+1)], canonical form.
RationalFraction molien_so3(const MolienQuery& query);

/// Exponent e of the (1 - lambda^2)^e presentation used by the tables:
/// 3N-3, or 1 for a single vector.
int presentation_exponent(int n_vectors);

/// Numerator of molien_so3 over (1 - lambda^2)^presentation_exponent(N).
Poly molien_so3_presented(const MolienQuery& query);

/// Character of the (L) irrep at rotation angle omega: sin((L+1/2) w) / sin(w/2),
/// with the limit 2L+1 at w -> 0.
double character(int l, double omega);

struct SumRuleReport {
    bool holds = false;
    std::optional<int> first_failing_degree;
    TruncatedSeries weighted_sum{0};
    TruncatedSeries expected{0};
};

/// Checks sum_{L<=D} (2L+1) g(N, L) == 1/(1 - lambda)^(3N) through lambda^D.
SumRuleReport sum_rule_check(int n_vectors, int order);

}  // namespace molien
