#pragma once

#include "molien/poly.hpp"
#include "molien/series.hpp"

namespace molien {

/// numerator / ((1 - lambda)^a * (1 - lambda^2)^b).
///
/// Only these two denominator factors exist; anything else is rejected
/// where it would arise. The canonical form removes every common factor
/// (1 - lambda) or (1 + lambda) between numerator and denominator and then
/// writes the denominator with as many (1 - lambda^2) factors as possible.
/// A (1 - lambda) factor stays in the numerator only when the remaining
/// (1 + lambda) power of the denominator exceeds its (1 - lambda) power.
class RationalFraction {
public:
    /// The zero fraction 0/1.
    RationalFraction() = default;

    static RationalFraction canonical(Poly numerator, int exp_one_minus_lambda, int exp_one_minus_lambda_sq);
    /// Stores exactly what it is given.
    static RationalFraction unreduced(Poly numerator, int exp_one_minus_lambda, int exp_one_minus_lambda_sq);

    const Poly& numerator() const { return numerator_; }
    int exp_one_minus_lambda() const { return exp_one_minus_lambda_; }
    int exp_one_minus_lambda_sq() const { return exp_one_minus_lambda_sq_; }
    Poly denominator() const;

    bool is_zero() const { return numerator_.is_zero(); }

    /// Numerator q with this == q / (1 - lambda^2)^e. Needs e >= a + b.
    Poly presented_over_one_minus_lambda_sq(int e) const;

    ExactRational evaluate(const ExactRational& lambda) const;
    double evaluate(double lambda) const;

    /// Mathematical equality, decided by cross-multiplication.
    friend bool operator==(const RationalFraction& lhs, const RationalFraction& rhs);

private:
    RationalFraction(Poly numerator, int a, int b)
        : numerator_(std::move(numerator)), exp_one_minus_lambda_(a), exp_one_minus_lambda_sq_(b) {}

    Poly numerator_;
    int exp_one_minus_lambda_ = 0;
    int exp_one_minus_lambda_sq_ = 0;
};

RationalFraction fraction_add(const RationalFraction& f, const RationalFraction& g);
RationalFraction fraction_scale(const RationalFraction& f, const ExactRational& c);

/// Taylor coefficients of f about lambda = 0 through lambda^order.
TruncatedSeries fraction_to_series(const RationalFraction& f, int order);

}  // namespace molien
