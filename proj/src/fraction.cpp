#include "molien/fraction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace molien {

namespace {

Poly denominator_factor(int a, int b) {
    return one_minus_lambda().pow(static_cast<unsigned>(a)) * one_minus_lambda_sq().pow(static_cast<unsigned>(b));
}

void check_exponents(int a, int b) {
    if (a < 0 || b < 0) {
        throw std::domain_error("RationalFraction: negative denominator exponent");
    }
}

}  // namespace

RationalFraction RationalFraction::canonical(Poly numerator, int a, int b) {
    check_exponents(a, b);
    if (numerator.is_zero()) {
        return RationalFraction();
    }
    // Denominator = (1 - l)^(a+b) (1 + l)^b.
    int minus_power = a + b;
    int plus_power = b;
    while (minus_power > 0 && numerator.evaluate(ExactRational(1)).is_zero()) {
        numerator = *exact_quotient(numerator, one_minus_lambda());
        --minus_power;
    }
    while (plus_power > 0 && numerator.evaluate(ExactRational(-1)).is_zero()) {
        numerator = *exact_quotient(numerator, one_plus_lambda());
        --plus_power;
    }
    if (minus_power >= plus_power) {
        return RationalFraction(std::move(numerator), minus_power - plus_power, plus_power);
    }
    numerator *= one_minus_lambda().pow(static_cast<unsigned>(plus_power - minus_power));
    return RationalFraction(std::move(numerator), 0, plus_power);
}

RationalFraction RationalFraction::unreduced(Poly numerator, int a, int b) {
    check_exponents(a, b);
    return RationalFraction(std::move(numerator), a, b);
}

Poly RationalFraction::denominator() const {
    return denominator_factor(exp_one_minus_lambda_, exp_one_minus_lambda_sq_);
}

Poly RationalFraction::presented_over_one_minus_lambda_sq(int e) const {
    const int a = exp_one_minus_lambda_;
    const int b = exp_one_minus_lambda_sq_;
    if (e < a + b) {
        throw std::domain_error("RationalFraction: cannot present over (1-lambda^2)^" + std::to_string(e) +
                                ", need exponent >= " + std::to_string(a + b));
    }
    return numerator_ * one_plus_lambda().pow(static_cast<unsigned>(a)) *
           one_minus_lambda_sq().pow(static_cast<unsigned>(e - a - b));
}

ExactRational RationalFraction::evaluate(const ExactRational& lambda) const {
    const ExactRational den = denominator().evaluate(lambda);
    if (den.is_zero()) {
        throw std::domain_error("RationalFraction: evaluation at a pole");
    }
    return numerator_.evaluate(lambda) / den;
}

double RationalFraction::evaluate(double lambda) const {
    return numerator_.evaluate(lambda) /
           (std::pow(1.0 - lambda, exp_one_minus_lambda_) * std::pow(1.0 - lambda * lambda, exp_one_minus_lambda_sq_));
}

bool operator==(const RationalFraction& lhs, const RationalFraction& rhs) {
    const int a = std::min(lhs.exp_one_minus_lambda_, rhs.exp_one_minus_lambda_);
    const int b = std::min(lhs.exp_one_minus_lambda_sq_, rhs.exp_one_minus_lambda_sq_);
    const Poly left = lhs.numerator_ * denominator_factor(rhs.exp_one_minus_lambda_ - a, rhs.exp_one_minus_lambda_sq_ - b);
    const Poly right = rhs.numerator_ * denominator_factor(lhs.exp_one_minus_lambda_ - a, lhs.exp_one_minus_lambda_sq_ - b);
    return left == right;
}

RationalFraction fraction_add(const RationalFraction& f, const RationalFraction& g) {
    if (f.is_zero()) {
        return g;
    }
    if (g.is_zero()) {
        return f;
    }
    const int a = std::max(f.exp_one_minus_lambda(), g.exp_one_minus_lambda());
    const int b = std::max(f.exp_one_minus_lambda_sq(), g.exp_one_minus_lambda_sq());
    Poly sum = f.numerator() * denominator_factor(a - f.exp_one_minus_lambda(), b - f.exp_one_minus_lambda_sq());
    sum += g.numerator() * denominator_factor(a - g.exp_one_minus_lambda(), b - g.exp_one_minus_lambda_sq());
    return RationalFraction::canonical(std::move(sum), a, b);
}

RationalFraction fraction_scale(const RationalFraction& f, const ExactRational& c) {
    return RationalFraction::canonical(f.numerator() * c, f.exp_one_minus_lambda(), f.exp_one_minus_lambda_sq());
}

TruncatedSeries fraction_to_series(const RationalFraction& f, int order) {
    if (order < 0) {
        throw std::domain_error("fraction_to_series: negative order");
    }
    return TruncatedSeries::from_poly(f.numerator(), order) *
           TruncatedSeries::inverse_power(1, f.exp_one_minus_lambda(), order) *
           TruncatedSeries::inverse_power(2, f.exp_one_minus_lambda_sq(), order);
}

}  // namespace molien
