#pragma once

#include <functional>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "molien/rational.hpp"

namespace molien {

/// Sparse univariate polynomial with exact rational coefficients.
///
/// Terms are kept in an ordered exponent -> coefficient map with no stored
/// zero coefficients, so numerators of the form lambda^L * (short factor)
/// stay cheap for large L.
class Poly {
public:
    using Terms = std::map<int, ExactRational>;

    /// Degree of the zero polynomial.
    static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

    Poly() = default;
    Poly(const ExactRational& constant);
    Poly(long constant) : Poly(ExactRational(constant)) {}
    Poly(int constant) : Poly(ExactRational(constant)) {}

    static Poly monomial(const ExactRational& coefficient, int exponent);
    /// Dense coefficients, lowest degree first.
    static Poly dense(std::initializer_list<ExactRational> coefficients);

    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? kMinusInfinity : terms_.rbegin()->first; }
    int lowest_degree() const { return terms_.empty() ? kMinusInfinity : terms_.begin()->first; }
    ExactRational leading_coefficient() const;
    ExactRational coefficient(int exponent) const;
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool all_nonnegative() const;
    bool all_integer() const;
    ExactRational coefficient_sum() const;

    ExactRational evaluate(const ExactRational& x) const;
    double evaluate(double x) const;

    /// Multiply by lambda^k (k may be negative if no term would drop below 0).
    Poly shifted(int k) const;
    Poly pow(unsigned n) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }
    Poly& operator*=(const ExactRational& c);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(Poly p, const ExactRational& c) { return p *= c; }
    friend Poly operator*(const ExactRational& c, Poly p) { return p *= c; }
    Poly operator-() const;

    friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.terms_ == rhs.terms_; }

private:
    void add_term(int exponent, const ExactRational& coefficient);

    Terms terms_;
};

/// 1 - lambda.
Poly one_minus_lambda();
/// 1 + lambda.
Poly one_plus_lambda();
/// 1 - lambda^2.
Poly one_minus_lambda_sq();

/// Euclidean division: dividend = divisor * quotient + remainder with
/// degree(remainder) < degree(divisor). Throws std::domain_error on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor);

/// Quotient if divisor divides dividend exactly, otherwise nothing.
std::optional<Poly> exact_quotient(const Poly& dividend, const Poly& divisor);

/// One state of the leading-term division by (1 - lambda^2).
/// Invariant: (1 - lambda^2) * quotient + rest == dividend.
struct LambdaSqDivision {
    Poly quotient;
    Poly rest;
    int steps = 0;
};

/// Starts a division of p by (1 - lambda^2): quotient 0, rest p, no steps.
LambdaSqDivision begin_lambda_sq_division(const Poly& p);

/// Cancels the current highest-degree term of the rest. Returns false and
/// leaves the state untouched when the rest has degree < 2 (or is zero).
bool lambda_sq_division_step(LambdaSqDivision& state);

/// Thrown when the rest never satisfies the caller's predicate.
class DivisionNonTermination : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Runs cancellation steps until `accept(rest)` holds, checking the predicate
/// before the first step and after every step. Gives up after degree(p)+1
/// steps or when no further step is possible.
LambdaSqDivision divide_by_one_minus_lambda_sq_until(const Poly& p,
                                                     const std::function<bool(const Poly&)>& accept);

}  // namespace molien
