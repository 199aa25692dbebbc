#pragma once

#include <vector>

#include "molien/poly.hpp"
#include "molien/rational.hpp"

namespace molien {

/// Power series in lambda known through lambda^order. Binary arithmetic
/// truncates to the smaller of the two orders.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<ExactRational> coefficients);

    /// Terms of p up to lambda^order.
    static TruncatedSeries from_poly(const Poly& p, int order);
    /// 1/(1 - lambda^step)^power, i.e. binomial series at stride `step`.
    static TruncatedSeries inverse_power(int step, int power, int order);

    int order() const { return order_; }
    const ExactRational& operator[](int degree) const { return coefficients_.at(static_cast<std::size_t>(degree)); }
    const std::vector<ExactRational>& coefficients() const { return coefficients_; }
    bool is_zero() const;

    /// Same series cut down to a lower order.
    TruncatedSeries truncated(int order) const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const ExactRational& c);

    friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
    friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }
    friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
    friend TruncatedSeries operator*(TruncatedSeries s, const ExactRational& c) { return s *= c; }

    friend bool operator==(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
        return lhs.order_ == rhs.order_ && lhs.coefficients_ == rhs.coefficients_;
    }

private:
    int order_;
    std::vector<ExactRational> coefficients_;
};

}  // namespace molien
