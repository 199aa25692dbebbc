#include "molien/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace molien {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) {
        throw std::domain_error("TruncatedSeries: negative order");
    }
    coefficients_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<ExactRational> coefficients)
    : TruncatedSeries(order) {
    if (coefficients.size() > coefficients_.size()) {
        coefficients.resize(coefficients_.size());
    }
    std::copy(coefficients.begin(), coefficients.end(), coefficients_.begin());
}

TruncatedSeries TruncatedSeries::from_poly(const Poly& p, int order) {
    TruncatedSeries s(order);
    for (const auto& [e, c] : p.terms()) {
        if (e > order) {
            break;
        }
        s.coefficients_[static_cast<std::size_t>(e)] = c;
    }
    return s;
}

TruncatedSeries TruncatedSeries::inverse_power(int step, int power, int order) {
    if (step < 1 || power < 0) {
        throw std::domain_error("TruncatedSeries::inverse_power: bad arguments");
    }
    TruncatedSeries s(order);
    if (power == 0) {
        s.coefficients_[0] = 1;
        return s;
    }
    // [x^j] 1/(1-x)^p = C(j+p-1, p-1)
    for (int j = 0; j * step <= order; ++j) {
        s.coefficients_[static_cast<std::size_t>(j * step)] = binomial(j + power - 1, power - 1);
    }
    return s;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coefficients_.begin(), coefficients_.end(), [](const ExactRational& c) { return c.is_zero(); });
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    if (order > order_) {
        throw std::domain_error("TruncatedSeries::truncated: cannot raise the order");
    }
    return TruncatedSeries(order, coefficients_);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    if (rhs.order_ < order_) {
        *this = truncated(rhs.order_);
    }
    for (int i = 0; i <= order_; ++i) {
        coefficients_[static_cast<std::size_t>(i)] += rhs.coefficients_[static_cast<std::size_t>(i)];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    if (rhs.order_ < order_) {
        *this = truncated(rhs.order_);
    }
    for (int i = 0; i <= order_; ++i) {
        coefficients_[static_cast<std::size_t>(i)] -= rhs.coefficients_[static_cast<std::size_t>(i)];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const ExactRational& c) {
    for (auto& v : coefficients_) {
        v *= c;
    }
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    const int order = std::min(lhs.order_, rhs.order_);
    TruncatedSeries out(order);
    for (int i = 0; i <= order; ++i) {
        const auto& a = lhs.coefficients_[static_cast<std::size_t>(i)];
        if (a.is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= order; ++j) {
            const auto& b = rhs.coefficients_[static_cast<std::size_t>(j)];
            if (!b.is_zero()) {
                out.coefficients_[static_cast<std::size_t>(i + j)] += a * b;
            }
        }
    }
    return out;
}

}  // namespace molien
