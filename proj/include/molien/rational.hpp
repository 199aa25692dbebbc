#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace molien {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. Thin value wrapper over GMP's mpq_class.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long value) : value_(value) {}
    ExactRational(int value) : value_(value) {}
    ExactRational(long numerator, long denominator);
    explicit ExactRational(const mpz_class& integer) : value_(integer) {}
    explicit ExactRational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

    /// Parses "p" or "p/q" (decimal, optional leading sign).
    static ExactRational parse(std::string_view text);

    const mpq_class& raw() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    double to_double() const { return value_.get_d(); }
    std::string to_string() const { return value_.get_str(); }

    ExactRational& operator+=(const ExactRational& rhs) { value_ += rhs.value_; return *this; }
    ExactRational& operator-=(const ExactRational& rhs) { value_ -= rhs.value_; return *this; }
    ExactRational& operator*=(const ExactRational& rhs) { value_ *= rhs.value_; return *this; }
    ExactRational& operator/=(const ExactRational& rhs);

    friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
    friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
    friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
    friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
    ExactRational operator-() const { return ExactRational(mpq_class(-value_)); }

    friend bool operator==(const ExactRational& lhs, const ExactRational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const ExactRational& lhs, const ExactRational& rhs) {
        int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactRational& q) { return os << q.to_string(); }

private:
    mpq_class value_;
};

/// Binomial coefficient C(n, k) for nonnegative n; zero when k < 0 or k > n.
ExactRational binomial(long n, long k);

/// base^exponent for exponent >= 0.
ExactRational power(const ExactRational& base, unsigned exponent);

}  // namespace molien
