#include "molien/rational.hpp"

#include <stdexcept>

namespace molien {

ExactRational::ExactRational(long numerator, long denominator) {
    if (denominator == 0) {
        throw std::domain_error("ExactRational: zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) {
        throw std::invalid_argument("ExactRational: empty string");
    }
    // mpq_class rejects a leading plus.
    if (s.front() == '+') {
        s.erase(s.begin());
    }
    mpq_class value;
    if (value.set_str(s, 10) != 0) {
        throw std::invalid_argument("ExactRational: cannot parse '" + std::string(text) + "'");
    }
    if (value.get_den() == 0) {
        throw std::domain_error("ExactRational: zero denominator in '" + std::string(text) + "'");
    }
    value.canonicalize();
    return ExactRational(value);
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("ExactRational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

ExactRational binomial(long n, long k) {
    if (n < 0) {
        throw std::domain_error("binomial: negative n");
    }
    if (k < 0 || k > n) {
        return ExactRational(0);
    }
    mpz_class result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return ExactRational(result);
}

ExactRational power(const ExactRational& base, unsigned exponent) {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return ExactRational(mpq_class(num, den));
}

}  // namespace molien
