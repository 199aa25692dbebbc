#pragma once

#include <string>
#include <utility>
#include <vector>

#include "molien/fraction.hpp"
#include "molien/poly.hpp"

namespace molien {

/// Unicode output uses λ, superscript exponents and U+2212 minus signs;
/// ASCII output writes t, ^ and -.
struct Notation {
    bool ascii = false;
};

std::string format_poly(const Poly& p, Notation notation = {});
std::string format_fraction(const RationalFraction& f, Notation notation = {});
/// numerator / (1 - lambda^2)^exponent, printed without reduction.
std::string format_over_one_minus_lambda_sq(const Poly& numerator, int exponent, Notation notation = {});
/// Sum of (exponent, numerator) fractions, joined with " + ".
std::string format_fraction_sum(const std::vector<std::pair<int, Poly>>& fractions, Notation notation = {});

}  // namespace molien
