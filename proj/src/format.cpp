#include "molien/format.hpp"

#include <array>
#include <string_view>

namespace molien {

namespace {

constexpr std::array<std::string_view, 10> kSuperscripts = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string exponent_suffix(int e, Notation n) {
    if (e == 1) {
        return {};
    }
    const std::string digits = std::to_string(e);
    if (n.ascii) {
        return "^" + digits;
    }
    std::string out;
    for (char d : digits) {
        out += kSuperscripts[static_cast<std::size_t>(d - '0')];
    }
    return out;
}

std::string variable(Notation n) { return n.ascii ? "t" : "λ"; }
std::string minus(Notation n) { return n.ascii ? "-" : "−"; }

std::string denominator_text(int a, int b, Notation n) {
    std::string out;
    if (a > 0) {
        out += "(1" + minus(n) + variable(n) + ")" + exponent_suffix(a, n);
    }
    if (b > 0) {
        out += "(1" + minus(n) + variable(n) + exponent_suffix(2, n) + ")" + exponent_suffix(b, n);
    }
    return a > 0 && b > 0 ? "(" + out + ")" : out;
}

std::string over(const Poly& numerator, const std::string& denominator, Notation n) {
    std::string top = format_poly(numerator, n);
    if (denominator.empty()) {
        return top;
    }
    if (numerator.term_count() > 1) {
        top = "(" + top + ")";
    }
    return top + "/" + denominator;
}

}  // namespace

std::string format_poly(const Poly& p, Notation n) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = c.sign() < 0;
        if (negative) {
            out += minus(n);
        } else if (!first) {
            out += "+";
        }
        first = false;
        const ExactRational magnitude = negative ? -c : c;
        const bool unit = magnitude == ExactRational(1);
        if (e == 0 || !unit) {
            out += magnitude.is_integer() || e == 0 ? magnitude.to_string() : "(" + magnitude.to_string() + ")";
        }
        if (e > 0) {
            out += variable(n) + exponent_suffix(e, n);
        }
    }
    return out;
}

std::string format_fraction(const RationalFraction& f, Notation n) {
    return over(f.numerator(), denominator_text(f.exp_one_minus_lambda(), f.exp_one_minus_lambda_sq(), n), n);
}

std::string format_over_one_minus_lambda_sq(const Poly& numerator, int exponent, Notation n) {
    return over(numerator, denominator_text(0, exponent, n), n);
}

std::string format_fraction_sum(const std::vector<std::pair<int, Poly>>& fractions, Notation n) {
    if (fractions.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < fractions.size(); ++i) {
        if (i > 0) {
            out += " + ";
        }
        out += format_over_one_minus_lambda_sq(fractions[i].second, fractions[i].first, n);
    }
    return out;
}

}  // namespace molien
