#include "molien/poly.hpp"

#include <cmath>

namespace molien {

Poly::Poly(const ExactRational& constant) {
    if (!constant.is_zero()) {
        terms_.emplace(0, constant);
    }
}

Poly Poly::monomial(const ExactRational& coefficient, int exponent) {
    if (exponent < 0) {
        throw std::domain_error("Poly::monomial: negative exponent");
    }
    Poly p;
    p.add_term(exponent, coefficient);
    return p;
}

Poly Poly::dense(std::initializer_list<ExactRational> coefficients) {
    Poly p;
    int e = 0;
    for (const auto& c : coefficients) {
        p.add_term(e++, c);
    }
    return p;
}

ExactRational Poly::leading_coefficient() const {
    return terms_.empty() ? ExactRational(0) : terms_.rbegin()->second;
}

ExactRational Poly::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? ExactRational(0) : it->second;
}

bool Poly::all_nonnegative() const {
    for (const auto& [e, c] : terms_) {
        if (c.sign() < 0) {
            return false;
        }
    }
    return true;
}

bool Poly::all_integer() const {
    for (const auto& [e, c] : terms_) {
        if (!c.is_integer()) {
            return false;
        }
    }
    return true;
}

ExactRational Poly::coefficient_sum() const {
    ExactRational s;
    for (const auto& [e, c] : terms_) {
        s += c;
    }
    return s;
}

ExactRational Poly::evaluate(const ExactRational& x) const {
    ExactRational result;
    ExactRational xp(1);
    int current = 0;
    for (const auto& [e, c] : terms_) {
        xp *= power(x, static_cast<unsigned>(e - current));
        current = e;
        result += c * xp;
    }
    return result;
}

double Poly::evaluate(double x) const {
    double result = 0.0;
    for (const auto& [e, c] : terms_) {
        result += c.to_double() * std::pow(x, e);
    }
    return result;
}

Poly Poly::shifted(int k) const {
    if (!terms_.empty() && terms_.begin()->first + k < 0) {
        throw std::domain_error("Poly::shifted: negative exponent");
    }
    Poly p;
    for (const auto& [e, c] : terms_) {
        p.terms_.emplace_hint(p.terms_.end(), e + k, c);
    }
    return p;
}

Poly Poly::pow(unsigned n) const {
    Poly result(1);
    Poly base = *this;
    while (n > 0) {
        if (n & 1U) {
            result = result * base;
        }
        n >>= 1U;
        if (n > 0) {
            base = base * base;
        }
    }
    return result;
}

void Poly::add_term(int exponent, const ExactRational& coefficient) {
    if (coefficient.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Poly& Poly::operator+=(const Poly& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, c);
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, -c);
    }
    return *this;
}

Poly& Poly::operator*=(const ExactRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) {
        v *= c;
    }
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    Poly p;
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            p.add_term(ea + eb, ca * cb);
        }
    }
    return p;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& [e, c] : p.terms_) {
        c = -c;
    }
    return p;
}

Poly one_minus_lambda() { return Poly::dense({1, -1}); }
Poly one_plus_lambda() { return Poly::dense({1, 1}); }
Poly one_minus_lambda_sq() { return Poly::dense({1, 0, -1}); }

std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor) {
    if (divisor.is_zero()) {
        throw std::domain_error("divmod: zero divisor");
    }
    const int dd = divisor.degree();
    const ExactRational lc = divisor.leading_coefficient();
    Poly quotient;
    Poly remainder = dividend;
    while (!remainder.is_zero() && remainder.degree() >= dd) {
        const int shift = remainder.degree() - dd;
        Poly term = Poly::monomial(remainder.leading_coefficient() / lc, shift);
        quotient += term;
        remainder -= divisor * term;
    }
    return {std::move(quotient), std::move(remainder)};
}

std::optional<Poly> exact_quotient(const Poly& dividend, const Poly& divisor) {
    auto [q, r] = divmod(dividend, divisor);
    if (!r.is_zero()) {
        return std::nullopt;
    }
    return q;
}

LambdaSqDivision begin_lambda_sq_division(const Poly& p) {
    return LambdaSqDivision{Poly(), p, 0};
}

bool lambda_sq_division_step(LambdaSqDivision& state) {
    const int top = state.rest.degree();
    if (state.rest.is_zero() || top < 2) {
        return false;
    }
    // c*l^top = (1 - l^2)(-c*l^(top-2)) + c*l^(top-2)
    const ExactRational c = state.rest.leading_coefficient();
    state.quotient -= Poly::monomial(c, top - 2);
    state.rest -= Poly::monomial(c, top);
    state.rest += Poly::monomial(c, top - 2);
    ++state.steps;
    return true;
}

LambdaSqDivision divide_by_one_minus_lambda_sq_until(const Poly& p,
                                                     const std::function<bool(const Poly&)>& accept) {
    if (p.is_zero()) {
        throw std::domain_error("divide_by_one_minus_lambda_sq_until: zero polynomial");
    }
    LambdaSqDivision state = begin_lambda_sq_division(p);
    if (accept(state.rest)) {
        return state;
    }
    const int max_steps = p.degree() + 1;
    while (state.steps < max_steps) {
        if (!lambda_sq_division_step(state)) {
            break;
        }
        if (accept(state.rest)) {
            return state;
        }
    }
    throw DivisionNonTermination("division by (1-lambda^2) stopped after " + std::to_string(state.steps) +
                                 " steps without the rest satisfying the stopping predicate");
}

}  // namespace molien
