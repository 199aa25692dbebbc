#include "molien/closed_forms.hpp"

#include <string>

namespace molien {

namespace {

using Q = ExactRational;

// a*L + b
Poly lin(long a, long b) { return Poly::dense({Q(b), Q(a)}); }

Poly L(long shift) { return lin(1, shift); }

Poly scaled(const Q& c, std::initializer_list<Poly> factors) {
    Poly p(c);
    for (const Poly& f : factors) {
        p *= f;
    }
    return p;
}

ClosedFormTerm term(int offset, Poly coefficient) { return ClosedFormTerm{offset, std::move(coefficient)}; }

ClosedFormFamily family(int n, int variant, int from, std::optional<int> to, std::vector<ClosedFormFraction> fractions) {
    return ClosedFormFamily{n, variant, from, to, std::move(fractions)};
}

// Recurring numerator pieces.
Poly two_l_plus_one() { return lin(2, 1); }
Poly l_falling(int count) {  // L (L-1) ... (L-count+1)
    Poly p(1);
    for (int i = 0; i < count; ++i) {
        p *= L(-i);
    }
    return p;
}

std::vector<ClosedFormFamily> two_vectors() {
    return {family(2, 1, 0, std::nullopt, {{3, {term(0, L(1)), term(1, L(0))}}})};
}

std::vector<ClosedFormFamily> three_vectors() {
    const ClosedFormFraction tail{5,
                                  {term(0, scaled(Q(1, 2), {L(0), L(-1)})), term(1, scaled(1, {L(1), L(-1)})),
                                   term(2, scaled(Q(1, 2), {L(0), L(-1)}))}};
    return {
        family(3, 1, 0, 1,
               {{6,
                 {term(0, scaled(Q(1, 2), {L(2), L(1)})), term(1, scaled(1, {L(2), L(0)})),
                  term(3, scaled(-1, {L(1), L(-1)})), term(4, scaled(Q(-1, 2), {L(0), L(-1)}))}}}),
        family(3, 2, 1, std::nullopt, {{6, {term(0, two_l_plus_one()), term(1, two_l_plus_one())}}, tail}),
    };
}

std::vector<ClosedFormFamily> four_vectors() {
    const Poly cubic = Poly::dense({Q(3), Q(37, 6), Q(-1), Q(-1, 6)});  // -L^3/6 - L^2 + 37L/6 + 3
    const Poly l2_16l_9 = Poly::dense({-9, -16, 1});
    const ClosedFormFraction tail7{7,
                                   {term(1, scaled(Q(1, 2), {l_falling(3)})),
                                    term(2, scaled(Q(1, 2), {L(1), L(-1), L(-2)})),
                                    term(3, scaled(Q(1, 6), {l_falling(3)}))}};
    const ClosedFormFraction mid8{8,
                                  {term(1, scaled(2, {L(-2), two_l_plus_one()})),
                                   term(2, scaled(Q(-1, 6), {L(-2), l2_16l_9}))}};
    const ClosedFormFraction lead9{9, {term(0, scaled(4, {two_l_plus_one()})), term(1, scaled(4, {two_l_plus_one()}))}};

    ClosedFormFraction mid8_g3 = mid8;
    mid8_g3.terms.insert(mid8_g3.terms.begin(), term(0, -cubic));

    ClosedFormFraction tail7_g4 = tail7;
    tail7_g4.terms.insert(tail7_g4.terms.begin(), term(0, scaled(Q(1, 6), {L(-2), l2_16l_9})));

    return {
        family(4, 1, 0, 2,
               {{9,
                 {term(0, scaled(Q(1, 6), {L(3), L(2), L(1)})), term(1, scaled(Q(1, 2), {L(3), L(2), L(0)})),
                  term(2, scaled(Q(1, 6), {L(3), L(2), L(1)})), term(3, scaled(Q(-1, 6), {L(3), L(-2), lin(5, 4)})),
                  term(4, scaled(Q(-1, 6), {L(3), L(-2), lin(5, 1)})), term(5, scaled(Q(1, 6), {l_falling(3)})),
                  term(6, scaled(Q(1, 2), {L(1), L(-1), L(-2)})), term(7, scaled(Q(1, 6), {l_falling(3)}))}}}),
        family(4, 2, 2, 4,
               {{9,
                 {term(0, scaled(Q(1, 6), {L(3), L(2), L(1)})), term(1, scaled(4, {two_l_plus_one()})),
                  term(2, cubic)}},
                mid8, tail7}),
        family(4, 3, 5, 16, {lead9, mid8_g3, tail7}),
        family(4, 4, 17, std::nullopt,
               {lead9,
                {8, {term(0, scaled(2, {L(-3), two_l_plus_one()})), term(1, scaled(2, {L(-2), two_l_plus_one()}))}},
                tail7_g4}),
    };
}

std::vector<ClosedFormFamily> five_vectors() {
    // -L^4/24 - 5L^3/12 - 35L^2/24 + 455L/12 + 19
    const Poly quartic = Poly::dense({Q(19), Q(455, 12), Q(-35, 24), Q(-5, 12), Q(-1, 24)});
    // L^4/6 + 3L^3/2 + 13L^2/3 - 36L - 20
    const Poly quartic_g2 = Poly::dense({Q(-20), Q(-36), Q(13, 3), Q(3, 2), Q(1, 6)});
    const Poly cubic_a = Poly::dense({-208, -406, 13, 1});  // L^3 + 13L^2 - 406L - 208
    const Poly cubic_b = Poly::dense({-30, -58, 12, 1});    // L^3 + 12L^2 - 58L - 30
    const Poly quad_a = Poly::dense({-40, -81, 1});         // L^2 - 81L - 40
    const Poly quad_b = Poly::dense({-6, -10, 1});          // L^2 - 10L - 6
    const Poly l4 = scaled(Q(1, 24), {L(4), L(3), L(2), L(1)});
    const Poly lm3 = L(-3);
    const Poly lm2m3 = L(-2) * L(-3);

    const ClosedFormFraction head12{12, {term(0, l4), term(1, scaled(20, {two_l_plus_one()})), term(2, quartic)}};
    const ClosedFormFraction lead12{12,
                                    {term(0, scaled(20, {two_l_plus_one()})), term(1, scaled(20, {two_l_plus_one()}))}};
    const ClosedFormFraction tail9{9,
                                   {term(2, scaled(Q(1, 4), {l_falling(4)})),
                                    term(3, scaled(Q(1, 6), {L(1), L(-1), lm2m3})),
                                    term(4, scaled(Q(1, 24), {l_falling(4)}))}};
    ClosedFormFraction tail9_wide = tail9;
    tail9_wide.terms.insert(tail9_wide.terms.begin(), term(1, scaled(Q(1, 6), {lm2m3, quad_b})));
    ClosedFormFraction tail9_widest = tail9_wide;
    tail9_widest.terms.insert(tail9_widest.terms.begin(), term(0, scaled(Q(1, 24), {lm2m3, quad_a})));

    const Poly five_sq = scaled(5, {two_l_plus_one(), lin(2, -7)});
    const ClosedFormFraction g3_11{11, {term(1, five_sq), term(2, scaled(Q(-1, 24), {lm3, cubic_a}))}};
    const ClosedFormFraction g3_10{10,
                                   {term(1, scaled(Q(1, 6), {lm3, cubic_b})),
                                    term(2, scaled(Q(-1, 24), {lm2m3, quad_a})),
                                    term(3, scaled(Q(-1, 6), {lm2m3, quad_b}))}};
    ClosedFormFraction g4_11 = g3_11;
    g4_11.terms.insert(g4_11.terms.begin(), term(0, -quartic));
    const ClosedFormFraction g5_10{10,
                                   {term(1, scaled(1, {lm3, lin(2, -7), two_l_plus_one()})),
                                    term(2, scaled(Q(-1, 24), {lm2m3, quad_a}))}};
    const ClosedFormFraction g6_11{11, {term(0, scaled(5, {two_l_plus_one(), lin(2, -9)})), term(1, five_sq)}};
    ClosedFormFraction g6_10 = g5_10;
    g6_10.terms.insert(g6_10.terms.begin(), term(0, scaled(Q(1, 24), {lm3, cubic_a})));
    const ClosedFormFraction g7_10{10,
                                   {term(0, scaled(2, {lm3, L(-6), two_l_plus_one()})),
                                    term(1, scaled(1, {lm3, two_l_plus_one(), lin(2, -7)}))}};

    return {
        family(5, 1, 0, 3,
               {{12,
                 {term(0, l4), term(1, scaled(Q(1, 6), {L(4), L(3), L(2), L(0)})),
                  term(2, scaled(Q(1, 8), {L(4), L(3), L(2), L(1)})),
                  term(3, scaled(Q(-1, 3), {L(4), L(3), Poly::dense({Q(-5, 2), Q(-3), Q(1)})})),
                  term(4, scaled(Q(-1, 12), {L(4), L(3), lm3, lin(7, 2)})),
                  term(5, scaled(Q(-1, 2), {L(4), lm3, two_l_plus_one()})),
                  term(6, scaled(Q(1, 12), {L(4), lm2m3, lin(7, 5)})),
                  term(7, scaled(Q(1, 3), {lm2m3, Poly::dense({Q(3, 2), Q(5), Q(1)})})),
                  term(8, scaled(Q(-1, 8), {l_falling(4)})), term(9, scaled(Q(-1, 6), {L(1), L(-1), lm2m3})),
                  term(10, scaled(Q(-1, 24), {l_falling(4)}))}}}),
        family(5, 2, 4, 4,
               {head12,
                {11,
                 {term(1, quartic_g2), term(2, scaled(Q(-1, 24), {lm3, cubic_a})),
                  term(3, scaled(Q(-1, 6), {lm3, cubic_b}))}},
                {10, {term(2, scaled(Q(-1, 24), {lm2m3, quad_a})), term(3, scaled(Q(-1, 6), {lm2m3, quad_b}))}},
                tail9}),
        family(5, 3, 5, 6, {head12, g3_11, g3_10, tail9}),
        family(5, 4, 7, 10, {lead12, g4_11, g3_10, tail9}),
        family(5, 5, 11, 14, {lead12, g4_11, g5_10, tail9_wide}),
        family(5, 6, 15, 81, {lead12, g6_11, g6_10, tail9_wide}),
        family(5, 7, 82, std::nullopt, {lead12, g6_11, g7_10, tail9_widest}),
    };
}

}  // namespace

const std::vector<ClosedFormFamily>& closed_form_families(int n_vectors) {
    static const std::vector<ClosedFormFamily> two = two_vectors();
    static const std::vector<ClosedFormFamily> three = three_vectors();
    static const std::vector<ClosedFormFamily> four = four_vectors();
    static const std::vector<ClosedFormFamily> five = five_vectors();
    switch (n_vectors) {
        case 2: return two;
        case 3: return three;
        case 4: return four;
        case 5: return five;
        default:
            throw std::out_of_range("no closed forms tabulated for N = " + std::to_string(n_vectors));
    }
}

const ClosedFormFamily& closed_form_family(int n_vectors, int variant) {
    const auto& families = closed_form_families(n_vectors);
    if (variant < 1 || variant > static_cast<int>(families.size())) {
        throw std::out_of_range("N = " + std::to_string(n_vectors) + " has no closed form " + std::to_string(variant));
    }
    return families[static_cast<std::size_t>(variant - 1)];
}

std::vector<std::pair<int, Poly>> closed_form_numerator(const ClosedFormFamily& family, int l) {
    if (!family.valid_for(l)) {
        throw ClosedFormRangeError("closed form " + std::to_string(family.variant) + " for N = " +
                                   std::to_string(family.n_vectors) + " does not apply at L = " + std::to_string(l));
    }
    std::vector<std::pair<int, Poly>> out;
    for (const ClosedFormFraction& fraction : family.fractions) {
        Poly numerator;
        for (const ClosedFormTerm& t : fraction.terms) {
            const ExactRational c = t.coefficient_in_l.evaluate(ExactRational(l));
            if (!c.is_integer()) {
                throw std::logic_error("closed form produced a non-integer coefficient " + c.to_string());
            }
            numerator += Poly::monomial(c, l + t.offset);
        }
        if (!numerator.is_zero()) {
            out.emplace_back(fraction.exponent, std::move(numerator));
        }
    }
    return out;
}

}  // namespace molien
