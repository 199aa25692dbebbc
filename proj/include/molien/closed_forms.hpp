#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "molien/poly.hpp"

namespace molien {

/// c(L) * lambda^(L + offset), with c a polynomial in L.
struct ClosedFormTerm {
    int offset = 0;
    Poly coefficient_in_l;
};

/// All terms sharing one (1 - lambda^2)^exponent denominator.
struct ClosedFormFraction {
    int exponent = 0;
    std::vector<ClosedFormTerm> terms;
};

/// One tabulated family of decompositions, valid for L in [valid_from, valid_to].
struct ClosedFormFamily {
    int n_vectors = 0;
    int variant = 0;
    int valid_from = 0;
    std::optional<int> valid_to;  // open-ended when empty
    std::vector<ClosedFormFraction> fractions;

    bool valid_for(int l) const { return l >= valid_from && (!valid_to || l <= *valid_to); }
};

class ClosedFormRangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Families for N = 2..5, ordered by variant. Throws std::out_of_range otherwise.
const std::vector<ClosedFormFamily>& closed_form_families(int n_vectors);

/// Family with the given variant index (1-based).
const ClosedFormFamily& closed_form_family(int n_vectors, int variant);

/// Evaluates a family at L as (exponent, numerator) pairs in decreasing exponent
/// order, dropping zero numerators. Throws ClosedFormRangeError outside the
/// family's range; throws std::logic_error if a coefficient is not an integer.
std::vector<std::pair<int, Poly>> closed_form_numerator(const ClosedFormFamily& family, int l);

}  // namespace molien
