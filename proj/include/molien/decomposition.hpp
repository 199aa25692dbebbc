#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "molien/fraction.hpp"
#include "molien/so3_molien.hpp"

namespace molien {

/// Raised when the division algorithm cannot produce a decomposition with
/// nonnegative integer numerators.
class ConjectureViolation : public std::runtime_error {
public:
    ConjectureViolation(int n_vectors, int target_l, const std::string& what);
    int n_vectors() const { return n_vectors_; }
    int target_l() const { return target_l_; }

private:
    int n_vectors_;
    int target_l_;
};

/// Shape of a decomposition: number of fractions and the number of
/// cancellation steps spent in each division stage.
struct DivisionSignature {
    int fraction_count = 0;
    std::vector<int> steps;

    friend bool operator==(const DivisionSignature&, const DivisionSignature&) = default;
};

/// sum_l numerator_l / (1 - lambda^2)^exponent_l with nonnegative integer numerators.
struct Decomposition {
    int n_vectors = 0;
    int target_l = 0;
    /// (denominator exponent, numerator), exponents strictly decreasing by one.
    std::vector<std::pair<int, Poly>> fractions;
    std::vector<int> division_steps;

    int fraction_count() const { return static_cast<int>(fractions.size()); }
    DivisionSignature signature() const { return {fraction_count(), division_steps}; }
};

/// Splits molien_so3(N, L), written over (1 - lambda^2)^presentation_exponent(N),
/// by repeated division by (1 - lambda^2). Each stage cancels leading terms and
/// stops at the first rest with only nonnegative coefficients.
Decomposition decompose(const MolienQuery& query);

/// Same algorithm on an arbitrary numerator over (1 - lambda^2)^exponent.
Decomposition decompose_presented(const Poly& numerator, int exponent, int n_vectors = 0, int target_l = 0);

int fraction_count(const MolienQuery& query);

/// Sum of the fractions, canonical.
RationalFraction recombine(const Decomposition& decomposition);

/// 1-based position of signature(N, L) among the distinct signatures met while
/// scanning L = 0, 1, 2, ... This matches the i labels of the published tables.
int variant_index(const MolienQuery& query);

/// Published threshold from which the asymptotic form applies (N = 3..6).
std::optional<int> tabulated_threshold(int n_vectors);

struct ThresholdReport {
    int n_vectors = 0;
    int scan_ceiling = 0;
    int stability_window = 0;
    /// False when the last constant-signature run is shorter than the window.
    bool conclusive = false;
    DivisionSignature stable_signature;
    int stable_k = 0;
    /// Start of the final run of identical signatures in [0, ceiling].
    int stable_from = 0;
    /// Smallest L down to which the coefficient polynomials fitted on the
    /// stable run still give a valid nonnegative decomposition.
    int first_stable_l = 0;
    std::optional<int> tabulated;
    /// Signature changes that lowered k while scanning upward.
    std::vector<int> k_decreases;

    bool matches_tabulated() const { return conclusive && tabulated && *tabulated == first_stable_l; }
};

/// Scans L in [0, scan_ceiling]. Requires scan_ceiling > stability_window >= 1.
ThresholdReport find_threshold(int n_vectors, int scan_ceiling, int stability_window);

struct CoefficientTotals {
    /// (denominator exponent, sum of numerator coefficients)
    std::vector<std::pair<int, ExactRational>> per_fraction;
    ExactRational total;
};

/// Numerator coefficient sums of decompose(N, L). Requires N in 3..5 and L at
/// or above the tabulated threshold.
CoefficientTotals asymptotic_coefficient_totals(int n_vectors, int target_l);

/// Published closed forms of the same sums, N in 3..5.
CoefficientTotals asymptotic_coefficient_totals_closed_form(int n_vectors, int target_l);

struct Conjecture2Entry {
    int n_vectors = 0;
    int target_l = 0;
    int fraction_count = 0;
    Poly numerator;
};

struct Conjecture2Report {
    /// k(N, 1) == 1 for every N checked.
    bool l1_free = true;
    /// k(N, L) == 1 for all L < N, 3 <= N <= 5.
    bool below_n_single = true;
    std::vector<Conjecture2Entry> entries;

    bool holds() const { return l1_free && below_n_single; }
    /// Entries with more than one fraction.
    std::vector<Conjecture2Entry> counterexamples() const;
};

/// For N = 1..max_n checks k(N, 1) == 1, and k(N, L) == 1 for L < N when 3 <= N <= 5.
Conjecture2Report conjecture2_check(int max_n);

}  // namespace molien
