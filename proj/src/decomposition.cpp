#include "molien/decomposition.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <mutex>
#include <thread>

namespace molien {

ConjectureViolation::ConjectureViolation(int n_vectors, int target_l, const std::string& what)
    : std::runtime_error("N = " + std::to_string(n_vectors) + ", L = " + std::to_string(target_l) + ": " + what),
      n_vectors_(n_vectors),
      target_l_(target_l) {}

Decomposition decompose_presented(const Poly& numerator, int exponent, int n_vectors, int target_l) {
    if (exponent < 0) {
        throw std::invalid_argument("decompose: negative denominator exponent");
    }
    if (!numerator.all_integer()) {
        throw ConjectureViolation(n_vectors, target_l, "numerator has non-integer coefficients");
    }
    Decomposition out{n_vectors, target_l, {}, {}};
    Poly working = numerator;
    int e = exponent;
    const auto nonnegative = [](const Poly& p) { return p.all_nonnegative(); };
    while (!working.all_nonnegative()) {
        if (e == 0) {
            throw ConjectureViolation(n_vectors, target_l, "negative coefficients remain with no denominator left");
        }
        LambdaSqDivision division;
        try {
            division = divide_by_one_minus_lambda_sq_until(working, nonnegative);
        } catch (const DivisionNonTermination& err) {
            throw ConjectureViolation(n_vectors, target_l, err.what());
        }
        out.fractions.emplace_back(e, std::move(division.rest));
        out.division_steps.push_back(division.steps);
        working = std::move(division.quotient);
        --e;
    }
    if (!working.is_zero() || out.fractions.empty()) {
        out.fractions.emplace_back(e, std::move(working));
    }
    return out;
}

Decomposition decompose(const MolienQuery& query) {
    return decompose_presented(molien_so3_presented(query), presentation_exponent(query.n_vectors), query.n_vectors,
                               query.target_l);
}

int fraction_count(const MolienQuery& query) { return decompose(query).fraction_count(); }

RationalFraction recombine(const Decomposition& decomposition) {
    RationalFraction sum;
    for (const auto& [e, numerator] : decomposition.fractions) {
        sum = fraction_add(sum, RationalFraction::canonical(numerator, 0, e));
    }
    return sum;
}

namespace {

struct VariantCache {
    std::vector<DivisionSignature> seen;
    int scanned_through = -1;
};

std::mutex variant_mutex;
std::map<int, VariantCache> variant_caches;

// Decomposition signatures for L = 0..ceiling, computed on all hardware threads.
std::vector<Decomposition> decompose_range(int n_vectors, int ceiling) {
    std::vector<Decomposition> out(static_cast<std::size_t>(ceiling + 1));
    const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), static_cast<unsigned>(ceiling + 1)));
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                for (int l = static_cast<int>(w); l <= ceiling; l += static_cast<int>(workers)) {
                    out[static_cast<std::size_t>(l)] = decompose(MolienQuery::make(n_vectors, l));
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) {
        t.join();
    }
    for (const auto& err : errors) {
        if (err) {
            std::rethrow_exception(err);
        }
    }
    return out;
}

// Lagrange interpolation through (x_i, y_i), as a polynomial in L.
Poly interpolate(const std::vector<std::pair<int, ExactRational>>& points) {
    Poly result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Poly basis(points[i].second);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i != j) {
                basis *= Poly::dense({ExactRational(-points[j].first), 1}) *
                         ExactRational(1, points[i].first - points[j].first);
            }
        }
        result += basis;
    }
    return result;
}

using TermKey = std::pair<int, int>;  // (denominator exponent, offset n of lambda^(L+n))

std::map<TermKey, ExactRational> terms_by_offset(const Decomposition& d) {
    std::map<TermKey, ExactRational> out;
    for (const auto& [e, numerator] : d.fractions) {
        for (const auto& [power, c] : numerator.terms()) {
            out[{e, power - d.target_l}] = c;
        }
    }
    return out;
}

// Coefficient polynomials in L fitted on part of [from, to] and checked on the rest.
std::optional<std::map<TermKey, Poly>> fit_stable_form(const std::vector<Decomposition>& scan, int from, int to,
                                                       int n_vectors) {
    const int max_degree = 3 * n_vectors;
    const int fit_count = std::min(max_degree + 1, to - from + 1);
    if (to - from + 1 <= fit_count) {
        return std::nullopt;  // nothing left to check the fit against
    }
    std::map<TermKey, std::vector<std::pair<int, ExactRational>>> samples;
    std::vector<std::map<TermKey, ExactRational>> all_terms;
    for (int l = from; l <= to; ++l) {
        all_terms.push_back(terms_by_offset(scan[static_cast<std::size_t>(l)]));
        for (const auto& [key, c] : all_terms.back()) {
            samples[key];
        }
    }
    std::map<TermKey, Poly> fitted;
    for (auto& [key, points] : samples) {
        for (int i = 0; i < fit_count; ++i) {
            const auto& terms = all_terms[static_cast<std::size_t>(i)];
            const auto it = terms.find(key);
            points.emplace_back(from + i, it == terms.end() ? ExactRational(0) : it->second);
        }
        fitted[key] = interpolate(points);
    }
    for (int l = from + fit_count; l <= to; ++l) {
        const auto& terms = all_terms[static_cast<std::size_t>(l - from)];
        for (const auto& [key, poly] : fitted) {
            const auto it = terms.find(key);
            const ExactRational expected = it == terms.end() ? ExactRational(0) : it->second;
            if (poly.evaluate(ExactRational(l)) != expected) {
                return std::nullopt;
            }
        }
    }
    return fitted;
}

// Whether the fitted form at L is a valid nonnegative decomposition of g(N, L).
bool fitted_form_valid_at(const std::map<TermKey, Poly>& fitted, int n_vectors, int l) {
    const int top = presentation_exponent(n_vectors);
    Poly sum;
    for (const auto& [key, poly] : fitted) {
        const ExactRational c = poly.evaluate(ExactRational(l));
        if (c.sign() < 0 || !c.is_integer()) {
            return false;
        }
        sum += Poly::monomial(c, l + key.second) * one_minus_lambda_sq().pow(static_cast<unsigned>(top - key.first));
    }
    return sum == molien_so3_presented(MolienQuery::make(n_vectors, l));
}

}  // namespace

int variant_index(const MolienQuery& query) {
    const DivisionSignature target = decompose(query).signature();
    std::lock_guard<std::mutex> lock(variant_mutex);
    VariantCache& cache = variant_caches[query.n_vectors];
    const auto position = [&]() -> int {
        const auto it = std::find(cache.seen.begin(), cache.seen.end(), target);
        return it == cache.seen.end() ? 0 : static_cast<int>(it - cache.seen.begin()) + 1;
    };
    while (cache.scanned_through < query.target_l) {
        ++cache.scanned_through;
        const DivisionSignature s = decompose(MolienQuery::make(query.n_vectors, cache.scanned_through)).signature();
        if (std::find(cache.seen.begin(), cache.seen.end(), s) == cache.seen.end()) {
            cache.seen.push_back(s);
        }
    }
    return position();
}

std::optional<int> tabulated_threshold(int n_vectors) {
    switch (n_vectors) {
        case 3: return 1;
        case 4: return 17;
        case 5: return 82;
        case 6: return 295;
        default: return std::nullopt;
    }
}

ThresholdReport find_threshold(int n_vectors, int scan_ceiling, int stability_window) {
    if (n_vectors < 1) {
        throw std::invalid_argument("find_threshold: N must be >= 1");
    }
    if (stability_window < 1 || scan_ceiling <= stability_window) {
        throw std::invalid_argument("find_threshold: need scan_ceiling > stability_window >= 1");
    }
    const std::vector<Decomposition> scan = decompose_range(n_vectors, scan_ceiling);

    ThresholdReport report;
    report.n_vectors = n_vectors;
    report.scan_ceiling = scan_ceiling;
    report.stability_window = stability_window;
    report.tabulated = tabulated_threshold(n_vectors);

    int run_start = 0;
    for (int l = 1; l <= scan_ceiling; ++l) {
        const DivisionSignature prev = scan[static_cast<std::size_t>(l - 1)].signature();
        const DivisionSignature cur = scan[static_cast<std::size_t>(l)].signature();
        if (!(prev == cur)) {
            run_start = l;
            if (cur.fraction_count < prev.fraction_count) {
                report.k_decreases.push_back(l);
            }
        }
    }
    report.stable_from = run_start;
    report.first_stable_l = run_start;
    report.stable_signature = scan[static_cast<std::size_t>(run_start)].signature();
    report.stable_k = report.stable_signature.fraction_count;
    report.conclusive = scan_ceiling - run_start >= stability_window;
    if (!report.conclusive) {
        return report;
    }
    if (const auto fitted = fit_stable_form(scan, run_start, scan_ceiling, n_vectors)) {
        while (report.first_stable_l > 0 && fitted_form_valid_at(*fitted, n_vectors, report.first_stable_l - 1)) {
            --report.first_stable_l;
        }
    }
    return report;
}

namespace {

void require_asymptotic_range(int n_vectors, int target_l) {
    if (n_vectors < 3 || n_vectors > 5) {
        throw std::invalid_argument("asymptotic totals are tabulated for N = 3, 4, 5 only");
    }
    if (target_l < *tabulated_threshold(n_vectors)) {
        throw std::domain_error("L = " + std::to_string(target_l) + " is below the asymptotic threshold for N = " +
                                std::to_string(n_vectors));
    }
}

}  // namespace

CoefficientTotals asymptotic_coefficient_totals(int n_vectors, int target_l) {
    require_asymptotic_range(n_vectors, target_l);
    CoefficientTotals out;
    for (const auto& [e, numerator] : decompose(MolienQuery::make(n_vectors, target_l)).fractions) {
        out.per_fraction.emplace_back(e, numerator.coefficient_sum());
        out.total += numerator.coefficient_sum();
    }
    return out;
}

CoefficientTotals asymptotic_coefficient_totals_closed_form(int n_vectors, int target_l) {
    require_asymptotic_range(n_vectors, target_l);
    const ExactRational l(target_l);
    const ExactRational two_l1 = 2 * l + 1;
    CoefficientTotals out;
    switch (n_vectors) {
        case 3:
            out.per_fraction = {{6, 2 * two_l1}, {5, (l - 1) * two_l1}};
            out.total = (l + 1) * two_l1;
            break;
        case 4:
            out.per_fraction = {{9, 8 * two_l1},
                                {8, 2 * (2 * l - 5) * two_l1},
                                {7, ExactRational(2, 3) * (l - 3) * (l - 2) * two_l1}};
            out.total = ExactRational(2, 3) * (l * l + l + 3) * two_l1;
            break;
        default:
            out.per_fraction = {{12, 40 * two_l1},
                                {11, 20 * (l - 4) * two_l1},
                                {10, (4 * l - 19) * (l - 3) * two_l1},
                                {9, ExactRational(1, 6) * (l - 3) * (l - 2) * (2 * l - 17) * two_l1}};
            out.total = ExactRational(1, 6) * l * (2 * l * l - 3 * l + 31) * two_l1;
            break;
    }
    return out;
}

std::vector<Conjecture2Entry> Conjecture2Report::counterexamples() const {
    std::vector<Conjecture2Entry> out;
    std::copy_if(entries.begin(), entries.end(), std::back_inserter(out),
                 [](const Conjecture2Entry& e) { return e.fraction_count != 1; });
    return out;
}

Conjecture2Report conjecture2_check(int max_n) {
    if (max_n < 1) {
        throw std::invalid_argument("conjecture2_check: max_n must be >= 1");
    }
    Conjecture2Report report;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<int> ls = {1};
        if (n >= 3 && n <= 5) {
            for (int l = 0; l < n; ++l) {
                if (l != 1) {
                    ls.push_back(l);
                }
            }
            std::sort(ls.begin(), ls.end());
        }
        for (int l : ls) {
            const Decomposition d = decompose(MolienQuery::make(n, l));
            report.entries.push_back({n, l, d.fraction_count(), d.fractions.front().second});
            if (d.fraction_count() != 1) {
                (l == 1 ? report.l1_free : report.below_n_single) = false;
            }
        }
    }
    return report;
}

}  // namespace molien
