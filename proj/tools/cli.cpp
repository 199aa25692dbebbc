#include "cli.hpp"

#include <CLI11.hpp>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "molien/closed_forms.hpp"
#include "molien/coupling.hpp"
#include "molien/decomposition.hpp"
#include "molien/finite_group.hpp"
#include "molien/format.hpp"
#include "molien/quadrature.hpp"
#include "molien/rotation.hpp"
#include "molien/so3_molien.hpp"

#ifndef MOLIEN_FIXTURE_DIR
#define MOLIEN_FIXTURE_DIR "tests/fixtures"
#endif

namespace molien::cli {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "molien-output/1";

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json poly_json(const Poly& p) {
    json exponents = json::array();
    json coefficients = json::array();
    for (const auto& [e, c] : p.terms()) {
        exponents.push_back(e);
        coefficients.push_back(c.to_string());
    }
    return {{"exponents", exponents}, {"coefficients", coefficients}};
}

json fraction_json(const RationalFraction& f) {
    return {{"exponent_one_minus_lambda", f.exp_one_minus_lambda()},
            {"exponent_one_minus_lambda_sq", f.exp_one_minus_lambda_sq()},
            {"numerator", poly_json(f.numerator())}};
}

json fraction_list_json(const std::vector<std::pair<int, Poly>>& fractions) {
    json out = json::array();
    for (const auto& [e, numerator] : fractions) {
        out.push_back({{"denominator_exponent", e}, {"numerator", poly_json(numerator)}});
    }
    return out;
}

json document(const std::string& command, json query, json result) {
    return {{"schema", kSchema}, {"command", command}, {"query", std::move(query)}, {"result", std::move(result)}};
}

std::string sci(double x) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(2) << x;
    return os.str();
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

std::string table_row(int n, int l, const Notation& notation) {
    const MolienQuery q = MolienQuery::make(n, l);
    return std::to_string(variant_index(q)) + " (" + std::to_string(l) + ") " +
           format_fraction_sum(decompose(q).fractions, notation);
}

// Suites ----------------------------------------------------------------------

std::vector<Check> sumrule_suite(int order) {
    std::vector<Check> checks;
    for (int n = 1; n <= 5; ++n) {
        const SumRuleReport r = sum_rule_check(n, order);
        std::string detail = "order " + std::to_string(order);
        if (r.first_failing_degree) {
            detail += ", first mismatch at degree " + std::to_string(*r.first_failing_degree);
        }
        checks.push_back({"sum rule N=" + std::to_string(n), r.holds, detail});
    }
    return checks;
}

std::vector<Check> coupling_suite(int order) {
    std::vector<Check> checks;
    for (int n = 1; n <= 5; ++n) {
        const auto table = memoized_series_table(n, 12, order);
        int mismatches = 0;
        for (const auto& [l, series] : table) {
            if (!(series == fraction_to_series(molien_so3(MolienQuery::make(n, l)), order))) {
                ++mismatches;
            }
        }
        checks.push_back({"coupling N=" + std::to_string(n), mismatches == 0,
                          "L 0..12, order " + std::to_string(order) + ", " + std::to_string(mismatches) +
                              " mismatches"});
    }
    return checks;
}

std::vector<Check> quadrature_suite(int quad_order, std::uint64_t seed) {
    std::vector<Check> checks;
    constexpr double kTolerance = 1e-8;
    double worst = 0.0;
    for (int n = 1; n <= 5; ++n) {
        for (int l = 0; l <= 6; ++l) {
            for (double lambda : {0.05, 0.1, 0.2}) {
                const double exact = molien_so3(MolienQuery::make(n, l)).evaluate(lambda);
                worst = std::max(worst, std::abs(molien_numeric(n, l, lambda, quad_order) - exact));
            }
        }
    }
    checks.push_back({"quadrature grid", worst <= kTolerance,
                      "N<=5, L<=6, lambda in {0.05,0.1,0.2}, order " + std::to_string(quad_order) +
                          ", max error " + sci(worst)});
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> lambda_dist(-0.5, 0.5);
    std::uniform_int_distribution<int> n_dist(1, 5);
    std::uniform_int_distribution<int> l_dist(0, 6);
    worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const int n = n_dist(rng);
        const int l = l_dist(rng);
        const double lambda = lambda_dist(rng);
        const double exact = molien_so3(MolienQuery::make(n, l)).evaluate(lambda);
        worst = std::max(worst, std::abs(molien_numeric(n, l, lambda, quad_order) - exact) / std::max(1.0, std::abs(exact)));
    }
    checks.push_back({"quadrature random draws", worst <= kTolerance,
                      "20 draws, |lambda| <= 0.5, max relative error " + sci(worst)});
    return checks;
}

std::vector<Check> rotation_suite(std::uint64_t seed) {
    const double pi = std::acos(-1.0);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> lambda_dist(-0.9, 0.9);
    std::uniform_int_distribution<int> n_dist(1, 5);
    double orthogonality = 0.0, determinant = 0.0, trace = 0.0, identity = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const RotationParams p{2.0 * pi * unit(rng) * 0.999999, pi * unit(rng), pi * unit(rng)};
        const Matrix3 r = rotation(p);
        orthogonality = std::max(orthogonality, (r * r.transpose() - Matrix3::Identity()).cwiseAbs().maxCoeff());
        determinant = std::max(determinant, std::abs(r.determinant() - 1.0));
        trace = std::max(trace, std::abs(r.trace() - 1.0 - 2.0 * std::cos(p.omega)));
        identity = std::max(identity, det_identity_check(p, lambda_dist(rng), n_dist(rng)).difference);
    }
    return {{"rotation orthogonality", orthogonality <= 1e-12, "max " + sci(orthogonality)},
            {"rotation determinant", determinant <= 1e-12, "max " + sci(determinant)},
            {"rotation trace", trace <= 1e-12, "max " + sci(trace)},
            {"det(I - lambda D) identity", identity <= 1e-10, "max " + sci(identity)}};
}

std::vector<Check> tables_suite(const std::string& fixture_dir) {
    std::vector<Check> checks;
    for (const auto& [n, name] : std::vector<std::pair<int, std::string>>{{3, "table2"}, {4, "table3"}, {5, "table5"}}) {
        const std::string path = fixture_dir + "/" + name + ".txt";
        std::ifstream in(path);
        if (!in) {
            checks.push_back({name, false, "cannot open " + path});
            continue;
        }
        int rows = 0;
        std::vector<std::string> mismatched;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) {
                continue;
            }
            const auto open = line.find('(');
            const auto close = line.find(')', open);
            const int l = std::stoi(line.substr(open + 1, close - open - 1));
            if (table_row(n, l, Notation{true}) != line) {
                mismatched.push_back(std::to_string(l));
            }
            ++rows;
        }
        std::string detail = std::to_string(rows) + " rows";
        if (!mismatched.empty()) {
            detail += ", mismatched L:";
            for (const auto& l : mismatched) {
                detail += " " + l;
            }
        }
        checks.push_back({name + " N=" + std::to_string(n), rows > 0 && mismatched.empty(), detail});
    }
    return checks;
}

std::vector<Check> conjecture_suite() {
    int scanned = 0;
    std::string failure;
    for (int n = 1; n <= 6 && failure.empty(); ++n) {
        for (int l = 0; l <= 100; ++l) {
            const Decomposition d = decompose(MolienQuery::make(n, l));
            ++scanned;
            const bool shape_ok = d.fraction_count() >= 1 && d.fraction_count() <= 3 * n - 2 &&
                                  std::all_of(d.fractions.begin(), d.fractions.end(), [&](const auto& f) {
                                      return f.second.all_nonnegative() && f.second.all_integer() &&
                                             (f.second.is_zero() || f.second.lowest_degree() >= l);
                                  });
            if (!shape_ok) {
                throw ConjectureViolation(n, l, "decomposition violates the conjectured shape");
            }
        }
    }
    const Conjecture2Report c2 = conjecture2_check(5);
    bool below_ok = true;
    for (int n = 3; n <= 5; ++n) {
        for (int l = 0; l <= n - 2; ++l) {
            below_ok = below_ok && fraction_count(MolienQuery::make(n, l)) == 1;
        }
    }
    return {{"nonnegative decompositions", true, std::to_string(scanned) + " decompositions, N<=6, L<=100"},
            {"free (1)-covariant modules", c2.l1_free, "k(N,1) = 1 for N=1..5"},
            {"single fraction for L <= N-2", below_ok, "N=3..5"}};
}

// Commands --------------------------------------------------------------------

struct CommonOptions {
    std::string format = "text";
    bool ascii = false;

    Notation notation() const { return Notation{ascii}; }
    bool is_json() const { return format == "json"; }
};

void add_common(CLI::App* cmd, CommonOptions& options) {
    cmd->add_option("--format", options.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--ascii", options.ascii, "Write t, ^ and - instead of Unicode");
}

int report_checks(const std::vector<Check>& checks, const std::string& suite, const CommonOptions& options,
                  json query, std::ostream& out) {
    const bool all_passed = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    if (options.is_json()) {
        json list = json::array();
        for (const Check& c : checks) {
            list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        }
        json doc = document("verify", std::move(query), json::object());
        doc["verification"] = {{"suite", suite}, {"checks", list}, {"passed", all_passed}};
        emit(out, doc);
    } else {
        for (const Check& c : checks) {
            out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        }
        const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; });
        out << (all_passed ? "all " + std::to_string(checks.size()) + " checks passed"
                           : std::to_string(failed) + " of " + std::to_string(checks.size()) + " checks failed")
            << '\n';
    }
    return all_passed ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Molien functions of N vectors under SO(3)", "molien"};
    app.require_subcommand(1);

    CommonOptions common;
    int n_vectors = 0;
    int target_l = 0;

    auto* compute = app.add_subcommand("compute", "Molien function g(N, L)");
    std::string form = "presented";
    compute->add_option("N", n_vectors, "Number of vectors")->required();
    compute->add_option("L", target_l, "Target irrep")->required();
    compute->add_option("--form", form, "canonical or presented over (1-l^2)^(3N-3)")
        ->check(CLI::IsMember({"canonical", "presented"}));
    add_common(compute, common);

    auto* decompose_cmd = app.add_subcommand("decompose", "Split g(N, L) into nonnegative fractions");
    decompose_cmd->add_option("N", n_vectors)->required();
    decompose_cmd->add_option("L", target_l)->required();
    add_common(decompose_cmd, common);

    auto* table = app.add_subcommand("table", "Rows 'i (L) decomposition' for a range of L");
    int l_min = 0;
    int l_max = 6;
    table->add_option("N", n_vectors)->required();
    table->add_option("--l-min", l_min)->check(CLI::NonNegativeNumber);
    table->add_option("--l-max", l_max)->check(CLI::NonNegativeNumber);
    add_common(table, common);

    auto* threshold = app.add_subcommand("threshold", "Smallest L from which the asymptotic form applies");
    int ceiling = 0;
    int window = 0;
    threshold->add_option("N", n_vectors)->required();
    threshold->add_option("--ceiling", ceiling)->required();
    threshold->add_option("--window", window)->required();
    add_common(threshold, common);

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    std::string suite = "all";
    int order = 12;
    std::uint64_t seed = 1;
    int quad_order = default_quadrature_order();
    std::string fixtures = MOLIEN_FIXTURE_DIR;
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"sumrule", "coupling", "quadrature", "rotation", "tables", "conjecture", "all"}));
    verify->add_option("--order", order, "Series order")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", seed, "Seed for randomized checks");
    verify->add_option("--quad-order", quad_order, "Gauss-Legendre order")->check(CLI::PositiveNumber);
    verify->add_option("--fixtures", fixtures, "Directory with table2.txt, table3.txt, table5.txt");
    add_common(verify, common);

    auto* finite = app.add_subcommand("finite", "Molien function of a finite group");
    std::string group = "Ci";
    std::string irrep;
    int copies = 1;
    finite->add_option("--group", group, "Ci, C1 or a group file");
    finite->add_option("--vectors", copies, "Number of copies of the representation")->check(CLI::PositiveNumber);
    finite->add_option("--irrep", irrep)->required();
    add_common(finite, common);

    std::vector<std::string> argv_storage{"molien"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) {
        argv.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (compute->parsed()) {
            const MolienQuery q = MolienQuery::make(n_vectors, target_l);
            const RationalFraction g = molien_so3(q);
            const json query = {{"n_vectors", n_vectors}, {"target_l", target_l}, {"form", form}};
            if (form == "presented") {
                const int e = presentation_exponent(n_vectors);
                const Poly numerator = g.presented_over_one_minus_lambda_sq(e);
                const std::string text = format_over_one_minus_lambda_sq(numerator, e, common.notation());
                if (common.is_json()) {
                    emit(out, document("compute", query,
                                       {{"denominator_exponent", e}, {"numerator", poly_json(numerator)}, {"text", text}}));
                } else {
                    out << text << '\n';
                }
            } else {
                const std::string text = format_fraction(g, common.notation());
                if (common.is_json()) {
                    json result = fraction_json(g);
                    result["text"] = text;
                    emit(out, document("compute", query, result));
                } else {
                    out << text << '\n';
                }
            }
            return kOk;
        }
        if (decompose_cmd->parsed()) {
            const MolienQuery q = MolienQuery::make(n_vectors, target_l);
            const Decomposition d = decompose(q);
            const std::string text = format_fraction_sum(d.fractions, common.notation());
            if (common.is_json()) {
                emit(out, document("decompose", {{"n_vectors", n_vectors}, {"target_l", target_l}},
                                   {{"fractions", fraction_list_json(d.fractions)},
                                    {"fraction_count", d.fraction_count()},
                                    {"division_steps", d.division_steps},
                                    {"variant_index", variant_index(q)},
                                    {"text", text}}));
            } else {
                out << text << '\n';
            }
            return kOk;
        }
        if (table->parsed()) {
            MolienQuery::make(n_vectors, 0);
            if (l_max < l_min) {
                throw std::invalid_argument("--l-max must be >= --l-min");
            }
            json rows = json::array();
            for (int l = l_min; l <= l_max; ++l) {
                if (common.is_json()) {
                    const MolienQuery q = MolienQuery::make(n_vectors, l);
                    rows.push_back({{"target_l", l},
                                    {"variant_index", variant_index(q)},
                                    {"fractions", fraction_list_json(decompose(q).fractions)}});
                } else {
                    out << table_row(n_vectors, l, common.notation()) << '\n';
                }
            }
            if (common.is_json()) {
                emit(out, document("table", {{"n_vectors", n_vectors}, {"l_min", l_min}, {"l_max", l_max}},
                                   {{"rows", rows}}));
            }
            return kOk;
        }
        if (threshold->parsed()) {
            const ThresholdReport r = find_threshold(n_vectors, ceiling, window);
            if (common.is_json()) {
                json result = {{"conclusive", r.conclusive},
                               {"first_stable_l", r.first_stable_l},
                               {"stable_from", r.stable_from},
                               {"stable_k", r.stable_k},
                               {"stable_division_steps", r.stable_signature.steps},
                               {"scan_ceiling", r.scan_ceiling},
                               {"stability_window", r.stability_window},
                               {"k_decreases", r.k_decreases}};
                result["tabulated"] = r.tabulated ? json(*r.tabulated) : json(nullptr);
                emit(out, document("threshold", {{"n_vectors", n_vectors}, {"ceiling", ceiling}, {"window", window}},
                                   result));
            } else if (!r.conclusive) {
                out << "inconclusive: signature constant only from L = " << r.stable_from << " to " << ceiling
                    << ", shorter than the window " << window << '\n';
            } else {
                out << r.first_stable_l << '\n'
                    << "k " << r.stable_k << '\n'
                    << "signature constant from L = " << r.stable_from << '\n';
                if (r.tabulated) {
                    out << "tabulated " << *r.tabulated << (r.matches_tabulated() ? " (agrees)" : " (differs)") << '\n';
                }
            }
            return kOk;
        }
        if (verify->parsed()) {
            std::vector<Check> checks;
            const auto add = [&](std::vector<Check> more) { checks.insert(checks.end(), more.begin(), more.end()); };
            const bool all = suite == "all";
            if (all || suite == "sumrule") add(sumrule_suite(order));
            if (all || suite == "coupling") add(coupling_suite(std::max(order, 24)));
            if (all || suite == "quadrature") add(quadrature_suite(quad_order, seed));
            if (all || suite == "rotation") add(rotation_suite(seed));
            if (all || suite == "tables") add(tables_suite(fixtures));
            if (all || suite == "conjecture") add(conjecture_suite());
            return report_checks(checks, suite, common,
                                 {{"suite", suite}, {"order", order}, {"seed", seed}, {"quad_order", quad_order}}, out);
        }
        if (finite->parsed()) {
            FiniteGroupRep rep = group == "Ci"   ? FiniteGroupRep::inversion()
                                 : group == "C1" ? FiniteGroupRep::trivial()
                                                 : FiniteGroupRep::from_file(group);
            if (copies > 1) {
                rep = rep.on_copies(copies);
            }
            const RationalFraction g = molien_finite(rep, irrep);
            const std::string text = format_fraction(g, common.notation());
            if (common.is_json()) {
                json result = fraction_json(g);
                result["text"] = text;
                emit(out, document("finite", {{"group", rep.name()}, {"irrep", irrep}, {"vectors", copies}}, result));
            } else {
                out << text << '\n';
            }
            return kOk;
        }
    } catch (const ConjectureViolation& e) {
        err << "conjecture violation: " << e.what() << '\n';
        return kConjectureViolation;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kUsage;
}

}  // namespace molien::cli
