#include "molien/finite_group.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace molien {

namespace {

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
    const std::size_t n = a.size();
    ExactMatrix out(n, std::vector<ExactRational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

ExactMatrix transpose(const ExactMatrix& a) {
    ExactMatrix out(a.size(), std::vector<ExactRational>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            out[j][i] = a[i][j];
        }
    }
    return out;
}

ExactMatrix identity(std::size_t n) {
    ExactMatrix out(n, std::vector<ExactRational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        out[i][i] = 1;
    }
    return out;
}

[[noreturn]] void invalid(const std::string& what) { throw std::invalid_argument("finite group: " + what); }

}  // namespace

FiniteGroupRep::FiniteGroupRep(std::string name, std::vector<GroupElement> elements, std::vector<Irrep> irreps)
    : name_(std::move(name)), elements_(std::move(elements)), irreps_(std::move(irreps)) {
    if (elements_.empty()) {
        invalid("no elements");
    }
    const std::size_t dim = elements_.front().matrix.size();
    if (dim == 0) {
        invalid("empty matrix");
    }
    const ExactMatrix id = identity(dim);
    int identity_index = -1;
    for (std::size_t g = 0; g < elements_.size(); ++g) {
        const ExactMatrix& m = elements_[g].matrix;
        if (m.size() != dim) {
            invalid("element " + elements_[g].label + " has the wrong size");
        }
        for (const auto& row : m) {
            if (row.size() != dim) {
                invalid("element " + elements_[g].label + " is not square");
            }
        }
        if (multiply(m, transpose(m)) != id) {
            invalid("element " + elements_[g].label + " is not orthogonal");
        }
        if (m == id) {
            identity_index = static_cast<int>(g);
        }
    }
    if (identity_index < 0) {
        invalid("identity element missing");
    }
    for (const auto& a : elements_) {
        for (const auto& b : elements_) {
            const ExactMatrix ab = multiply(a.matrix, b.matrix);
            bool found = false;
            for (const auto& c : elements_) {
                found = found || c.matrix == ab;
            }
            if (!found) {
                invalid("not closed: " + a.label + " * " + b.label);
            }
        }
    }
    if (irreps_.empty()) {
        invalid("no irreps");
    }
    const ExactRational order(static_cast<long>(elements_.size()));
    for (const Irrep& r : irreps_) {
        if (r.characters.size() != elements_.size()) {
            invalid("irrep " + r.label + " needs one character per element");
        }
        if (r.characters[static_cast<std::size_t>(identity_index)] != ExactRational(r.dimension)) {
            invalid("irrep " + r.label + " character at the identity differs from its dimension");
        }
    }
    for (std::size_t i = 0; i < irreps_.size(); ++i) {
        for (std::size_t j = i; j < irreps_.size(); ++j) {
            ExactRational inner;
            for (std::size_t g = 0; g < elements_.size(); ++g) {
                inner += irreps_[i].characters[g] * irreps_[j].characters[g];
            }
            if (inner / order != ExactRational(i == j ? 1 : 0)) {
                invalid("characters of " + irreps_[i].label + " and " + irreps_[j].label + " are not orthonormal");
            }
        }
    }
}

FiniteGroupRep FiniteGroupRep::inversion() {
    ExactMatrix minus = identity(3);
    for (auto& row : minus) {
        for (auto& x : row) {
            x = -x;
        }
    }
    return FiniteGroupRep("Ci", {{"E", identity(3)}, {"i", minus}},
                          {{"A1", 1, {1, 1}}, {"A2", 1, {1, -1}}});
}

FiniteGroupRep FiniteGroupRep::trivial() {
    return FiniteGroupRep("C1", {{"E", identity(3)}}, {{"A", 1, {1}}});
}

FiniteGroupRep FiniteGroupRep::from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        invalid(std::string("malformed JSON: ") + e.what());
    }
    const auto rational = [](const nlohmann::json& v) {
        if (v.is_number_integer()) {
            return ExactRational(v.get<long>());
        }
        if (v.is_string()) {
            return ExactRational::parse(v.get<std::string>());
        }
        invalid("entries must be integers or rational strings");
    };
    try {
        if (doc.value("schema", "") != "molien-finite-group/1") {
            invalid("expected schema \"molien-finite-group/1\"");
        }
        std::vector<GroupElement> elements;
        for (const auto& e : doc.at("elements")) {
            GroupElement g{e.at("label").get<std::string>(), {}};
            for (const auto& row : e.at("matrix")) {
                std::vector<ExactRational> r;
                for (const auto& v : row) {
                    r.push_back(rational(v));
                }
                g.matrix.push_back(std::move(r));
            }
            elements.push_back(std::move(g));
        }
        if (doc.at("order").get<int>() != static_cast<int>(elements.size())) {
            invalid("order does not match the number of elements");
        }
        std::vector<Irrep> irreps;
        for (const auto& r : doc.at("irreps")) {
            Irrep irrep{r.at("label").get<std::string>(), r.at("dimension").get<int>(), {}};
            for (const auto& v : r.at("characters")) {
                irrep.characters.push_back(rational(v));
            }
            irreps.push_back(std::move(irrep));
        }
        return FiniteGroupRep(doc.at("name").get<std::string>(), std::move(elements), std::move(irreps));
    } catch (const nlohmann::json::exception& e) {
        invalid(std::string("bad group document: ") + e.what());
    } catch (const std::domain_error& e) {
        invalid(e.what());
    }
}

FiniteGroupRep FiniteGroupRep::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        invalid("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json(buffer.str());
}

FiniteGroupRep FiniteGroupRep::on_copies(int n) const {
    if (n < 1) {
        throw std::invalid_argument("number of copies must be >= 1");
    }
    const auto d = static_cast<std::size_t>(dimension());
    std::vector<GroupElement> elements;
    for (const GroupElement& g : elements_) {
        ExactMatrix big(d * static_cast<std::size_t>(n), std::vector<ExactRational>(d * static_cast<std::size_t>(n)));
        for (std::size_t c = 0; c < static_cast<std::size_t>(n); ++c) {
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j < d; ++j) {
                    big[c * d + i][c * d + j] = g.matrix[i][j];
                }
            }
        }
        elements.push_back({g.label, std::move(big)});
    }
    return FiniteGroupRep(name_, std::move(elements), irreps_);
}

const Irrep& FiniteGroupRep::irrep(const std::string& label) const {
    for (const Irrep& r : irreps_) {
        if (r.label == label) {
            return r;
        }
    }
    throw std::invalid_argument("group " + name_ + " has no irrep " + label);
}

Poly characteristic_determinant(const ExactMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = Poly::monomial(-m[i][j], 1) + Poly(i == j ? 1 : 0);
        }
    }
    // Bareiss: every division below is exact.
    Poly previous(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) {
                ++swap_row;
            }
            if (swap_row == n) {
                return Poly();
            }
            std::swap(a[k], a[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = *exact_quotient(a[i][j] * a[k][k] - a[i][k] * a[k][j], previous);
            }
        }
        previous = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

namespace {

RationalFraction reciprocal(const Poly& det) {
    Poly rest = det;
    int minus_power = 0;
    int plus_power = 0;
    while (rest.degree() > 0 && rest.evaluate(ExactRational(1)).is_zero()) {
        rest = *exact_quotient(rest, one_minus_lambda());
        ++minus_power;
    }
    while (rest.degree() > 0 && rest.evaluate(ExactRational(-1)).is_zero()) {
        rest = *exact_quotient(rest, one_plus_lambda());
        ++plus_power;
    }
    if (rest.degree() != 0) {
        throw std::domain_error("det(I - lambda D) has a factor other than 1 - lambda and 1 + lambda");
    }
    // 1/(c (1-l)^a (1+l)^b) = (1-l)^b / (c (1-l)^a (1-l^2)^b)
    const Poly numerator = one_minus_lambda().pow(static_cast<unsigned>(plus_power)) *
                           (ExactRational(1) / rest.coefficient(0));
    return RationalFraction::canonical(numerator, minus_power, plus_power);
}

}  // namespace

RationalFraction molien_finite(const FiniteGroupRep& rep, const std::string& irrep_label) {
    const Irrep& chi = rep.irrep(irrep_label);
    RationalFraction sum;
    for (std::size_t g = 0; g < rep.elements().size(); ++g) {
        if (chi.characters[g].is_zero()) {
            continue;
        }
        const RationalFraction term = reciprocal(characteristic_determinant(rep.elements()[g].matrix));
        sum = fraction_add(sum, fraction_scale(term, chi.characters[g]));
    }
    return fraction_scale(sum, ExactRational(1, rep.order()));
}

bool finite_dimension_sum_rule(const FiniteGroupRep& rep, int order) {
    TruncatedSeries sum(order);
    for (const Irrep& r : rep.irreps()) {
        sum += fraction_to_series(molien_finite(rep, r.label), order) * ExactRational(r.dimension);
    }
    return sum == TruncatedSeries::inverse_power(1, rep.dimension(), order);
}

}  // namespace molien
