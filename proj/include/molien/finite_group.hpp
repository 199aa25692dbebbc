#pragma once

#include <map>
#include <string>
#include <vector>

#include "molien/fraction.hpp"

namespace molien {

using ExactMatrix = std::vector<std::vector<ExactRational>>;

struct GroupElement {
    std::string label;
    ExactMatrix matrix;
};

struct Irrep {
    std::string label;
    int dimension = 1;
    /// One real character value per group element, in element order.
    std::vector<ExactRational> characters;
};

/// A finite matrix group with its real character table.
///
/// Construction validates: element count equals the order, all matrices are
/// square of one size and orthogonal, the set is closed under products,
/// characters have one entry per element, the identity's character equals
/// the irrep dimension, and the characters are orthonormal.
class FiniteGroupRep {
public:
    FiniteGroupRep(std::string name, std::vector<GroupElement> elements, std::vector<Irrep> irreps);

    /// Built-in inversion group C_i on one vector: E and -E, irreps A1 (+1, +1) and A2 (+1, -1).
    static FiniteGroupRep inversion();
    /// The group with only the identity on one vector, irrep A.
    static FiniteGroupRep trivial();
    /// Reads the "molien-finite-group/1" JSON format. Throws std::invalid_argument.
    static FiniteGroupRep from_json(const std::string& text);
    static FiniteGroupRep from_file(const std::string& path);

    /// Same group acting diagonally on n copies of the representation space.
    FiniteGroupRep on_copies(int n) const;

    const std::string& name() const { return name_; }
    int order() const { return static_cast<int>(elements_.size()); }
    int dimension() const { return static_cast<int>(elements_.front().matrix.size()); }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const std::vector<Irrep>& irreps() const { return irreps_; }
    const Irrep& irrep(const std::string& label) const;

private:
    std::string name_;
    std::vector<GroupElement> elements_;
    std::vector<Irrep> irreps_;
};

/// det(I - lambda M) by fraction-free elimination over Q[lambda].
Poly characteristic_determinant(const ExactMatrix& m);

/// (1/|G|) sum_g chi(g) / det(I - lambda D(g)). Every determinant must factor
/// as c (1 - lambda)^a (1 + lambda)^b; other factors throw std::domain_error.
RationalFraction molien_finite(const FiniteGroupRep& rep, const std::string& irrep_label);

/// sum over irreps of dim * series(g_irrep) == 1/(1 - lambda)^dim(D) through lambda^order.
bool finite_dimension_sum_rule(const FiniteGroupRep& rep, int order);

}  // namespace molien
