#pragma once

#include <array>
#include <vector>

#include "rmtheta/local_field.hpp"

namespace rmtheta {

// Local lattice in valuation-shape form: L = pp^{a_1} O + ... + pp^{a_r} O.
// Houses the non-archimedean test vectors phi = 1_L.
class AdaptedLattice {
public:
    AdaptedLattice(const LocalFieldDesc& F, std::vector<i64> shape);

    const LocalFieldDesc& field() const { return field_; }
    int rank() const { return static_cast<int>(shape_.size()); }
    const std::vector<i64>& shape() const { return shape_; }

    // Characteristic function: 1 iff v(x_i) >= a_i for all i.
    int char_fn(const std::vector<LocalFieldElement>& x) const;
    bool contains(const std::vector<LocalFieldElement>& x) const { return char_fn(x) == 1; }

private:
    LocalFieldDesc field_;
    std::vector<i64> shape_;
};

using Mat2 = std::array<std::array<LocalFieldElement, 2>, 2>;

Mat2 make_mat2(const LocalFieldElement& a, const LocalFieldElement& b,
               const LocalFieldElement& c, const LocalFieldElement& d);

// True iff g L = L for a rank-2 shape lattice: with B = diag(pi^{a_1},
// pi^{a_2}), checks that B^-1 g B has integral entries and unit determinant.
bool invariance_subgroup_check(const AdaptedLattice& L, const Mat2& g);

// Global lattice in Q^n given by an integer basis (columns) in an
// orthonormal ambient frame; gram = basis^T basis.
class GlobalLattice {
public:
    explicit GlobalLattice(std::vector<std::vector<i64>> basis_columns);

    static GlobalLattice standard(int rank);
    // Sublattice of Z^rank scaled per coordinate: { x : m_i | x_i }.
    static GlobalLattice congruence(const std::vector<i64>& moduli);

    int rank() const { return rank_; }
    const std::vector<std::vector<i64>>& basis() const { return basis_; }        // columns
    const std::vector<std::vector<i64>>& gram() const { return gram_; }

    // Ambient coordinates of the lattice vector with the given basis coefficients.
    std::vector<i64> vector(const std::vector<i64>& coeffs) const;

private:
    int rank_;
    std::vector<std::vector<i64>> basis_;
    std::vector<std::vector<i64>> gram_;
};

}  // namespace rmtheta
