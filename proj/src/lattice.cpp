#include "rmtheta/lattice.hpp"

namespace rmtheta {

AdaptedLattice::AdaptedLattice(const LocalFieldDesc& F, std::vector<i64> shape)
    : field_(F), shape_(std::move(shape)) {}

int AdaptedLattice::char_fn(const std::vector<LocalFieldElement>& x) const {
    if (static_cast<int>(x.size()) != rank()) throw DimensionMismatch();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i].field() == field_)) throw FieldMismatch();
        if (x[i].is_zero()) continue;  // zero lies in every fractional ideal
        if (x[i].valuation() < shape_[i]) return 0;
    }
    return 1;
}

Mat2 make_mat2(const LocalFieldElement& a, const LocalFieldElement& b,
               const LocalFieldElement& c, const LocalFieldElement& d) {
    return Mat2{{{a, b}, {c, d}}};
}

bool invariance_subgroup_check(const AdaptedLattice& L, const Mat2& g) {
    if (L.rank() != 2) throw DimensionMismatch("invariance check needs a rank-2 lattice");
    const LocalFieldDesc& F = L.field();
    LocalFieldElement det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    if (det.is_zero()) throw SingularMatrix();

    // M = B g B^-1 with B = diag(pi^a1, pi^a2); entry (i,j) picks up pi^(a_i - a_j),
    // so the off-diagonal conditions are v(g_12) >= a2 - a1 and v(g_21) >= a1 - a2
    const i64 a1 = L.shape()[0], a2 = L.shape()[1];
    auto entry_val_ok = [&](const LocalFieldElement& e, i64 shift) {
        if (e.is_zero()) return true;
        return e.valuation() + shift >= 0;
    };
    bool integral = entry_val_ok(g[0][0], 0) && entry_val_ok(g[1][1], 0) &&
                    entry_val_ok(g[0][1], a1 - a2) && entry_val_ok(g[1][0], a2 - a1);
    // g L = L iff M in GL_2(O): integral entries and unit determinant
    return integral && det.valuation() == 0;
}

GlobalLattice::GlobalLattice(std::vector<std::vector<i64>> basis_columns)
    : rank_(static_cast<int>(basis_columns.size())), basis_(std::move(basis_columns)) {
    if (rank_ == 0) throw DimensionMismatch("empty basis");
    for (const auto& col : basis_)
        if (static_cast<int>(col.size()) != rank_)
            throw DimensionMismatch("basis must be square");
    gram_.assign(rank_, std::vector<i64>(rank_, 0));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            for (int k = 0; k < rank_; ++k) gram_[i][j] += basis_[i][k] * basis_[j][k];
}

GlobalLattice GlobalLattice::standard(int rank) {
    std::vector<std::vector<i64>> cols(rank, std::vector<i64>(rank, 0));
    for (int i = 0; i < rank; ++i) cols[i][i] = 1;
    return GlobalLattice(std::move(cols));
}

GlobalLattice GlobalLattice::congruence(const std::vector<i64>& moduli) {
    const int n = static_cast<int>(moduli.size());
    std::vector<std::vector<i64>> cols(n, std::vector<i64>(n, 0));
    for (int i = 0; i < n; ++i) {
        if (moduli[i] <= 0) throw DimensionMismatch("congruence moduli must be positive");
        cols[i][i] = moduli[i];
    }
    return GlobalLattice(std::move(cols));
}

std::vector<i64> GlobalLattice::vector(const std::vector<i64>& coeffs) const {
    if (static_cast<int>(coeffs.size()) != rank_) throw DimensionMismatch();
    std::vector<i64> v(rank_, 0);
    for (int j = 0; j < rank_; ++j)
        for (int k = 0; k < rank_; ++k) v[k] += coeffs[j] * basis_[j][k];
    return v;
}

}  // namespace rmtheta
