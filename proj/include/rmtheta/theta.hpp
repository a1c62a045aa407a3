#pragma once

#include <map>
#include <vector>

#include "rmtheta/lattice.hpp"

namespace rmtheta {

// Harmonic polynomial weight on Mat_{4x2}: either P = 1 or
// P(X) = det(X^t J X) with J the standard symplectic form. The latter is
// (x1^t J x2)^2: symplectically invariant and det^2-equivariant under
// right GL_2 translation.
enum class HarmonicWeight { constant_one, det_symmetric_square };

// X given by two ambient columns of length 4.
i64 eval_harmonic(HarmonicWeight P, const std::vector<i64>& x1, const std::vector<i64>& x2);

// T = [[a, b/2], [b/2, c]] with integer a, b, c.
struct HalfIntegralMatrix {
    i64 a, b, c;

    i64 trace() const { return a + c; }
    bool psd() const { return a >= 0 && c >= 0 && 4 * a * c - b * b >= 0; }
    bool operator<(const HalfIntegralMatrix& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
    bool operator==(const HalfIntegralMatrix& o) const = default;
};

struct ThetaCoefficientTable {
    HarmonicWeight weight;
    i64 bound;  // max trace enumerated
    std::map<HalfIntegralMatrix, i64> entries;

    i64 at(const HalfIntegralMatrix& T) const;
};

// All lattice vectors v with v^T v <= norm_bound, by Cholesky tree search.
// Throws BoundTooLarge when the node budget is exhausted.
std::vector<std::vector<i64>> short_vectors(const GlobalLattice& L, i64 norm_bound,
                                            i64 node_budget = 20'000'000);

// a(T) = sum over pairs (x1, x2) in L x L with (1/2) Gram(x1, x2) = T of
// P([x1 x2]); complete over all semi-integral psd T with tr(T) <= trace_bound.
ThetaCoefficientTable theta_coefficients(const GlobalLattice& L, HarmonicWeight P,
                                         i64 trace_bound, i64 node_budget = 20'000'000);

struct ThetaClassReport {
    struct TraceRow {
        i64 trace;
        i64 num_entries;
        i64 num_nonzero;
        i64 max_abs_value;
    };
    struct EquivClass {
        std::vector<HalfIntegralMatrix> members;
        std::vector<i64> values;
    };
    std::vector<TraceRow> growth;
    std::vector<EquivClass> classes;
};

// Groups table entries by GL_2(Z)-equivalence T -> U^T T U, with U searched
// exhaustively over entries bounded by 3.
ThetaClassReport coefficient_report(const ThetaCoefficientTable& table);

}  // namespace rmtheta
