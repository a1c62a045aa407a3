#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rmtheta/local_field.hpp"

namespace rmtheta {

// Genus-2 hyperelliptic curve y^2 = f(x), deg f in {5, 6}, squarefree f.
struct HyperellipticCurve {
    std::vector<i64> f_coeffs;  // c0..c_deg, constant term first
    std::optional<i64> rm_disc;
    std::string label;

    static HyperellipticCurve make(std::vector<i64> f_coeffs,
                                   std::optional<i64> rm_disc = std::nullopt,
                                   std::string label = {});

    int degree() const { return static_cast<int>(f_coeffs.size()) - 1; }
    bool good_reduction(i64 p) const;  // p odd, f mod p squarefree of full degree
};

// Number of points of the smooth projective model over F_q, q = p or p^2.
i64 count_points(const HyperellipticCurve& C, i64 p, int field_degree);

// Local factor L_p(T) = 1 + c1 T + c2 T^2 + c3 T^3 + c4 T^4, weight-1
// normalization (c3 = p c1, c4 = p^2, Weil roots of modulus p^{1/2}).
struct EulerFactor {
    i64 p;
    i64 c1, c2, c3, c4;

    std::vector<i64> coeffs() const { return {1, c1, c2, c3, c4}; }
    bool operator==(const EulerFactor& o) const = default;
};

EulerFactor euler_factor(const HyperellipticCurve& C, i64 p);

// Largest absolute deviation of the reciprocal-root moduli from sqrt(p).
double weil_root_defect(const EulerFactor& E);

// a = (u + v sqrt(disc)) / 2 with u = v*disc mod 2; exact trace/norm.
struct QuadraticInteger {
    i64 u, v, disc;

    i64 trace() const { return u; }
    i64 norm_times_4() const { return u * u - v * v * disc; }
    QuadraticInteger conj() const { return {u, -v, disc}; }
    bool operator==(const QuadraticInteger& o) const = default;
};

struct RMSplitWitness {
    enum class Kind { split, inert, none } kind;
    QuadraticInteger a, a_conj;  // split
    i64 a0 = 0;                  // inert
};

// Tries the RM factorization shapes of L_p(T) over Q(sqrt(disc)).
RMSplitWitness rm_split_check(const EulerFactor& E, i64 disc);

}  // namespace rmtheta
