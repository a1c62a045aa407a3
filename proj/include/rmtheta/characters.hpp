#pragma once

#include <complex>
#include <memory>
#include <utility>
#include <vector>

#include "rmtheta/local_field.hpp"

namespace rmtheta {

using cdouble = std::complex<double>;

// Unit-modulus complex value, kept as an exact root of unity exp(2*pi*i*k/m)
// whenever possible. Products of exact values stay exact; mixing with a
// floating value demotes the result.
class UnitComplex {
public:
    UnitComplex() : exact_(true), m_(1), k_(0) {}

    static UnitComplex one() { return UnitComplex(); }
    static UnitComplex root_of_unity(i64 order, i64 exponent);
    static UnitComplex from_complex(cdouble z);

    bool is_exact() const { return exact_; }
    bool is_one() const { return exact_ && k_ == 0; }
    i64 order() const { return m_; }
    i64 exponent() const { return k_; }

    UnitComplex operator*(const UnitComplex& o) const;
    UnitComplex pow(i64 n) const;
    UnitComplex conj() const;
    cdouble to_complex() const;

    bool operator==(const UnitComplex& o) const;

private:
    bool exact_;
    i64 m_, k_;   // exact: exp(2*pi*i*k/m), 0 <= k < m, reduced
    cdouble z_{};

    void reduce();
};

// Finite-order multiplicative character of K_v^x. Values on units are exact
// roots of unity attached to the generators of (O/pp^c)^x; the uniformizer
// value is free (any unit-modulus complex).
class MultiplicativeCharacter {
public:
    // Trivial on units (c = 0) with a prescribed uniformizer value.
    static MultiplicativeCharacter unramified(const LocalFieldDesc& F,
                                              UnitComplex pi_value = UnitComplex::one());

    // Character given by root-of-unity exponents (m_i, k_i) on the generators
    // of (O/pp^level)^x. The conductor is computed (minimal c), and the
    // character is re-expressed at that level. Throws
    // InconsistentCharacterData if some (m_i, k_i) violates the generator
    // order.
    static MultiplicativeCharacter from_unit_exponents(
        const LocalFieldDesc& F, int level,
        const std::vector<std::pair<i64, i64>>& exponents,
        UnitComplex pi_value = UnitComplex::one());

    // The quadratic residue character mod p on Q_p (p odd), conductor 1.
    static MultiplicativeCharacter quadratic_residue(const LocalFieldDesc& F,
                                                     UnitComplex pi_value = UnitComplex::one());

    const LocalFieldDesc& field() const { return field_; }
    int conductor() const { return c_; }
    const UnitComplex& uniformizer_value() const { return pi_value_; }
    const std::vector<UnitComplex>& generator_values() const { return gen_values_; }
    const UnitGroup* unit_group() const { return units_.get(); }

    UnitComplex eval(const LocalFieldElement& x) const;
    UnitComplex eval_integer(i64 n) const;  // convenience over from_integer
    UnitComplex value_at_minus_one() const;

    MultiplicativeCharacter conjugate() const;

private:
    LocalFieldDesc field_;
    int c_ = 0;
    std::shared_ptr<const UnitGroup> units_;  // null when c == 0
    std::vector<UnitComplex> gen_values_;
    UnitComplex pi_value_;

    UnitComplex unit_value(const LocalFieldElement& unit) const;
};

// Computes the minimal conductor exponent of the character defined by the
// given generator exponents at the given level (same contract as
// from_unit_exponents, without constructing the character).
int conductor_of_values(const LocalFieldDesc& F, int level,
                        const std::vector<std::pair<i64, i64>>& exponents);

// Additive character of a base field Q_p: psi(x) = exp(2*pi*i*{p^level x}_p).
// Level 0 is trivial on Z_p and nontrivial on p^-1 Z_p.
struct AdditiveCharacter {
    LocalFieldDesc field;
    int level = 0;

    static AdditiveCharacter standard(const LocalFieldDesc& F, int level = 0);

    // psi(num / p^k)
    cdouble eval_fraction(i64 num, int k) const;
    cdouble eval(const LocalFieldElement& x) const;
};

// G(chi, psi) = sum over u in (Z/p^c)^x of chi(u) psi(u/p^c), compensated
// summation. Requires a base field and c >= 1.
cdouble gauss_sum(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi);

}  // namespace rmtheta
