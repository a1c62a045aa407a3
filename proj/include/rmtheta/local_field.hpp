#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rmtheta/errors.hpp"

namespace rmtheta {

using i64 = std::int64_t;

// ---- small modular-arithmetic helpers ---------------------------------

bool is_prime(i64 n);
i64 mod_pow(i64 base, i64 exp, i64 mod);
i64 mod_inv(i64 a, i64 mod);          // throws DivisionByZero if gcd != 1
i64 mul_mod(i64 a, i64 b, i64 mod);   // 128-bit intermediate
i64 val_p(i64 n, i64 p);              // p-adic valuation of a nonzero integer
i64 ipow_checked(i64 base, int exp);  // throws UnsupportedField on overflow

// ---- field descriptors -------------------------------------------------

enum class ExtensionKind { base, unram2, ram2 };

// Finite-precision model of Q_p or a quadratic extension.
//   base:    K = Q_p, uniformizer p, e = f = 1
//   unram2:  K = Q_p(sqrt(d)) with d a unit non-square mod p, uniformizer p,
//            e = 1, f = 2
//   ram2:    K = Q_p(sqrt(d)) with v_p(d) = 1, uniformizer sqrt(d),
//            e = 2, f = 1
// Elements store coordinates along {1, sqrt(d)} modulo p^precision.
// Valuations are normalized so v(uniformizer) = 1 (hence v(p) = e).
struct LocalFieldDesc {
    i64 p = 0;
    ExtensionKind kind = ExtensionKind::base;
    i64 d = 0;       // defining element; unused for base
    int precision = 16;
    i64 coeff_mod = 0;  // p^precision, cached

    int ramification_index() const { return kind == ExtensionKind::ram2 ? 2 : 1; }
    int residue_degree() const { return kind == ExtensionKind::unram2 ? 2 : 1; }
    int degree() const { return kind == ExtensionKind::base ? 1 : 2; }
    i64 residue_cardinality() const { return kind == ExtensionKind::unram2 ? p * p : p; }

    bool operator==(const LocalFieldDesc& o) const {
        return p == o.p && kind == o.kind && (kind == ExtensionKind::base || d == o.d) &&
               precision == o.precision;
    }
};

LocalFieldDesc make_field(i64 p, ExtensionKind kind, int precision, i64 d = 0);

// ---- elements ----------------------------------------------------------

// x = pi^valuation * (a + b*gen), a unit (gen = sqrt(d); b = 0 for base).
// Zero carries an explicit infinity flag. prec is the number of known
// pi-adic digits of the unit part.
class LocalFieldElement {
public:
    LocalFieldElement() = default;

    static LocalFieldElement zero(const LocalFieldDesc& F);
    static LocalFieldElement one(const LocalFieldDesc& F);
    static LocalFieldElement from_integer(const LocalFieldDesc& F, i64 n);
    static LocalFieldElement from_rational(const LocalFieldDesc& F, i64 num, i64 den);
    // Raw constructor: value pi^val * (a + b*gen); (a, b) need not be a unit,
    // the result is normalized.
    static LocalFieldElement make(const LocalFieldDesc& F, i64 val, i64 a, i64 b = 0);
    static LocalFieldElement uniformizer(const LocalFieldDesc& F);
    static LocalFieldElement sqrt_d(const LocalFieldDesc& F);  // gen; error for base

    const LocalFieldDesc& field() const { return field_; }
    bool is_zero() const { return infinite_; }
    // Normalized valuation; throws on zero (use is_zero first).
    i64 valuation() const;
    i64 unit_a() const { return a_; }
    i64 unit_b() const { return b_; }
    int precision() const { return prec_; }

    LocalFieldElement operator+(const LocalFieldElement& y) const;
    LocalFieldElement operator-() const;
    LocalFieldElement operator-(const LocalFieldElement& y) const;
    LocalFieldElement operator*(const LocalFieldElement& y) const;
    LocalFieldElement inverse() const;

    bool equals(const LocalFieldElement& y) const;

    std::string str() const;

private:
    LocalFieldDesc field_;
    bool infinite_ = true;
    i64 val_ = 0;
    i64 a_ = 0, b_ = 0;
    int prec_ = 0;

    void normalize();
    int capacity() const { return field_.precision * field_.ramification_index(); }
    static void check_same_field(const LocalFieldElement& x, const LocalFieldElement& y);
};

i64 valuation_or_throw(const LocalFieldElement& x);

// ---- residue rings and unit groups ------------------------------------

// Canonical encoding of an integral element modulo pp^c (pp = maximal ideal).
struct ResidueKey {
    i64 a = 0, b = 0;
    bool operator==(const ResidueKey& o) const { return a == o.a && b == o.b; }
};

struct ResidueKeyHash {
    std::size_t operator()(const ResidueKey& k) const {
        return std::hash<i64>{}(k.a * 1000003 + k.b);
    }
};

// Structured generators of (O/pp^c)^x: every unit class is a unique product
// prod gens[i]^{e_i} with 0 <= e_i < orders[i]. Built by exhaustive basis
// search; only base fields and quadratic extensions with small groups are
// supported.
class UnitGroup {
public:
    UnitGroup(const LocalFieldDesc& F, int c);

    const LocalFieldDesc& field() const { return field_; }
    int conductor_exponent() const { return c_; }
    i64 order() const { return order_; }
    const std::vector<ResidueKey>& generators() const { return gens_; }
    const std::vector<i64>& orders() const { return orders_; }

    ResidueKey reduce(const LocalFieldElement& x) const;  // requires v(x) >= 0
    ResidueKey mul(const ResidueKey& x, const ResidueKey& y) const;
    ResidueKey pow(const ResidueKey& x, i64 e) const;
    ResidueKey identity() const;
    bool is_unit(const ResidueKey& k) const;
    std::vector<ResidueKey> all_units() const;

    // Exponent vector of a unit class in the generator basis.
    const std::vector<i64>& discrete_log(const ResidueKey& k) const;

    LocalFieldElement lift(const ResidueKey& k) const;

private:
    LocalFieldDesc field_;
    int c_;
    i64 mod_a_ = 1, mod_b_ = 1;  // canonical coordinate moduli
    i64 order_ = 0;
    std::vector<ResidueKey> gens_;
    std::vector<i64> orders_;
    std::unordered_map<ResidueKey, std::vector<i64>, ResidueKeyHash> dlog_;

    void build_basis();
};

}  // namespace rmtheta
