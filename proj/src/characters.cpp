#include "rmtheta/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace rmtheta {

// ---- UnitComplex -------------------------------------------------------

void UnitComplex::reduce() {
    k_ %= m_;
    if (k_ < 0) k_ += m_;
    i64 g = std::gcd(k_ == 0 ? m_ : k_, m_);
    m_ /= g;
    k_ /= g;
    if (m_ == 0) m_ = 1;
}

UnitComplex UnitComplex::root_of_unity(i64 order, i64 exponent) {
    if (order < 1) throw InconsistentCharacterData("root-of-unity order must be positive");
    UnitComplex u;
    u.exact_ = true;
    u.m_ = order;
    u.k_ = exponent;
    u.reduce();
    return u;
}

UnitComplex UnitComplex::from_complex(cdouble z) {
    UnitComplex u;
    u.exact_ = false;
    u.m_ = 0;
    u.k_ = 0;
    u.z_ = z;
    return u;
}

cdouble UnitComplex::to_complex() const {
    if (!exact_) return z_;
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k_) / static_cast<double>(m_);
    return {std::cos(t), std::sin(t)};
}

UnitComplex UnitComplex::operator*(const UnitComplex& o) const {
    if (exact_ && o.exact_) {
        i64 m = std::lcm(m_, o.m_);
        i64 k = k_ * (m / m_) + o.k_ * (m / o.m_);
        return root_of_unity(m, k);
    }
    return from_complex(to_complex() * o.to_complex());
}

UnitComplex UnitComplex::pow(i64 n) const {
    if (exact_) return root_of_unity(m_, ((k_ * (n % m_)) % m_ + m_) % m_);
    return from_complex(std::pow(z_, static_cast<double>(n)));
}

UnitComplex UnitComplex::conj() const {
    if (exact_) return root_of_unity(m_, m_ - k_);
    return from_complex(std::conj(z_));
}

bool UnitComplex::operator==(const UnitComplex& o) const {
    if (exact_ && o.exact_) return m_ == o.m_ && k_ == o.k_;
    return std::abs(to_complex() - o.to_complex()) < 1e-12;
}

// ---- MultiplicativeCharacter ------------------------------------------

MultiplicativeCharacter MultiplicativeCharacter::unramified(const LocalFieldDesc& F,
                                                            UnitComplex pi_value) {
    MultiplicativeCharacter chi;
    chi.field_ = F;
    chi.c_ = 0;
    chi.pi_value_ = pi_value;
    return chi;
}

namespace {

// value of the character (given by exponents on level-M generators) at a unit
UnitComplex value_at(const UnitGroup& G, const std::vector<UnitComplex>& gen_values,
                     const ResidueKey& u) {
    const std::vector<i64>& e = G.discrete_log(u);
    UnitComplex v = UnitComplex::one();
    for (std::size_t i = 0; i < e.size(); ++i) v = v * gen_values[i].pow(e[i]);
    return v;
}

std::vector<UnitComplex> checked_values(const UnitGroup& G,
                                        const std::vector<std::pair<i64, i64>>& exponents) {
    if (exponents.size() != G.generators().size())
        throw InconsistentCharacterData("exponent count does not match generator count");
    std::vector<UnitComplex> vals;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        UnitComplex v = UnitComplex::root_of_unity(exponents[i].first, exponents[i].second);
        // v^order(g_i) must be 1, else the data is not a homomorphism
        if (!v.pow(G.orders()[i]).is_one())
            throw InconsistentCharacterData("generator value order does not divide generator order");
        vals.push_back(v);
    }
    return vals;
}

// pi-adic valuation of u - 1 for a unit residue, capped at `cap`
i64 congruence_level(const UnitGroup& G, const ResidueKey& u, i64 cap) {
    LocalFieldElement diff = G.lift(u) - LocalFieldElement::one(G.field());
    if (diff.is_zero()) return cap;
    return std::min<i64>(diff.valuation(), cap);
}

int minimal_conductor(const UnitGroup& G, const std::vector<UnitComplex>& gen_values) {
    i64 max_level = 0;
    bool nontrivial = false;
    for (const ResidueKey& u : G.all_units()) {
        if (!value_at(G, gen_values, u).is_one()) {
            nontrivial = true;
            max_level = std::max(max_level, congruence_level(G, u, G.conductor_exponent()));
        }
    }
    return nontrivial ? static_cast<int>(max_level) + 1 : 0;
}

}  // namespace

int conductor_of_values(const LocalFieldDesc& F, int level,
                        const std::vector<std::pair<i64, i64>>& exponents) {
    UnitGroup G(F, level);
    return minimal_conductor(G, checked_values(G, exponents));
}

MultiplicativeCharacter MultiplicativeCharacter::from_unit_exponents(
    const LocalFieldDesc& F, int level, const std::vector<std::pair<i64, i64>>& exponents,
    UnitComplex pi_value) {
    UnitGroup G(F, level);
    std::vector<UnitComplex> vals = checked_values(G, exponents);
    int c = minimal_conductor(G, vals);
    if (c == 0) return unramified(F, pi_value);

    MultiplicativeCharacter chi;
    chi.field_ = F;
    chi.c_ = c;
    chi.pi_value_ = pi_value;
    chi.units_ = std::make_shared<UnitGroup>(F, c);
    // re-express: evaluate the level-`level` character on the level-c generators
    for (const ResidueKey& g : chi.units_->generators()) {
        ResidueKey lifted = G.reduce(chi.units_->lift(g));
        chi.gen_values_.push_back(value_at(G, vals, lifted));
    }
    return chi;
}

MultiplicativeCharacter MultiplicativeCharacter::quadratic_residue(const LocalFieldDesc& F,
                                                                   UnitComplex pi_value) {
    if (F.kind != ExtensionKind::base || F.p == 2)
        throw UnsupportedField("quadratic residue character needs Q_p with p odd");
    UnitGroup G(F, 1);
    std::vector<std::pair<i64, i64>> exps;
    for (i64 ord : G.orders()) {
        // value -1 on each generator of even order, i.e. the Legendre symbol
        exps.emplace_back(2, ord % 2 == 0 ? 1 : 0);
    }
    return from_unit_exponents(F, 1, exps, pi_value);
}

UnitComplex MultiplicativeCharacter::unit_value(const LocalFieldElement& unit) const {
    if (c_ == 0) return UnitComplex::one();
    return value_at(*units_, gen_values_, units_->reduce(unit));
}

UnitComplex MultiplicativeCharacter::eval(const LocalFieldElement& x) const {
    if (!(x.field() == field_)) throw FieldMismatch();
    if (x.is_zero()) throw ZeroArgument("character evaluated at zero");
    i64 v = x.valuation();
    LocalFieldElement u = LocalFieldElement::make(field_, 0, x.unit_a(), x.unit_b());
    return pi_value_.pow(v) * unit_value(u);
}

UnitComplex MultiplicativeCharacter::eval_integer(i64 n) const {
    return eval(LocalFieldElement::from_integer(field_, n));
}

UnitComplex MultiplicativeCharacter::value_at_minus_one() const {
    return eval(LocalFieldElement::from_integer(field_, -1));
}

MultiplicativeCharacter MultiplicativeCharacter::conjugate() const {
    MultiplicativeCharacter chi = *this;
    chi.pi_value_ = pi_value_.conj();
    for (UnitComplex& v : chi.gen_values_) v = v.conj();
    return chi;
}

// ---- additive characters and Gauss sums -------------------------------

AdditiveCharacter AdditiveCharacter::standard(const LocalFieldDesc& F, int level) {
    if (F.kind != ExtensionKind::base)
        throw UnsupportedField("additive characters are defined on base fields only");
    return AdditiveCharacter{F, level};
}

cdouble AdditiveCharacter::eval_fraction(i64 num, int k) const {
    // psi(num / p^k) with the level shift applied
    int kk = k - level;
    if (kk <= 0) return {1.0, 0.0};
    i64 q = ipow_checked(field.p, kk);
    i64 r = ((num % q) + q) % q;
    const double t = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(q);
    return {std::cos(t), std::sin(t)};
}

cdouble AdditiveCharacter::eval(const LocalFieldElement& x) const {
    if (!(x.field() == field)) throw FieldMismatch();
    if (x.is_zero()) return {1.0, 0.0};
    i64 v = x.valuation();
    if (v + level >= 0) return {1.0, 0.0};
    int k = static_cast<int>(-v);
    // x = a / p^k with a the stored unit
    return eval_fraction(x.unit_a(), k);
}

cdouble gauss_sum(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi) {
    const LocalFieldDesc& F = chi.field();
    if (F.kind != ExtensionKind::base) throw UnsupportedField("Gauss sums require Q_p");
    if (!(psi.field == F)) throw FieldMismatch();
    if (chi.conductor() == 0) throw UnramifiedCharacter("Gauss sum of an unramified character");
    const int c = chi.conductor();
    const UnitGroup& G = *chi.unit_group();

    // Kahan-compensated accumulation
    cdouble sum{0.0, 0.0}, comp{0.0, 0.0};
    for (const ResidueKey& u : G.all_units()) {
        cdouble term = chi.eval(G.lift(u)).to_complex() * psi.eval_fraction(u.a, c);
        cdouble y = term - comp;
        cdouble t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

}  // namespace rmtheta
