#include "rmtheta/local_field.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <unordered_set>

namespace rmtheta {

// ---- integer helpers ---------------------------------------------------

bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (i64 f = 5; f * f <= n; f += 6) {
        if (n % f == 0 || n % (f + 2) == 0) return false;
    }
    return true;
}

i64 mul_mod(i64 a, i64 b, i64 mod) {
    return static_cast<i64>(static_cast<__int128>(a) * b % mod);
}

i64 mod_pow(i64 base, i64 exp, i64 mod) {
    base %= mod;
    if (base < 0) base += mod;
    i64 r = 1 % mod;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, mod);
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

i64 mod_inv(i64 a, i64 mod) {
    a %= mod;
    if (a < 0) a += mod;
    i64 r0 = mod, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 r2 = r0 - q * r1;
        i64 s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw DivisionByZero("element not invertible modulo " + std::to_string(mod));
    return ((s0 % mod) + mod) % mod;
}

i64 val_p(i64 n, i64 p) {
    if (n == 0) throw DivisionByZero("valuation of zero integer");
    n = std::abs(n);
    i64 v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

i64 ipow_checked(i64 base, int exp) {
    i64 r = 1;
    const i64 limit = (i64{1} << 62);
    for (int i = 0; i < exp; ++i) {
        if (r > limit / base) throw UnsupportedField("p^precision exceeds 2^62");
        r *= base;
    }
    return r;
}

// ---- field descriptors -------------------------------------------------

LocalFieldDesc make_field(i64 p, ExtensionKind kind, int precision, i64 d) {
    if (!is_prime(p)) throw NonPrime("p = " + std::to_string(p) + " is not prime");
    if (precision < 4) throw InvalidExtension("precision must be at least 4");
    LocalFieldDesc F;
    F.p = p;
    F.kind = kind;
    F.precision = precision;
    F.coeff_mod = ipow_checked(p, precision);
    switch (kind) {
        case ExtensionKind::base:
            F.d = 0;
            break;
        case ExtensionKind::ram2:
            if (d == 0 || val_p(d, p) != 1)
                throw InvalidExtension("ramified-quadratic requires v_p(d) = 1");
            F.d = d;
            break;
        case ExtensionKind::unram2: {
            if (p == 2) throw InvalidExtension("unramified-quadratic over Q_2 unsupported");
            i64 du = ((d % p) + p) % p;
            if (du == 0) throw InvalidExtension("unramified-quadratic requires a unit d");
            if (mod_pow(du, (p - 1) / 2, p) != p - 1)
                throw InvalidExtension("d must be a non-square modulo p");
            F.d = d;
            break;
        }
    }
    return F;
}

// ---- elements ----------------------------------------------------------

LocalFieldElement LocalFieldElement::zero(const LocalFieldDesc& F) {
    LocalFieldElement x;
    x.field_ = F;
    x.infinite_ = true;
    return x;
}

LocalFieldElement LocalFieldElement::one(const LocalFieldDesc& F) {
    return make(F, 0, 1, 0);
}

LocalFieldElement LocalFieldElement::make(const LocalFieldDesc& F, i64 val, i64 a, i64 b) {
    LocalFieldElement x;
    x.field_ = F;
    x.infinite_ = false;
    x.val_ = val;
    const i64 M = F.coeff_mod;
    x.a_ = ((a % M) + M) % M;
    x.b_ = (F.kind == ExtensionKind::base) ? 0 : ((b % M) + M) % M;
    x.prec_ = x.capacity();
    x.normalize();
    return x;
}

LocalFieldElement LocalFieldElement::from_integer(const LocalFieldDesc& F, i64 n) {
    if (n == 0) return zero(F);
    return make(F, 0, n, 0);
}

LocalFieldElement LocalFieldElement::from_rational(const LocalFieldDesc& F, i64 num, i64 den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    if (num == 0) return zero(F);
    return from_integer(F, num) * from_integer(F, den).inverse();
}

LocalFieldElement LocalFieldElement::uniformizer(const LocalFieldDesc& F) {
    if (F.kind == ExtensionKind::ram2) return make(F, 0, 0, 1);
    return make(F, 0, F.p, 0);
}

LocalFieldElement LocalFieldElement::sqrt_d(const LocalFieldDesc& F) {
    if (F.kind == ExtensionKind::base) throw InvalidExtension("base field has no sqrt(d)");
    return make(F, 0, 0, 1);
}

i64 LocalFieldElement::valuation() const {
    if (infinite_) throw ZeroArgument("valuation of zero is +infinity");
    return val_;
}

i64 valuation_or_throw(const LocalFieldElement& x) { return x.valuation(); }

void LocalFieldElement::normalize() {
    if (infinite_) { val_ = 0; a_ = b_ = 0; prec_ = 0; return; }
    const i64 p = field_.p;
    const i64 M = field_.coeff_mod;
    a_ %= M; b_ %= M;
    if (a_ == 0 && b_ == 0) {
        infinite_ = true;
        val_ = 0; prec_ = 0;
        return;
    }
    i64 shift = 0;
    switch (field_.kind) {
        case ExtensionKind::base: {
            i64 s = val_p(a_, p);
            for (i64 i = 0; i < s; ++i) a_ /= p;
            shift = s;
            break;
        }
        case ExtensionKind::unram2: {
            i64 s;
            if (a_ == 0) s = val_p(b_, p);
            else if (b_ == 0) s = val_p(a_, p);
            else s = std::min(val_p(a_, p), val_p(b_, p));
            i64 q = 1;
            for (i64 i = 0; i < s; ++i) q *= p;
            a_ /= q; b_ /= q;
            shift = s;
            break;
        }
        case ExtensionKind::ram2: {
            // divide by pi = sqrt(d) while possible; (a + b*pi)/pi = b + (a/d)*pi
            const i64 w = field_.d / p;  // unit cofactor of d
            const i64 w_inv = mod_inv(w, M);
            while (a_ % p == 0) {
                i64 na = b_;
                i64 nb = mul_mod(a_ / p, w_inv, M);
                a_ = na; b_ = nb;
                ++shift;
                if (a_ == 0 && b_ == 0) {
                    infinite_ = true;
                    val_ = 0; prec_ = 0;
                    return;
                }
            }
            break;
        }
    }
    val_ += shift;
    prec_ = std::max(0, std::min<int>(prec_ - static_cast<int>(shift), capacity()));
}

void LocalFieldElement::check_same_field(const LocalFieldElement& x, const LocalFieldElement& y) {
    if (!(x.field_ == y.field_)) throw FieldMismatch();
}

LocalFieldElement LocalFieldElement::operator+(const LocalFieldElement& y) const {
    check_same_field(*this, y);
    if (infinite_) return y;
    if (y.infinite_) return *this;
    const LocalFieldElement& lo = (val_ <= y.val_) ? *this : y;
    const LocalFieldElement& hi = (val_ <= y.val_) ? y : *this;
    const i64 delta = hi.val_ - lo.val_;
    const i64 M = field_.coeff_mod;
    i64 a = hi.a_, b = hi.b_;
    if (field_.kind == ExtensionKind::ram2) {
        for (i64 i = 0; i < delta; ++i) {
            // multiply by pi: (a + b*pi)*pi = b*d + a*pi
            i64 na = mul_mod(b, field_.d % M, M);
            i64 nb = a;
            a = na; b = nb;
        }
    } else {
        i64 q = 1;
        for (i64 i = 0; i < delta && q < M; ++i) q *= field_.p;
        a = mul_mod(a, q % M, M);
        b = mul_mod(b, q % M, M);
    }
    LocalFieldElement r;
    r.field_ = field_;
    r.infinite_ = false;
    r.val_ = lo.val_;
    r.a_ = (lo.a_ + a) % M;
    r.b_ = (lo.b_ + b) % M;
    i64 absprec = std::min(val_ + prec_, y.val_ + y.prec_);
    r.prec_ = static_cast<int>(std::max<i64>(0, absprec - r.val_));
    r.normalize();
    return r;
}

LocalFieldElement LocalFieldElement::operator-() const {
    if (infinite_) return *this;
    LocalFieldElement r = *this;
    const i64 M = field_.coeff_mod;
    r.a_ = (M - a_) % M;
    r.b_ = (M - b_) % M;
    return r;
}

LocalFieldElement LocalFieldElement::operator-(const LocalFieldElement& y) const {
    return *this + (-y);
}

LocalFieldElement LocalFieldElement::operator*(const LocalFieldElement& y) const {
    check_same_field(*this, y);
    if (infinite_ || y.infinite_) return zero(field_);
    const i64 M = field_.coeff_mod;
    LocalFieldElement r;
    r.field_ = field_;
    r.infinite_ = false;
    r.val_ = val_ + y.val_;
    if (field_.kind == ExtensionKind::base) {
        r.a_ = mul_mod(a_, y.a_, M);
        r.b_ = 0;
    } else {
        const i64 d = ((field_.d % M) + M) % M;
        r.a_ = (mul_mod(a_, y.a_, M) + mul_mod(mul_mod(b_, y.b_, M), d, M)) % M;
        r.b_ = (mul_mod(a_, y.b_, M) + mul_mod(b_, y.a_, M)) % M;
    }
    r.prec_ = std::min(prec_, y.prec_);
    r.normalize();
    return r;
}

LocalFieldElement LocalFieldElement::inverse() const {
    if (infinite_) throw DivisionByZero("inverse of zero");
    const i64 M = field_.coeff_mod;
    LocalFieldElement r;
    r.field_ = field_;
    r.infinite_ = false;
    r.val_ = -val_;
    r.prec_ = prec_;
    if (field_.kind == ExtensionKind::base) {
        r.a_ = mod_inv(a_, M);
        r.b_ = 0;
    } else {
        // (a + b*g)^-1 = (a - b*g) / (a^2 - b^2 d); the norm is a unit
        const i64 d = ((field_.d % M) + M) % M;
        i64 norm = (mul_mod(a_, a_, M) + M - mul_mod(mul_mod(b_, b_, M), d, M)) % M;
        i64 ninv = mod_inv(norm, M);
        r.a_ = mul_mod(a_, ninv, M);
        r.b_ = mul_mod((M - b_) % M, ninv, M);
    }
    r.normalize();
    return r;
}

bool LocalFieldElement::equals(const LocalFieldElement& y) const {
    check_same_field(*this, y);
    return (*this - y).is_zero();
}

std::string LocalFieldElement::str() const {
    std::ostringstream os;
    if (infinite_) return "0";
    os << "pi^" << val_ << "*(" << a_;
    if (field_.kind != ExtensionKind::base) os << " + " << b_ << "*g";
    os << ")";
    return os.str();
}

// ---- unit groups -------------------------------------------------------

UnitGroup::UnitGroup(const LocalFieldDesc& F, int c) : field_(F), c_(c) {
    if (c < 1) throw UnsupportedField("conductor exponent must be >= 1");
    if (c > F.precision) throw UnsupportedField("conductor exponent exceeds field precision");
    switch (F.kind) {
        case ExtensionKind::base:
            mod_a_ = ipow_checked(F.p, c);
            mod_b_ = 1;
            break;
        case ExtensionKind::unram2:
            mod_a_ = mod_b_ = ipow_checked(F.p, c);
            break;
        case ExtensionKind::ram2: {
            int m = c / 2;
            if (c % 2 == 0) {
                mod_a_ = ipow_checked(F.p, m);
                mod_b_ = ipow_checked(F.p, m);
            } else {
                mod_a_ = ipow_checked(F.p, m + 1);
                mod_b_ = ipow_checked(F.p, m);
            }
            break;
        }
    }
    build_basis();
}

ResidueKey UnitGroup::reduce(const LocalFieldElement& x) const {
    if (x.is_zero()) return ResidueKey{0, 0};
    if (x.valuation() < 0) throw UnsupportedField("cannot reduce an element of negative valuation");
    // integral coordinates: multiply the unit part back by pi^v
    i64 a = x.unit_a(), b = x.unit_b();
    const i64 M = field_.coeff_mod;
    i64 v = x.valuation();
    if (field_.kind == ExtensionKind::ram2) {
        for (i64 i = 0; i < v; ++i) {
            i64 na = mul_mod(b, ((field_.d % M) + M) % M, M);
            i64 nb = a;
            a = na; b = nb;
        }
    } else {
        i64 q = 1;
        for (i64 i = 0; i < v && q < M; ++i) q *= field_.p;
        a = mul_mod(a, q % M, M);
        b = mul_mod(b, q % M, M);
    }
    return ResidueKey{a % mod_a_, b % mod_b_};
}

LocalFieldElement UnitGroup::lift(const ResidueKey& k) const {
    return LocalFieldElement::make(field_, 0, k.a, k.b);
}

ResidueKey UnitGroup::mul(const ResidueKey& x, const ResidueKey& y) const {
    return reduce(lift(x) * lift(y));
}

ResidueKey UnitGroup::pow(const ResidueKey& x, i64 e) const {
    ResidueKey r = identity();
    ResidueKey base = x;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

ResidueKey UnitGroup::identity() const { return ResidueKey{1 % mod_a_, 0}; }

bool UnitGroup::is_unit(const ResidueKey& k) const {
    switch (field_.kind) {
        case ExtensionKind::base:
        case ExtensionKind::ram2:
            return k.a % field_.p != 0;
        case ExtensionKind::unram2:
            return k.a % field_.p != 0 || k.b % field_.p != 0;
    }
    return false;
}

std::vector<ResidueKey> UnitGroup::all_units() const {
    std::vector<ResidueKey> out;
    for (i64 a = 0; a < mod_a_; ++a) {
        for (i64 b = 0; b < mod_b_; ++b) {
            ResidueKey k{a, b};
            if (is_unit(k)) out.push_back(k);
        }
    }
    return out;
}

void UnitGroup::build_basis() {
    std::vector<ResidueKey> units = all_units();
    order_ = static_cast<i64>(units.size());
    if (order_ > 20000) throw UnsupportedField("unit group too large for exhaustive basis search");

    std::unordered_set<ResidueKey, ResidueKeyHash> span;
    std::vector<ResidueKey> span_list;
    span.insert(identity());
    span_list.push_back(identity());

    while (static_cast<i64>(span.size()) < order_) {
        // element of maximal order in the current quotient
        ResidueKey best{};
        i64 best_k = 0;
        for (const ResidueKey& h : units) {
            if (span.count(h)) continue;
            i64 k = 1;
            ResidueKey t = h;
            while (!span.count(t)) { t = mul(t, h); ++k; }
            if (k > best_k) { best_k = k; best = h; }
        }
        // adjust by a span element so the generator has exact order best_k
        ResidueKey g = best;
        if (!(pow(g, best_k) == identity())) {
            bool found = false;
            for (const ResidueKey& t : span_list) {
                ResidueKey cand = mul(best, t);
                if (pow(cand, best_k) == identity()) { g = cand; found = true; break; }
            }
            if (!found) throw UnsupportedField("unit-group basis adjustment failed");
        }
        gens_.push_back(g);
        orders_.push_back(best_k);
        std::vector<ResidueKey> next_list;
        next_list.reserve(span_list.size() * best_k);
        ResidueKey gp = identity();
        for (i64 i = 0; i < best_k; ++i) {
            for (const ResidueKey& s : span_list) {
                ResidueKey e = mul(s, gp);
                span.insert(e);
                next_list.push_back(e);
            }
            gp = mul(gp, g);
        }
        span_list = std::move(next_list);
    }

    // freeze discrete logs: every unit is a unique product of generator powers
    dlog_.clear();
    std::vector<i64> exps(gens_.size(), 0);
    while (true) {
        ResidueKey v = identity();
        for (std::size_t i = 0; i < gens_.size(); ++i) v = mul(v, pow(gens_[i], exps[i]));
        if (!dlog_.emplace(v, exps).second)
            throw UnsupportedField("unit-group basis is not a direct decomposition");
        std::size_t i = 0;
        for (; i < exps.size(); ++i) {
            if (++exps[i] < orders_[i]) break;
            exps[i] = 0;
        }
        if (i == exps.size()) break;
    }
    if (static_cast<i64>(dlog_.size()) != order_)
        throw UnsupportedField("unit-group decomposition does not cover the group");
}

const std::vector<i64>& UnitGroup::discrete_log(const ResidueKey& k) const {
    auto it = dlog_.find(k);
    if (it == dlog_.end()) throw ZeroArgument("residue class is not a unit");
    return it->second;
}

}  // namespace rmtheta
