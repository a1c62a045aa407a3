#include "rmtheta/curves.hpp"

#include <cmath>
#include <complex>

namespace rmtheta {

namespace {

std::vector<i64> reduce_mod(const std::vector<i64>& f, i64 p) {
    std::vector<i64> r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = ((f[i] % p) + p) % p;
    while (r.size() > 1 && r.back() == 0) r.pop_back();
    return r;
}

std::vector<i64> derivative_mod(const std::vector<i64>& f, i64 p) {
    std::vector<i64> r;
    for (std::size_t i = 1; i < f.size(); ++i) r.push_back((static_cast<i64>(i) * f[i]) % p);
    while (r.size() > 1 && r.back() == 0) r.pop_back();
    return r;
}

std::vector<i64> poly_mod_rem(std::vector<i64> a, const std::vector<i64>& b, i64 p) {
    const i64 lead_inv = mod_inv(b.back(), p);
    while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
        i64 q = mul_mod(a.back(), lead_inv, p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - mul_mod(q, b[i], p)) % p + p) % p;
        while (a.size() > 1 && a.back() == 0) a.pop_back();
    }
    return a;
}

bool squarefree_mod(const std::vector<i64>& f, i64 p) {
    std::vector<i64> a = f, b = derivative_mod(f, p);
    if (b.size() == 1 && b[0] == 0) return false;
    // gcd(f, f') constant
    while (!(b.size() == 1 && b[0] == 0)) {
        a = poly_mod_rem(std::move(a), b, p);
        std::swap(a, b);
    }
    return a.size() == 1 && a[0] != 0;
}

}  // namespace

HyperellipticCurve HyperellipticCurve::make(std::vector<i64> f_coeffs,
                                            std::optional<i64> rm_disc, std::string label) {
    while (f_coeffs.size() > 1 && f_coeffs.back() == 0) f_coeffs.pop_back();
    const int deg = static_cast<int>(f_coeffs.size()) - 1;
    if (deg != 5 && deg != 6)
        throw BadReduction("genus 2 requires deg f in {5, 6}, got " + std::to_string(deg));
    HyperellipticCurve C{std::move(f_coeffs), rm_disc, std::move(label)};
    // squarefree over Q: witnessed by a squarefree full-degree reduction
    bool squarefree = false;
    for (i64 p = 3; p < 200 && !squarefree; p += 2) {
        if (!is_prime(p)) continue;
        std::vector<i64> fp = reduce_mod(C.f_coeffs, p);
        if (static_cast<int>(fp.size()) - 1 == deg && squarefree_mod(fp, p)) squarefree = true;
    }
    if (!squarefree) throw BadReduction("f(x) appears to have a repeated factor");
    return C;
}

bool HyperellipticCurve::good_reduction(i64 p) const {
    if (p == 2) return false;
    std::vector<i64> fp = reduce_mod(f_coeffs, p);
    if (static_cast<int>(fp.size()) != static_cast<int>(f_coeffs.size())) return false;
    return squarefree_mod(fp, p);
}

namespace {

// F_{p^2} = F_p[t]/(t^2 - n) with n the smallest non-residue.
struct Fp2 {
    i64 p, n;

    explicit Fp2(i64 p_) : p(p_) {
        n = 0;
        for (i64 cand = 2; cand < p; ++cand) {
            if (mod_pow(cand, (p - 1) / 2, p) == p - 1) { n = cand; break; }
        }
        if (n == 0) throw UnsupportedFieldSize("no quadratic non-residue found");
    }

    using E = std::pair<i64, i64>;  // u + v t
    E mul(E x, E y) const {
        return {(mul_mod(x.first, y.first, p) + mul_mod(mul_mod(x.second, y.second, p), n, p)) % p,
                (mul_mod(x.first, y.second, p) + mul_mod(x.second, y.first, p)) % p};
    }
    E pow(E x, i64 e) const {
        E r{1, 0};
        while (e > 0) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }
    // quadratic character: 0, 1 or -1
    int chi(E x) const {
        if (x.first == 0 && x.second == 0) return 0;
        E r = pow(x, (static_cast<i64>(p) * p - 1) / 2);
        return (r.first == 1 && r.second == 0) ? 1 : -1;
    }
};

int legendre(i64 a, i64 p) {
    a = ((a % p) + p) % p;
    if (a == 0) return 0;
    return mod_pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace

i64 count_points(const HyperellipticCurve& C, i64 p, int field_degree) {
    if (p == 2) throw BadReduction("p = 2 is not supported");
    if (!is_prime(p)) throw NonPrime();
    if (!C.good_reduction(p)) throw BadReduction("p divides disc(f)");
    if (field_degree != 1 && field_degree != 2)
        throw UnsupportedFieldSize("only F_p and F_{p^2} are supported");

    const int deg = C.degree();
    const i64 lead = C.f_coeffs.back();

    if (field_degree == 1) {
        i64 count = 0;
        for (i64 x = 0; x < p; ++x) {
            i64 fx = 0;
            for (int i = deg; i >= 0; --i) fx = (mul_mod(fx, x, p) + ((C.f_coeffs[i] % p) + p)) % p;
            count += 1 + legendre(fx, p);
        }
        if (deg == 5) count += 1;
        else count += (legendre(lead, p) == 1) ? 2 : 0;
        return count;
    }

    Fp2 F(p);
    i64 count = 0;
    for (i64 u = 0; u < p; ++u) {
        for (i64 v = 0; v < p; ++v) {
            Fp2::E x{u, v}, fx{0, 0};
            for (int i = deg; i >= 0; --i) {
                fx = F.mul(fx, x);
                fx.first = (fx.first + ((C.f_coeffs[i] % p) + p)) % p;
            }
            count += 1 + F.chi(fx);
        }
    }
    if (deg == 5) count += 1;
    else count += (F.chi({((lead % p) + p) % p, 0}) == 1) ? 2 : 0;
    return count;
}

double weil_root_defect(const EulerFactor& E) {
    // Durand-Kerner on L_p(T) = c4 T^4 + c3 T^3 + c2 T^2 + c1 T + 1
    using cd = std::complex<double>;
    const cd a4(static_cast<double>(E.c4), 0), a3(static_cast<double>(E.c3), 0),
        a2(static_cast<double>(E.c2), 0), a1(static_cast<double>(E.c1), 0), a0(1, 0);
    auto eval = [&](cd t) { return (((a4 * t + a3) * t + a2) * t + a1) * t + a0; };
    std::vector<cd> r = {cd(0.4, 0.9), cd(-0.9, 0.4), cd(-0.4, -0.9), cd(0.9, -0.4)};
    const double scale = 1.0 / std::sqrt(static_cast<double>(E.p));
    for (auto& z : r) z *= scale;
    for (int it = 0; it < 400; ++it) {
        double shift = 0.0;
        for (int i = 0; i < 4; ++i) {
            cd denom = a4;
            for (int j = 0; j < 4; ++j)
                if (j != i) denom *= (r[i] - r[j]);
            cd delta = eval(r[i]) / denom;
            r[i] -= delta;
            shift = std::max(shift, std::abs(delta));
        }
        if (shift < 1e-14) break;
    }
    double defect = 0.0;
    for (const auto& z : r) defect = std::max(defect, std::abs(std::abs(z) - scale));
    // roots of L_p are the reciprocals of the Weil numbers; rescale the
    // deviation to the alpha side (|alpha| = sqrt(p))
    return defect / (scale * scale);
}

EulerFactor euler_factor(const HyperellipticCurve& C, i64 p) {
    const i64 n1 = count_points(C, p, 1);
    const i64 n2 = count_points(C, p, 2);
    const i64 t1 = p + 1 - n1;          // sum of Weil numbers
    const i64 s2 = p * p + 1 - n2;      // sum of their squares
    if ((t1 * t1 - s2) % 2 != 0)
        throw WeilBoundViolation("parity identity violated; counting bug");
    EulerFactor E;
    E.p = p;
    E.c1 = n1 - p - 1;
    E.c2 = (t1 * t1 - s2) / 2;
    E.c3 = p * E.c1;
    E.c4 = p * p;
    const double bound = 4.0 * std::sqrt(static_cast<double>(p));
    if (std::abs(static_cast<double>(t1)) > bound + 1e-9)
        throw WeilBoundViolation("N_1 outside the Weil interval");
    if (weil_root_defect(E) > 1e-6)
        throw WeilBoundViolation("Weil root magnitudes off sqrt(p)");
    return E;
}

RMSplitWitness rm_split_check(const EulerFactor& E, i64 disc) {
    RMSplitWitness w{RMSplitWitness::Kind::none, {}, {}, 0};
    if (E.c1 == 0 && E.c3 == 0) {
        // 1 + c2 T^2 + p^2 T^4 = 1 - a0 T^2 + p^2 T^4
        w.kind = RMSplitWitness::Kind::inert;
        w.a0 = -E.c2;
        return w;
    }
    // (1 - aT + pT^2)(1 - a'T + pT^2): a + a' = -c1, a a' = c2 - 2p
    const i64 D = E.c1 * E.c1 - 4 * (E.c2 - 2 * E.p);
    if (D < 0) return w;
    auto isqrt = [](i64 n) {
        i64 r = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(n))));
        while (r * r > n) --r;
        while ((r + 1) * (r + 1) <= n) ++r;
        return r;
    };
    const i64 u = -E.c1;
    i64 s = isqrt(D);
    if (s * s == D) {
        // rational eigenvalue pair (each self-conjugate)
        if ((u + s) % 2 == 0) {
            w.kind = RMSplitWitness::Kind::split;
            w.a = QuadraticInteger{u + s, 0, disc};
            w.a_conj = QuadraticInteger{u - s, 0, disc};
            return w;
        }
        return w;
    }
    if (D % disc == 0) {
        const i64 q = D / disc;
        i64 v = isqrt(q);
        if (v * v == q && ((u - v * disc) % 2 + 2) % 2 == 0) {
            w.kind = RMSplitWitness::Kind::split;
            w.a = QuadraticInteger{u, v, disc};
            w.a_conj = QuadraticInteger{u, -v, disc};
        }
    }
    return w;
}

}  // namespace rmtheta
