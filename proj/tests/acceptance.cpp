// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "rmtheta/concordance.hpp"
#include "rmtheta/theta.hpp"

using namespace rmtheta;

namespace {

int failures = 0;

void report(const char* name, bool ok, double seconds) {
    std::printf("[%s] %-28s (%.2fs)\n", ok ? "PASS" : "FAIL", name, seconds);
    if (!ok) ++failures;
}

void run(const char* name, double time_limit, const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::printf("  exception: %s\n", e.what());
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (time_limit > 0 && sec > time_limit) ok = false;
    report(name, ok, sec);
}

bool zeta_series_criterion() {
    LocalFieldDesc Q3 = make_field(3, ExtensionKind::base, 16);
    MultiplicativeCharacter quad = MultiplicativeCharacter::quadratic_residue(
        Q3, UnitComplex::root_of_unity(2, 1));
    for (cdouble s : {cdouble{1.0, 0}, cdouble{1.5, 0}, cdouble{2.0, 0}, cdouble{2.0, 1.0}}) {
        ZetaSeriesResult r = ramified_zeta_series(quad, s, 200);
        cdouble chi3 = quad.eval_integer(3).to_complex();
        cdouble limit = 1.0 / (1.0 - chi3 * std::pow(cdouble{3.0, 0}, -(s - 0.5)));
        if (std::abs(r.partial_sum - limit) > r.tail_bound + 1e-14) return false;
        if (std::abs(s - cdouble{2.0, 0}) < 1e-15 && std::abs(r.partial_sum - limit) > 1e-10)
            return false;
    }
    return true;
}

bool lfactor_epsilon_criterion() {
    LocalFieldDesc Q3 = make_field(3, ExtensionKind::base, 16);
    AdditiveCharacter psi = AdditiveCharacter::standard(Q3);
    for (const UnitComplex& piv :
         {UnitComplex::one(), UnitComplex::root_of_unity(2, 1), UnitComplex::root_of_unity(4, 1)}) {
        MultiplicativeCharacter chi = MultiplicativeCharacter::unramified(Q3, piv);
        LocalLFactor L = ramified_lfactor(chi);
        cdouble chi3 = chi.eval_integer(3).to_complex();
        for (double sr : {0.75, 1.0, 1.5, 2.0, 3.0}) {
            cdouble s{sr, 0.0};
            cdouble expect = 1.0 / (1.0 - chi3 * std::pow(cdouble{3.0, 0}, -s));
            if (std::abs(L.eval(s) - expect) > 1e-12) return false;
        }
    }
    MultiplicativeCharacter quad = MultiplicativeCharacter::quadratic_residue(Q3);
    // simplified form chi(-1) 3^{1/2 - s}
    for (double sr : {0.5, 1.0, 2.0}) {
        cdouble eps = ramified_epsilon(quad, psi, {sr, 0.0}, false);
        cdouble expect = quad.value_at_minus_one().to_complex() *
                         std::pow(cdouble{3.0, 0}, cdouble{0.5 - sr, 0.0});
        if (std::abs(eps - expect) > 1e-14) return false;
    }
    cdouble eps_full = ramified_epsilon(quad, psi, {0.5, 0.0}, true);
    return std::abs(std::abs(eps_full) - std::sqrt(3.0)) <= 1e-9;
}

int brute_conductor(i64 p, int M, const MultiplicativeCharacter& chi) {
    i64 q = 1;
    for (int i = 0; i < M; ++i) q *= p;
    for (int c = 0; c <= M; ++c) {
        i64 pc = 1;
        for (int i = 0; i < c; ++i) pc *= p;
        bool trivial = true;
        for (i64 u = 1; u < q && trivial; ++u) {
            if (u % p == 0 || u % pc != 1 % pc) continue;
            trivial = chi.eval_integer(u).is_one();
        }
        if (trivial) return c;
    }
    return M;
}

void for_each_char(const LocalFieldDesc& F, int M,
                   const std::function<void(const MultiplicativeCharacter&)>& fn) {
    UnitGroup G(F, M);
    std::vector<i64> exps(G.orders().size(), 0);
    while (true) {
        std::vector<std::pair<i64, i64>> data;
        for (std::size_t i = 0; i < exps.size(); ++i) data.emplace_back(G.orders()[i], exps[i]);
        fn(MultiplicativeCharacter::from_unit_exponents(F, M, data));
        std::size_t i = 0;
        for (; i < exps.size(); ++i) {
            if (++exps[i] < G.orders()[i]) break;
            exps[i] = 0;
        }
        if (i == exps.size()) break;
    }
}

bool gauss_conductor_criterion() {
    bool ok = true;
    // |G|^2 = p^c for primitive characters at these prime powers
    for (auto [p, M] : std::vector<std::pair<i64, int>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}, {7, 2}}) {
        LocalFieldDesc F = make_field(p, ExtensionKind::base, 8);
        AdditiveCharacter psi = AdditiveCharacter::standard(F);
        double pc = std::pow(static_cast<double>(p), M);
        for_each_char(F, M, [&](const MultiplicativeCharacter& chi) {
            if (chi.conductor() != M) return;
            cdouble g = gauss_sum(chi, psi);
            if (std::abs(std::norm(g) - pc) > 1e-9) ok = false;
        });
    }
    // conductor == brute force for all characters with p^M <= 81
    for (auto [p, M] : std::vector<std::pair<i64, int>>{{3, 4}, {5, 2}, {7, 2}, {2, 4}, {2, 6}}) {
        if (std::pow(static_cast<double>(p), M) > 81.5) continue;
        LocalFieldDesc F = make_field(p, ExtensionKind::base, 8);
        for_each_char(F, M, [&](const MultiplicativeCharacter& chi) {
            if (chi.conductor() != brute_conductor(p, M, chi)) ok = false;
        });
    }
    return ok;
}

bool test_vector_criterion() {
    LocalFieldDesc K = make_field(2, ExtensionKind::ram2, 16, 2);
    AdaptedLattice L(K, {0, 2});
    LocalFieldElement one = LocalFieldElement::one(K);
    LocalFieldElement zero = LocalFieldElement::zero(K);
    LocalFieldElement r2 = LocalFieldElement::sqrt_d(K);
    LocalFieldElement two = LocalFieldElement::from_integer(K, 2);
    if (L.char_fn({one, r2}) != 0) return false;
    if (L.char_fn({r2, two}) != 1) return false;
    if (L.char_fn({zero, zero}) != 1) return false;
    if (!invariance_subgroup_check(L, make_mat2(one, zero, two, one))) return false;
    if (invariance_subgroup_check(L, make_mat2(one, one, zero, one))) return false;
    // unipotent with v(x) = 2 on the upper right restores invariance
    if (!invariance_subgroup_check(L, make_mat2(one, two, zero, one))) return false;
    return true;
}

bool theta_criterion() {
    GlobalLattice Z4 = GlobalLattice::standard(4);
    ThetaCoefficientTable tab = theta_coefficients(Z4, HarmonicWeight::constant_one, 4);
    // oracle: box enumeration of pairs
    std::map<HalfIntegralMatrix, i64> oracle;
    std::vector<std::vector<i64>> vecs;
    for (i64 a = -3; a <= 3; ++a)
        for (i64 b = -3; b <= 3; ++b)
            for (i64 c = -3; c <= 3; ++c)
                for (i64 d = -3; d <= 3; ++d)
                    if (a * a + b * b + c * c + d * d <= 8) vecs.push_back({a, b, c, d});
    auto dot = [](const std::vector<i64>& x, const std::vector<i64>& y) {
        return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
    };
    for (const auto& x1 : vecs) {
        if (dot(x1, x1) % 2 != 0) continue;
        for (const auto& x2 : vecs) {
            if (dot(x2, x2) % 2 != 0) continue;
            HalfIntegralMatrix T{dot(x1, x1) / 2, dot(x1, x2), dot(x2, x2) / 2};
            if (T.trace() <= 4) oracle[T] += 1;
        }
    }
    for (const auto& [T, v] : oracle)
        if (tab.at(T) != v) return false;
    for (const auto& [T, v] : tab.entries)
        if (v != 0 && oracle[T] != v) return false;
    if (tab.at({1, 0, 0}) != 24) return false;

    // invariance / equivariance sampling
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<i64> entry(-8, 8);
    std::uniform_int_distribution<i64> small(-3, 3);
    for (int i = 0; i < 100; ++i) {
        std::vector<i64> x1(4), x2(4);
        for (auto& v : x1) v = entry(rng);
        for (auto& v : x2) v = entry(rng);
        i64 base = eval_harmonic(HarmonicWeight::det_symmetric_square, x1, x2);
        for (int j = 0; j < 100; ++j) {
            i64 t = small(rng);
            // symplectic shear [[I, tS], [0, I]], S = I
            std::vector<i64> g1 = {x1[0] + t * x1[2], x1[1] + t * x1[3], x1[2], x1[3]};
            std::vector<i64> g2 = {x2[0] + t * x2[2], x2[1] + t * x2[3], x2[2], x2[3]};
            if (eval_harmonic(HarmonicWeight::det_symmetric_square, g1, g2) != base)
                return false;
            i64 ha = small(rng), hb = small(rng), hc = small(rng), hd = small(rng);
            std::vector<i64> y1(4), y2(4);
            for (int k = 0; k < 4; ++k) {
                y1[k] = ha * x1[k] + hc * x2[k];
                y2[k] = hb * x1[k] + hd * x2[k];
            }
            i64 det = ha * hd - hb * hc;
            if (eval_harmonic(HarmonicWeight::det_symmetric_square, y1, y2) != det * det * base)
                return false;
        }
    }
    return true;
}

bool curve_criterion() {
    std::vector<HyperellipticCurve> corpus = {
        HyperellipticCurve::make({1, 0, 0, 0, 0, 1}, 5, "x^5+1"),
        HyperellipticCurve::make({0, 1, 0, 0, 0, 1}),
        HyperellipticCurve::make({1, 1, 0, 0, 0, 0, 1}),
        HyperellipticCurve::make({1, 0, 1, 0, 0, 1}),
        HyperellipticCurve::make({2, 1, 0, 0, 1, 0, 1}),
    };
    for (const HyperellipticCurve& C : corpus) {
        const int deg = C.degree();
        for (i64 p : {3, 5, 7, 11, 13}) {
            if (!C.good_reduction(p)) continue;
            // affine oracle over F_p
            auto modp = [&](i64 v) { return ((v % p) + p) % p; };
            i64 n = 0;
            for (i64 x = 0; x < p; ++x) {
                i64 fx = 0;
                for (int i = deg; i >= 0; --i) fx = modp(fx * x + C.f_coeffs[i]);
                for (i64 y = 0; y < p; ++y)
                    if (modp(y * y) == fx) ++n;
            }
            if (deg == 5) n += 1;
            else {
                for (i64 y = 0; y < p; ++y)
                    if (modp(y * y) == modp(C.f_coeffs[deg])) ++n;
            }
            if (count_points(C, p, 1) != n) return false;
        }
        for (i64 p = 3; p <= 50; ++p) {
            if (!is_prime(p) || !C.good_reduction(p)) continue;
            EulerFactor E = euler_factor(C, p);
            if (E.c3 != p * E.c1 || E.c4 != p * p) return false;
            if (weil_root_defect(E) > 1e-6) return false;
        }
    }
    return true;
}

bool concordance_criterion() {
    HyperellipticCurve C = HyperellipticCurve::make({1, 0, 0, 0, 0, 1}, 5, "x^5+1");
    HeckeDataset data = dataset_from_curve(C, 5, 3, 60);
    MatchReport rep = match(C, data, 3, 60);
    if (rep.num_equal() < 10 || rep.num_unequal() != 0) return false;
    data.records[1].eigenvalues[0].u += 4;
    if (data.records[1].splitting == PrimeSplitting::split)
        data.records[1].eigenvalues[1].u += 4;
    MatchReport rep2 = match(C, data, 3, 60);
    return rep2.num_unequal() == 1;
}

bool spherical_criterion() {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> re(-1.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        cdouble a{re(rng) + 1.5, re(rng)};
        cdouble b{re(rng) + 0.5, re(rng)};
        i64 q = (i % 2 == 0) ? 3 : 7;
        SatakeParams sat = SatakeParams::make(q, a, b);
        cdouble s{2.0 + re(rng), re(rng)};
        cdouble qs = std::pow(cdouble(static_cast<double>(q), 0.0), -s);
        cdouble direct = 1.0 / ((1.0 - qs) * (1.0 - (a / b) * qs) * (1.0 - (b / a) * qs) *
                                (1.0 - qs));
        if (std::abs(spherical_rs_lfactor(sat).eval(s) - direct) > 1e-12) return false;
    }
    return true;
}

}  // namespace

int main() {
    run("zeta-series", 1.0, zeta_series_criterion);
    run("l-epsilon-factors", 0.0, lfactor_epsilon_criterion);
    run("gauss-conductor", 10.0, gauss_conductor_criterion);
    run("test-vectors", 0.0, test_vector_criterion);
    run("theta-coefficients", 60.0, theta_criterion);
    run("curve-side", 30.0, curve_criterion);
    run("concordance-roundtrip", 0.0, concordance_criterion);
    run("spherical-identity", 0.0, spherical_criterion);
    if (failures > 0) {
        std::printf("%d criteria failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
