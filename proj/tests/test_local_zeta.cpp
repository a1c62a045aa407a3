#include <doctest.h>

#include <cmath>
#include <random>

#include "rmtheta/local_zeta.hpp"

using namespace rmtheta;

namespace {

LocalFieldDesc q3() { return make_field(3, ExtensionKind::base, 12); }

MultiplicativeCharacter quad3_with_pi(UnitComplex pi) {
    return MultiplicativeCharacter::quadratic_residue(q3(), pi);
}

}  // namespace

TEST_CASE("whittaker evaluation") {
    LocalFieldDesc F = q3();
    WhittakerDatum W{MultiplicativeCharacter::unramified(F)};
    LocalFieldElement one = LocalFieldElement::one(F);
    CHECK(std::abs(W.eval(one, one) - cdouble{1, 0}) < 1e-15);

    WhittakerDatum Wq{MultiplicativeCharacter::quadratic_residue(F)};
    CHECK(std::abs(Wq.eval(LocalFieldElement::from_integer(F, 2), one) - cdouble{-1, 0}) <
          1e-15);

    // support on O^x forces vanishing at v(a) > 0
    CHECK(std::abs(Wq.eval(LocalFieldElement::from_integer(F, 3), one)) < 1e-15);
    CHECK_THROWS_AS((void)Wq.eval(LocalFieldElement::zero(F), one), ZeroDiagonal);
}

TEST_CASE("ramified zeta series against geometric oracle") {
    // chi(3) = 1: limit 1/(1 - 3^{-(s-1/2)}) = 1.5 at s = 3/2
    MultiplicativeCharacter chi1 = MultiplicativeCharacter::unramified(q3());
    ZetaSeriesResult r = ramified_zeta_series(chi1, {1.5, 0.0}, 100);
    CHECK(std::abs(r.partial_sum - cdouble{1.5, 0.0}) <= r.tail_bound + 1e-14);
    CHECK(std::abs(r.closed_form - cdouble{1.5, 0.0}) < 1e-14);

    // chi(3) = -1, unshifted exponent at s = 1/2: 1/(1 + 3^{-1/2})
    MultiplicativeCharacter chim =
        MultiplicativeCharacter::unramified(q3(), UnitComplex::root_of_unity(2, 1));
    ZetaSeriesResult r2 =
        ramified_zeta_series(chim, {0.5, 0.0}, 200, ZetaNormalization::unshifted);
    const double expect = 1.0 / (1.0 + 1.0 / std::sqrt(3.0));
    CHECK(std::abs(r2.partial_sum - cdouble{expect, 0.0}) <= r2.tail_bound + 1e-14);

    // s -> +infinity: only the n = 0 term survives
    ZetaSeriesResult r3 = ramified_zeta_series(chi1, {40.0, 0.0}, 50);
    CHECK(std::abs(r3.partial_sum - cdouble{1.0, 0.0}) < 1e-15);

    CHECK_THROWS_AS(ramified_zeta_series(chi1, {0.4, 0.0}, 100), DivergentParameters);
}

TEST_CASE("series limit ties to the L-factor under both normalizations") {
    std::vector<UnitComplex> pi_values = {
        UnitComplex::one(), UnitComplex::root_of_unity(2, 1), UnitComplex::root_of_unity(4, 1),
        UnitComplex::root_of_unity(6, 1)};
    for (const UnitComplex& piv : pi_values) {
        MultiplicativeCharacter chi = MultiplicativeCharacter::unramified(q3(), piv);
        LocalLFactor L = ramified_lfactor(chi);
        for (double s : {1.25, 1.5, 2.0, 3.0}) {
            ZetaSeriesResult unsh =
                ramified_zeta_series(chi, {s, 0.0}, 400, ZetaNormalization::unshifted);
            CHECK(std::abs(unsh.closed_form - L.eval({s, 0.0})) < 1e-10);
            CHECK(std::abs(unsh.partial_sum - unsh.closed_form) <= unsh.tail_bound + 1e-12);
            ZetaSeriesResult sh =
                ramified_zeta_series(chi, {s, 0.0}, 400, ZetaNormalization::shifted);
            CHECK(std::abs(sh.closed_form - L.eval({s - 0.5, 0.0})) < 1e-10);
        }
    }
}

TEST_CASE("ramified L-factor worked examples") {
    MultiplicativeCharacter chi1 = MultiplicativeCharacter::unramified(q3());
    CHECK(std::abs(ramified_lfactor(chi1).eval({1.0, 0.0}) - cdouble{1.5, 0.0}) < 1e-14);

    MultiplicativeCharacter chim =
        MultiplicativeCharacter::unramified(q3(), UnitComplex::root_of_unity(2, 1));
    CHECK(std::abs(ramified_lfactor(chim).eval({1.0, 0.0}) - cdouble{0.75, 0.0}) < 1e-14);

    MultiplicativeCharacter chii =
        MultiplicativeCharacter::unramified(q3(), UnitComplex::root_of_unity(4, 1));
    cdouble expected = 1.0 / (cdouble{1.0, 0.0} - cdouble{0.0, 1.0} / 9.0);
    CHECK(std::abs(ramified_lfactor(chii).eval({2.0, 0.0}) - expected) < 1e-14);
}

TEST_CASE("epsilon factor") {
    LocalFieldDesc F = q3();
    AdditiveCharacter psi = AdditiveCharacter::standard(F);
    MultiplicativeCharacter quad = MultiplicativeCharacter::quadratic_residue(F);

    // -1 = 2 mod 3 is a non-square, so chi(-1) = -1
    CHECK(std::abs(ramified_epsilon(quad, psi, {0.5, 0.0}, false) - cdouble{-1.0, 0.0}) <
          1e-14);

    MultiplicativeCharacter triv = MultiplicativeCharacter::unramified(F);
    CHECK(std::abs(ramified_epsilon(triv, psi, {0.5, 0.0}, false) - cdouble{1.0, 0.0}) <
          1e-14);
    CHECK_THROWS_AS((void)ramified_epsilon(triv, psi, {0.5, 0.0}, true),
                    UnramifiedCharacter);

    // with the Gauss factor: -1 * (i sqrt 3)
    cdouble eps = ramified_epsilon(quad, psi, {0.5, 0.0}, true);
    CHECK(std::abs(eps - cdouble{0.0, -std::sqrt(3.0)}) < 1e-12);
    // |eps(1/2)| = p^{c/2} for primitive chi
    CHECK(std::abs(std::abs(eps) - std::sqrt(3.0)) < 1e-9);
}

TEST_CASE("spherical Rankin-Selberg factor") {
    SatakeParams triv = SatakeParams::make(3, {1, 0}, {1, 0});
    // all inverse roots 1: (1 - q^{-s})^{-4}
    cdouble v = spherical_rs_lfactor(triv).eval({2.0, 0.0});
    double base = 1.0 / (1.0 - 1.0 / 9.0);
    CHECK(std::abs(v - cdouble{base * base * base * base, 0.0}) < 1e-12);

    double sq = std::sqrt(3.0);
    SatakeParams st = SatakeParams::make(3, {sq, 0}, {1.0 / sq, 0}, true);
    LocalLFactor L = spherical_rs_lfactor(st);
    REQUIRE(L.inverse_roots.size() == 4);
    CHECK(std::abs(L.inverse_roots[1] - cdouble{3.0, 0.0}) < 1e-12);
    CHECK(std::abs(L.inverse_roots[2] - cdouble{1.0 / 3.0, 0.0}) < 1e-12);

    // direct product oracle at s = 2, q = 3, alpha/beta = 2
    SatakeParams s2 = SatakeParams::make(3, {2.0, 0}, {1.0, 0});
    double x = std::pow(3.0, -2.0);
    double direct = 1.0 / ((1 - x) * (1 - 2 * x) * (1 - 0.5 * x) * (1 - x));
    CHECK(std::abs(spherical_rs_lfactor(s2).eval({2.0, 0.0}) - cdouble{direct, 0.0}) < 1e-12);
}

TEST_CASE("spherical factor is symmetric in alpha and beta") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> re(-1.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        cdouble a{re(rng) + 1.5, re(rng)};
        cdouble b{re(rng) + 0.5, re(rng)};
        SatakeParams s1 = SatakeParams::make(5, a, b);
        SatakeParams s2 = SatakeParams::make(5, b, a);
        cdouble s{2.0 + re(rng), re(rng)};
        CHECK(std::abs(spherical_rs_lfactor(s1).eval(s) - spherical_rs_lfactor(s2).eval(s)) <
              1e-12);
    }
}
