#pragma once

#include <complex>
#include <vector>

#include "rmtheta/characters.hpp"

namespace rmtheta {

// Satake parameters (alpha, beta) of an unramified GL_2 representation with
// residue cardinality q. With the unitary flag set, alpha*beta = 1 is
// enforced on construction (parallel weight 2, trivial central character).
struct SatakeParams {
    i64 q;
    cdouble alpha;
    cdouble beta;

    static SatakeParams make(i64 q, cdouble alpha, cdouble beta, bool unitary = false);
    // Solve alpha + beta = a_p / sqrt(p), alpha*beta = 1.
    static SatakeParams from_eigenvalue(i64 p, double a_p);
};

// Product form prod_i (1 - gamma_i q^-s)^-1.
struct LocalLFactor {
    i64 q;
    std::vector<cdouble> inverse_roots;

    cdouble eval(cdouble s) const;
};

// Whittaker datum of the ramified principal-series worked example:
// W(g) = chi(det g) * 1_{O^x}(a) for Borel g = [[a, *], [0, d]].
struct WhittakerDatum {
    MultiplicativeCharacter chi;

    cdouble eval(const LocalFieldElement& a, const LocalFieldElement& d) const;
};

enum class ZetaNormalization { shifted, unshifted };

// Partial sum of sum_{n>=0} chi(pi^n) q^{-n(s - 1/2)} (shifted) or
// with exponent -n s (unshifted), plus a rigorous geometric tail bound.
struct ZetaSeriesResult {
    cdouble partial_sum;
    double tail_bound;
    cdouble closed_form;  // geometric-series limit under the same exponent
};

ZetaSeriesResult ramified_zeta_series(const MultiplicativeCharacter& chi, cdouble s, int terms,
                                      ZetaNormalization norm = ZetaNormalization::shifted);

// L(s, pi) = (1 - chi(p) q^-s)^-1.
LocalLFactor ramified_lfactor(const MultiplicativeCharacter& chi);

// epsilon(s, pi, psi) = chi(-1) p^{1/2 - s} (G(chi, psi) if include_gauss).
cdouble ramified_epsilon(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi,
                         cdouble s, bool include_gauss);

// Rankin-Selberg factor of pi x pi~: inverse roots {1, a/b, b/a, 1}.
LocalLFactor spherical_rs_lfactor(const SatakeParams& satake);

}  // namespace rmtheta
