#include "rmtheta/local_zeta.hpp"

#include <cmath>

namespace rmtheta {

SatakeParams SatakeParams::make(i64 q, cdouble alpha, cdouble beta, bool unitary) {
    if (alpha == cdouble{0.0, 0.0} || beta == cdouble{0.0, 0.0})
        throw ZeroArgument("Satake parameters must be nonzero");
    if (unitary && std::abs(alpha * beta - cdouble{1.0, 0.0}) > 1e-9)
        throw SatakeUnsolvable("unitary normalization requires alpha*beta = 1");
    return SatakeParams{q, alpha, beta};
}

SatakeParams SatakeParams::from_eigenvalue(i64 p, double a_p) {
    // roots of z^2 - (a_p/sqrt(p)) z + 1
    const double t = a_p / std::sqrt(static_cast<double>(p));
    const cdouble disc = cdouble{t * t / 4.0 - 1.0, 0.0};
    const cdouble root = std::sqrt(disc);
    return SatakeParams{p, t / 2.0 + root, t / 2.0 - root};
}

cdouble LocalLFactor::eval(cdouble s) const {
    const cdouble x = std::pow(cdouble(static_cast<double>(q), 0.0), -s);
    cdouble value{1.0, 0.0};
    for (const cdouble& g : inverse_roots) {
        cdouble denom = cdouble{1.0, 0.0} - g * x;
        if (std::abs(denom) < 1e-300) throw DivergentParameters("pole of local L-factor");
        value /= denom;
    }
    return value;
}

cdouble WhittakerDatum::eval(const LocalFieldElement& a, const LocalFieldElement& d) const {
    if (a.is_zero() || d.is_zero()) throw ZeroDiagonal();
    if (a.valuation() != 0) return {0.0, 0.0};
    return chi.eval(a * d).to_complex();
}

ZetaSeriesResult ramified_zeta_series(const MultiplicativeCharacter& chi, cdouble s, int terms,
                                      ZetaNormalization norm) {
    if (terms < 1) throw DivergentParameters("need at least one term");
    const double q = static_cast<double>(chi.field().residue_cardinality());
    const cdouble s_eff = (norm == ZetaNormalization::shifted) ? s - cdouble{0.5, 0.0} : s;
    const cdouble chi_pi = chi.uniformizer_value().to_complex();
    const cdouble ratio = chi_pi * std::pow(cdouble{q, 0.0}, -s_eff);
    const double r = std::abs(ratio);
    if (r >= 1.0) throw DivergentParameters("series ratio has modulus >= 1");

    cdouble sum{0.0, 0.0}, term{1.0, 0.0};
    for (int n = 0; n < terms; ++n) {
        sum += term;
        term *= ratio;
    }
    const double tail = std::pow(r, terms) / (1.0 - r);
    const cdouble closed = cdouble{1.0, 0.0} / (cdouble{1.0, 0.0} - ratio);
    return ZetaSeriesResult{sum, tail, closed};
}

LocalLFactor ramified_lfactor(const MultiplicativeCharacter& chi) {
    return LocalLFactor{chi.field().residue_cardinality(),
                        {chi.uniformizer_value().to_complex()}};
}

cdouble ramified_epsilon(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi,
                         cdouble s, bool include_gauss) {
    const double p = static_cast<double>(chi.field().p);
    cdouble eps = chi.value_at_minus_one().to_complex() *
                  std::pow(cdouble{p, 0.0}, cdouble{0.5, 0.0} - s);
    if (include_gauss) {
        if (chi.conductor() == 0)
            throw UnramifiedCharacter("epsilon with Gauss factor needs a ramified character");
        eps *= gauss_sum(chi, psi);
    }
    return eps;
}

LocalLFactor spherical_rs_lfactor(const SatakeParams& satake) {
    if (satake.alpha == cdouble{0.0, 0.0} || satake.beta == cdouble{0.0, 0.0})
        throw ZeroArgument("Satake parameters must be nonzero");
    return LocalLFactor{satake.q,
                        {cdouble{1.0, 0.0}, satake.alpha / satake.beta,
                         satake.beta / satake.alpha, cdouble{1.0, 0.0}}};
}

}  // namespace rmtheta
