#include "rmtheta/concordance.hpp"

#include <cmath>
#include <sstream>

namespace rmtheta {

const HeckeRecord* HeckeDataset::find(i64 p) const {
    for (const HeckeRecord& r : records)
        if (r.p == p) return &r;
    return nullptr;
}

namespace {

double numeric_value(const QuadraticInteger& a) {
    return (static_cast<double>(a.u) +
            static_cast<double>(a.v) * std::sqrt(static_cast<double>(a.disc))) / 2.0;
}

}  // namespace

std::vector<i64> HeckeDataset::ramanujan_violations() const {
    std::vector<i64> out;
    for (const HeckeRecord& r : records) {
        if (r.splitting == PrimeSplitting::ramified) continue;
        const double np = (r.splitting == PrimeSplitting::split)
                              ? static_cast<double>(r.p)
                              : static_cast<double>(r.p) * static_cast<double>(r.p);
        for (const QuadraticInteger& a : r.eigenvalues) {
            if (std::abs(numeric_value(a)) > 2.0 * std::sqrt(np) + 1e-9) {
                out.push_back(r.p);
                break;
            }
        }
    }
    return out;
}

EulerFactor automorphic_euler_factor(const HeckeDataset& data, i64 p) {
    const HeckeRecord* r = data.find(p);
    if (r == nullptr) throw MissingPrime("no Hecke record at p = " + std::to_string(p));
    if (r->splitting == PrimeSplitting::ramified)
        throw RamifiedPrimeUnsupported("ramified prime " + std::to_string(p));

    EulerFactor E;
    E.p = p;
    E.c4 = p * p;
    if (r->splitting == PrimeSplitting::inert) {
        if (r->eigenvalues.size() != 1)
            throw NonIntegralProduct("inert prime needs exactly one eigenvalue");
        const QuadraticInteger& a = r->eigenvalues[0];
        if (a.v != 0 || a.u % 2 != 0)
            throw NonIntegralProduct("inert eigenvalue must be a rational integer");
        E.c1 = 0;
        E.c2 = -(a.u / 2);
        E.c3 = 0;
        return E;
    }
    if (r->eigenvalues.size() != 2)
        throw NonIntegralProduct("split prime needs exactly two eigenvalues");
    const QuadraticInteger& a1 = r->eigenvalues[0];
    const QuadraticInteger& a2 = r->eigenvalues[1];
    // a1 + a2 and a1 a2 must be rational integers
    const i64 su = a1.u + a2.u, sv = a1.v + a2.v;
    const i64 cross = a1.u * a2.v + a2.u * a1.v;
    const i64 prod4 = a1.u * a2.u + a1.v * a2.v * a1.disc;
    if (sv != 0 || su % 2 != 0 || cross != 0 || prod4 % 4 != 0)
        throw NonIntegralProduct("split eigenvalues are not conjugate");
    E.c1 = -(su / 2);
    E.c2 = prod4 / 4 + 2 * p;
    E.c3 = p * E.c1;
    return E;
}

MatchReport match(const HyperellipticCurve& curve, const HeckeDataset& data, i64 prime_lo,
                  i64 prime_hi) {
    if (curve.rm_disc && *curve.rm_disc != data.rm_disc)
        throw DiscMismatch("curve declares rm_disc " + std::to_string(*curve.rm_disc) +
                           ", dataset has " + std::to_string(data.rm_disc));
    MatchReport report;
    for (i64 p = prime_lo; p <= prime_hi; ++p) {
        if (!is_prime(p)) continue;
        MatchRecord rec;
        rec.p = p;
        if (p == 2 || !curve.good_reduction(p)) {
            rec.skipped = true;
            rec.skip_reason = "BadReduction";
            report.records.push_back(rec);
            continue;
        }
        const HeckeRecord* hr = data.find(p);
        if (hr == nullptr) {
            rec.skipped = true;
            rec.skip_reason = "MissingPrime";
            report.records.push_back(rec);
            continue;
        }
        if (hr->splitting == PrimeSplitting::ramified) {
            rec.skipped = true;
            rec.skip_reason = "RamifiedPrime";
            report.records.push_back(rec);
            continue;
        }
        rec.curve_factor = euler_factor(curve, p);
        rec.automorphic_factor = automorphic_euler_factor(data, p);
        rec.equal = (*rec.curve_factor == *rec.automorphic_factor);
        if (rec.equal) {
            std::ostringstream os;
            if (hr->splitting == PrimeSplitting::inert) {
                os << "inert a0 = " << hr->eigenvalues[0].u / 2;
            } else {
                os << "split a = (" << hr->eigenvalues[0].u << " + " << hr->eigenvalues[0].v
                   << "*sqrt(" << data.rm_disc << "))/2";
            }
            rec.witness = os.str();
        } else {
            std::ostringstream os;
            os << "c1/c2 mismatch: curve (" << rec.curve_factor->c1 << ", "
               << rec.curve_factor->c2 << ") vs automorphic (" << rec.automorphic_factor->c1
               << ", " << rec.automorphic_factor->c2 << ")";
            rec.witness = os.str();
        }
        report.records.push_back(rec);
    }
    return report;
}

i64 MatchReport::num_equal() const {
    i64 n = 0;
    for (const auto& r : records)
        if (!r.skipped && r.equal) ++n;
    return n;
}

i64 MatchReport::num_unequal() const {
    i64 n = 0;
    for (const auto& r : records)
        if (!r.skipped && !r.equal) ++n;
    return n;
}

HeckeDataset dataset_from_curve(const HyperellipticCurve& curve, i64 disc, i64 prime_lo,
                                i64 prime_hi) {
    HeckeDataset data;
    data.rm_disc = disc;
    for (i64 p = prime_lo; p <= prime_hi; ++p) {
        if (!is_prime(p) || p == 2 || !curve.good_reduction(p)) continue;
        RMSplitWitness w = rm_split_check(euler_factor(curve, p), disc);
        if (w.kind == RMSplitWitness::Kind::none) continue;
        HeckeRecord rec;
        rec.p = p;
        if (w.kind == RMSplitWitness::Kind::inert) {
            rec.splitting = PrimeSplitting::inert;
            rec.eigenvalues = {QuadraticInteger{2 * w.a0, 0, disc}};
        } else {
            rec.splitting = PrimeSplitting::split;
            rec.eigenvalues = {w.a, w.a_conj};
        }
        data.records.push_back(rec);
    }
    return data;
}

double spherical_consistency(const HeckeDataset& data, i64 p, cdouble s) {
    const HeckeRecord* r = data.find(p);
    if (r == nullptr) throw MissingPrime("no Hecke record at p = " + std::to_string(p));
    if (r->splitting != PrimeSplitting::split)
        throw SatakeUnsolvable("spherical consistency needs an unramified split prime");
    const double ap = numeric_value(r->eigenvalues[0]);
    SatakeParams sat = SatakeParams::from_eigenvalue(p, ap);
    const cdouble via_factor = spherical_rs_lfactor(sat).eval(s);
    const cdouble qs = std::pow(cdouble(static_cast<double>(p), 0.0), -s);
    const cdouble ab = sat.alpha / sat.beta;
    cdouble direct = 1.0 / ((1.0 - qs) * (1.0 - ab * qs) * (1.0 - qs / ab) * (1.0 - qs));
    return std::abs(via_factor - direct);
}

}  // namespace rmtheta
