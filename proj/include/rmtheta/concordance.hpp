#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rmtheta/curves.hpp"
#include "rmtheta/local_zeta.hpp"

namespace rmtheta {

enum class PrimeSplitting { split, inert, ramified };

struct HeckeRecord {
    i64 p;
    PrimeSplitting splitting;
    std::vector<QuadraticInteger> eigenvalues;  // two for split, one for inert
};

// Ingested Hecke-eigenvalue data for a parallel-weight-2 Hilbert newform
// over Q(sqrt(rm_disc)). Eigenvalues are exact quadratic integers.
struct HeckeDataset {
    i64 rm_disc;
    std::vector<HeckeRecord> records;

    const HeckeRecord* find(i64 p) const;
    // non-fatal Ramanujan sanity check |a_p| <= 2 sqrt(Np)
    std::vector<i64> ramanujan_violations() const;
};

// Degree-4 factor from the GL_2 data: split p gives
// (1 - aT + pT^2)(1 - a'T + pT^2), inert p gives 1 - a0 T^2 + p^2 T^4.
EulerFactor automorphic_euler_factor(const HeckeDataset& data, i64 p);

struct MatchRecord {
    i64 p;
    bool skipped = false;
    std::string skip_reason;
    std::optional<EulerFactor> curve_factor;
    std::optional<EulerFactor> automorphic_factor;
    bool equal = false;
    std::string witness;
};

struct MatchReport {
    std::vector<MatchRecord> records;

    i64 num_equal() const;
    i64 num_unequal() const;
};

MatchReport match(const HyperellipticCurve& curve, const HeckeDataset& data, i64 prime_lo,
                  i64 prime_hi);

// Builds the dataset the curve itself implies via rm_split_check; primes
// without a witness are omitted.
HeckeDataset dataset_from_curve(const HyperellipticCurve& curve, i64 disc, i64 prime_lo,
                                i64 prime_hi);

// |spherical_rs_lfactor at s  -  direct four-term product|.
double spherical_consistency(const HeckeDataset& data, i64 p, cdouble s);

}  // namespace rmtheta
