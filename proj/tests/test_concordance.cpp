#include <doctest.h>

#include <cmath>

#include "rmtheta/concordance.hpp"

using namespace rmtheta;

namespace {

HyperellipticCurve rm_curve() {
    return HyperellipticCurve::make({1, 0, 0, 0, 0, 1}, 5, "x^5+1");
}

}  // namespace

TEST_CASE("automorphic euler factor worked examples") {
    HeckeDataset data;
    data.rm_disc = 5;
    data.records.push_back(
        {11, PrimeSplitting::split, {{1, 1, 5}, {1, -1, 5}}});
    data.records.push_back({3, PrimeSplitting::inert, {{4, 0, 5}}});
    data.records.push_back({5, PrimeSplitting::ramified, {}});

    // trace 1, norm (1 - 5)/4 = -1: c2 = -1 + 22 = 21
    EulerFactor split = automorphic_euler_factor(data, 11);
    CHECK(split == EulerFactor{11, -1, 21, -11, 121});

    // inert a0 = 2: 1 - 2 T^2 + 9 T^4
    EulerFactor inert = automorphic_euler_factor(data, 3);
    CHECK(inert == EulerFactor{3, 0, -2, 0, 9});

    CHECK_THROWS_AS((void)automorphic_euler_factor(data, 7), MissingPrime);
    CHECK_THROWS_AS((void)automorphic_euler_factor(data, 5), RamifiedPrimeUnsupported);

    HeckeDataset bad;
    bad.rm_disc = 5;
    bad.records.push_back({11, PrimeSplitting::split, {{1, 1, 5}, {1, 1, 5}}});
    CHECK_THROWS_AS((void)automorphic_euler_factor(bad, 11), NonIntegralProduct);

    HeckeDataset bad_inert;
    bad_inert.rm_disc = 5;
    bad_inert.records.push_back({3, PrimeSplitting::inert, {{3, 0, 5}}});
    CHECK_THROWS_AS((void)automorphic_euler_factor(bad_inert, 3), NonIntegralProduct);
}

TEST_CASE("ramanujan sanity flags out-of-range eigenvalues") {
    HeckeDataset data;
    data.rm_disc = 5;
    data.records.push_back({3, PrimeSplitting::inert, {{4, 0, 5}}});
    data.records.push_back({7, PrimeSplitting::inert, {{200, 0, 5}}});
    std::vector<i64> bad = data.ramanujan_violations();
    REQUIRE(bad.size() == 1);
    CHECK(bad[0] == 7);
}

TEST_CASE("round trip: curve-derived dataset matches the curve everywhere") {
    HyperellipticCurve C = rm_curve();
    HeckeDataset data = dataset_from_curve(C, 5, 3, 60);
    CHECK(data.records.size() >= 10);
    CHECK(data.ramanujan_violations().empty());

    MatchReport rep = match(C, data, 3, 60);
    CHECK(rep.num_unequal() == 0);
    CHECK(rep.num_equal() >= 10);
    for (const MatchRecord& r : rep.records) {
        if (r.skipped) {
            CHECK((r.skip_reason == "BadReduction" || r.skip_reason == "MissingPrime" ||
                   r.skip_reason == "RamifiedPrime"));
        } else {
            CHECK(r.equal);
            CHECK(!r.witness.empty());
        }
    }
}

TEST_CASE("a single perturbed eigenvalue is detected") {
    HyperellipticCurve C = rm_curve();
    HeckeDataset data = dataset_from_curve(C, 5, 3, 60);
    REQUIRE(!data.records.empty());
    HeckeRecord& victim = data.records[2];
    victim.eigenvalues[0].u += 4;
    if (victim.splitting == PrimeSplitting::split) victim.eigenvalues[1].u += 4;

    MatchReport rep = match(C, data, 3, 60);
    CHECK(rep.num_unequal() == 1);
    for (const MatchRecord& r : rep.records) {
        if (!r.skipped && !r.equal) {
            CHECK(r.p == victim.p);
            CHECK(r.witness.find("mismatch") != std::string::npos);
        }
    }
}

TEST_CASE("disc mismatch and empty ranges") {
    HyperellipticCurve C = rm_curve();
    HeckeDataset wrong;
    wrong.rm_disc = 13;
    CHECK_THROWS_AS((void)match(C, wrong, 3, 10), DiscMismatch);

    HeckeDataset data = dataset_from_curve(C, 5, 3, 60);
    MatchReport empty = match(C, data, 24, 28);  // no primes in range
    CHECK(empty.records.empty());
}

TEST_CASE("spherical consistency at a split prime") {
    HeckeDataset data;
    data.rm_disc = 5;
    // a_p = 0 forces alpha = i
    data.records.push_back({13, PrimeSplitting::split, {{0, 0, 5}, {0, 0, 5}}});
    CHECK(spherical_consistency(data, 13, {1.5, 0.0}) <= 1e-12);
    CHECK(spherical_consistency(data, 13, {2.0, 0.7}) <= 1e-12);
    CHECK_THROWS_AS((void)spherical_consistency(data, 7, {2.0, 0.0}), MissingPrime);

    data.records.push_back({3, PrimeSplitting::inert, {{4, 0, 5}}});
    CHECK_THROWS_AS((void)spherical_consistency(data, 3, {2.0, 0.0}), SatakeUnsolvable);
}
