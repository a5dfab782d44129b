#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "supel/branch_geometry.hpp"
#include "supel/rng.hpp"
#include "test_util.hpp"

using namespace supel;
using testutil::kind_of;

namespace {

std::vector<Rational> ints(std::initializer_list<int> vals) {
    std::vector<Rational> out;
    for (int v : vals) {
        out.emplace_back(v);
    }
    return out;
}

// Random configuration with consistent exponents; points may be anywhere.
BranchConfiguration random_config(SplitMix64& rng, unsigned p) {
    const unsigned finite = 3 + static_cast<unsigned>(rng.below(5));
    std::vector<unsigned> exponents;
    unsigned sum = 0;
    for (unsigned i = 0; i < finite; ++i) {
        exponents.push_back(1 + static_cast<unsigned>(rng.below(p - 1)));
        sum += exponents.back();
    }
    const unsigned kappa = (p - sum % p) % p;

    std::vector<Rational> points;
    while (points.size() < finite) {
        const Rational cand(rng.range(-50, 50), rng.range(1, 6));
        bool fresh = true;
        for (const Rational& seen : points) {
            fresh = fresh && !(seen == cand);
        }
        if (fresh) {
            points.push_back(cand);
        }
    }
    return BranchConfiguration(points, exponents, kappa, p);
}

}  // namespace

TEST_CASE("multiplicity vectors normalize to the scaling-orbit representative") {
    // Scaling by z = 2 swaps the two exponent classes for p = 3.
    CHECK(normalize_multiplicity_vector({1, 4}, 3) == MultiplicityVector({4, 1}, 3));
    CHECK(normalize_multiplicity_vector({0, 3}, 3) == MultiplicityVector({3, 0}, 3));
    CHECK(normalize_multiplicity_vector({3, 3}, 3) == MultiplicityVector({3, 3}, 3));
    CHECK(kind_of([] { MultiplicityVector({2, 1}, 3); }) == ErrorKind::InvalidVector);
    CHECK(kind_of([] { normalize_multiplicity_vector({2, 1}, 3); }) ==
          ErrorKind::InvalidVector);
    CHECK(kind_of([] { MultiplicityVector({1, 3, 2}, 3); }) == ErrorKind::InvalidVector);

    SUBCASE("idempotence and orbit invariance over p = 5") {
        SplitMix64 rng(11);
        unsigned built = 0;
        while (built < 50) {
            std::vector<unsigned> raw(4);
            unsigned weighted = 0;
            for (unsigned k = 1; k <= 4; ++k) {
                raw[k - 1] = static_cast<unsigned>(rng.below(5));
                weighted += k * raw[k - 1];
            }
            if (weighted % 5 != 0 || raw[0] + raw[1] + raw[2] + raw[3] == 0) {
                continue;
            }
            ++built;
            const MultiplicityVector canon = normalize_multiplicity_vector(raw, 5);
            CHECK(normalize_multiplicity_vector(canon.counts(), 5) == canon);
            for (unsigned z = 1; z < 5; ++z) {
                std::vector<unsigned> scaled(4);
                for (unsigned k = 1; k <= 4; ++k) {
                    scaled[z * k % 5 - 1] = raw[k - 1];
                }
                CHECK(normalize_multiplicity_vector(scaled, 5) == canon);
            }
        }
    }
}

TEST_CASE("multiplicity vector accessors and stabilizer") {
    const MultiplicityVector m(std::vector<unsigned>{3, 0}, 3);
    CHECK(m.p() == 3);
    CHECK(m.total() == 3);
    CHECK(m.count_for_exponent(1) == 3);
    CHECK(m.count_for_exponent(2) == 0);
    CHECK(m.str() == "(3,0)");
    CHECK(m.stabilizer_order() == 1);
    CHECK_FALSE(m.stabilizer_nontrivial());

    const MultiplicityVector sym(std::vector<unsigned>{3, 3}, 3);
    CHECK(sym.stabilizer_order() == 2);
    CHECK(sym.stabilizer_nontrivial());
}

TEST_CASE("branch point counts per genus") {
    CHECK(ramification_count(4, 3) == 6u);
    CHECK(ramification_count(2, 2) == 6u);
    CHECK(ramification_count(1, 5) == std::nullopt);
    CHECK(kind_of([] { ramification_count(0, 3); }) == ErrorKind::Precondition);
}

TEST_CASE("configuration validation") {
    CHECK_NOTHROW(BranchConfiguration(ints({0, 1, 2}), {1, 1, 1}, 0, 3));
    CHECK(kind_of([] { BranchConfiguration(ints({0, 1}), {1, 1}, 0, 3); }) ==
          ErrorKind::InvalidVector);
    CHECK(kind_of([] { BranchConfiguration(ints({0, 1, 1}), {1, 1, 1}, 0, 3); }) ==
          ErrorKind::DuplicatePoints);
    CHECK(kind_of([] { BranchConfiguration(ints({0, 1, 2}), {1, 3, 1}, 1, 3); }) ==
          ErrorKind::InvalidVector);
    CHECK(kind_of([] { BranchConfiguration(ints({0, 1, 2}), {1, 0, 1}, 1, 3); }) ==
          ErrorKind::InvalidVector);
    CHECK(kind_of([] { BranchConfiguration(ints({0, 1, 2}), {1, 1, 1}, 3, 3); }) ==
          ErrorKind::InvalidVector);
    CHECK(kind_of([] { BranchConfiguration(ints({0, 1}), {1, 1, 1}, 0, 3); }) ==
          ErrorKind::InvalidVector);
    CHECK(kind_of([] { BranchConfiguration({}, {}, 0, 3); }) == ErrorKind::InvalidVector);
}

TEST_CASE("configurations round-trip through JSON") {
    const BranchConfiguration config({Rational(1, 2), Rational(-3), Rational(5, 7)},
                                     {1, 2, 2}, 1, 3);
    const BranchConfiguration back = BranchConfiguration::from_json(config.to_json());
    CHECK(back.p() == 3);
    CHECK(back.kappa() == 1);
    CHECK(back.exponents() == std::vector<unsigned>{1, 2, 2});
    REQUIRE(back.points().size() == 3);
    CHECK(back.points()[0] == Rational(1, 2));
    CHECK(back.points()[1] == Rational(-3));
    CHECK(back.points()[2] == Rational(5, 7));
}

TEST_CASE("affine models assign exponents block by block") {
    const BranchConfiguration a =
        affine_model(ints({0, 1, 2}), MultiplicityVector(std::vector<unsigned>{3, 0}, 3));
    CHECK(a.exponents() == std::vector<unsigned>{1, 1, 1});
    CHECK(a.kappa() == 0);

    const BranchConfiguration b = affine_model(
        ints({1, 2, 3, 4}), MultiplicityVector(std::vector<unsigned>{2, 2}, 3));
    CHECK(b.exponents() == std::vector<unsigned>{1, 1, 2, 2});
    CHECK(b.kappa() == 0);

    const BranchConfiguration c = affine_model(
        ints({1, 2, 3, 4, 5}), MultiplicityVector(std::vector<unsigned>{4, 1}, 3));
    CHECK(c.exponents() == std::vector<unsigned>{1, 1, 1, 1, 2});
    CHECK(c.kappa() == 0);
}

TEST_CASE("genus from branch count") {
    const BranchConfiguration six_pts_p3 = affine_model(
        ints({1, 2, 3, 4, 5, 6}), MultiplicityVector(std::vector<unsigned>{6, 0}, 3));
    CHECK(six_pts_p3.total_branch_count() == 6);
    CHECK(genus_of(six_pts_p3) == 4);

    const BranchConfiguration six_pts_p2 =
        BranchConfiguration(ints({1, 2, 3, 4, 5, 6}), {1, 1, 1, 1, 1, 1}, 0, 2);
    CHECK(genus_of(six_pts_p2) == 2);

    const BranchConfiguration three_pts =
        affine_model(ints({0, 1, 2}), MultiplicityVector(std::vector<unsigned>{3, 0}, 3));
    CHECK(genus_of(three_pts) == 1);
}

TEST_CASE("monodromy cycles compose to the identity") {
    // Five finite points with k = 1 plus kappa = 1 at infinity: six shifts by 1.
    const BranchConfiguration a(ints({1, 2, 3, 4, 5}), {1, 1, 1, 1, 1}, 1, 3);
    const MonodromyDatum da = monodromy_cycles(a);
    CHECK(da.cycles().size() == 6);
    CHECK(da.composite().is_identity());

    const BranchConfiguration b(ints({1, 2}), {1, 2}, 0, 3);
    const MonodromyDatum db = monodromy_cycles(b);
    CHECK(db.cycles().size() == 2);
    CHECK(db.composite().is_identity());

    const BranchConfiguration c(ints({1, 2, 3, 4}), {1, 1, 1, 1}, 0, 2);
    CHECK(monodromy_cycles(c).composite().is_identity());

    SUBCASE("each cycle moves every sheet when its exponent is nonzero") {
        for (const Perm& cycle : da.cycles()) {
            for (std::size_t x = 0; x < cycle.size(); ++x) {
                CHECK(cycle(x) != x);
            }
        }
    }

    SUBCASE("randomized configurations across p = 2, 3, 5") {
        SplitMix64 rng(77);
        for (unsigned trial = 0; trial < 200; ++trial) {
            const unsigned p = trial % 3 == 0 ? 2 : (trial % 3 == 1 ? 3 : 5);
            CHECK(monodromy_cycles(random_config(rng, p)).composite().is_identity());
        }
    }
}
