#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "supel/level2.hpp"
#include "supel/rng.hpp"
#include "test_util.hpp"

using namespace supel;
using testutil::kind_of;

namespace {

Perm random_perm(SplitMix64& rng, unsigned n) {
    std::vector<std::uint32_t> images(n);
    std::iota(images.begin(), images.end(), 0u);
    for (unsigned i = n - 1; i > 0; --i) {
        std::swap(images[i], images[rng.below(i + 1)]);
    }
    return Perm::from_images(images);
}

}  // namespace

TEST_CASE("basis classes in reduced coordinates") {
    const HyperellipticBasis basis = build_basis(1);
    REQUIRE(basis.a.size() == 1);
    REQUIRE(basis.b.size() == 1);
    // a_1 = D_1 + D_2; b_1 = D_2 + D_3 which reduces to D_1.
    CHECK(basis.a[0].coeffs() == std::vector<std::uint8_t>{1, 1, 0});
    CHECK(basis.b[0].coeffs() == std::vector<std::uint8_t>{1, 0, 0});

    const HyperellipticBasis g2 = build_basis(2);
    CHECK(g2.a[0].coeffs() == std::vector<std::uint8_t>{1, 1, 0, 0, 0});
    CHECK(g2.a[1].coeffs() == std::vector<std::uint8_t>{0, 0, 1, 1, 0});
    CHECK(g2.b[0].coeffs() == std::vector<std::uint8_t>{1, 0, 0, 0, 0});
    CHECK(g2.b[1].coeffs() == std::vector<std::uint8_t>{1, 1, 1, 0, 0});

    CHECK(kind_of([] { build_basis(0); }) == ErrorKind::Precondition);
}

TEST_CASE("pairing Gram matrix is the standard symplectic form") {
    // e(a_1, b_1) = 1 in the smallest case.
    const HyperellipticBasis basis = build_basis(1);
    CHECK(pairing_exponent(basis.a[0], basis.b[0]).value() == 1);

    for (unsigned g = 1; g <= 10; ++g) {
        const FpMatrix gram = gram_matrix(build_basis(g));
        CHECK(gram == SymplecticForm(g, 2).matrix());
    }
}

TEST_CASE("relabeling matrices: identity, involutions, symplectic membership") {
    const Perm id(6);
    CHECK(embed_symmetric_group(2, id) == FpMatrix::identity(4, 2));

    // Exchanging the first two branch points swaps D_1 and D_2.
    const FpMatrix swap01 = embed_symmetric_group(2, Perm::transposition(6, 0, 1));
    CHECK(swap01 != FpMatrix::identity(4, 2));
    CHECK(swap01 * swap01 == FpMatrix::identity(4, 2));
    CHECK(is_symplectic(swap01, SymplecticForm(2, 2)));

    SplitMix64 rng(31);
    for (unsigned g = 2; g <= 4; ++g) {
        const SymplecticForm form(g, 2);
        for (int trial = 0; trial < 10; ++trial) {
            const FpMatrix image = embed_symmetric_group(g, random_perm(rng, 2 * g + 2));
            CHECK(is_symplectic(image, form));
        }
    }
}

TEST_CASE("relabeling is a homomorphism") {
    SplitMix64 rng(32);
    for (unsigned g = 2; g <= 3; ++g) {
        for (int trial = 0; trial < 8; ++trial) {
            const Perm s = random_perm(rng, 2 * g + 2);
            const Perm t = random_perm(rng, 2 * g + 2);
            CHECK(embed_symmetric_group(g, s) * embed_symmetric_group(g, t) ==
                  embed_symmetric_group(g, s * t));
        }
    }
}

TEST_CASE("relabeling rejects out-of-domain input") {
    CHECK(kind_of([] { embed_symmetric_group(1, Perm(4)); }) == ErrorKind::DomainWarning);
    CHECK(kind_of([] { embed_symmetric_group(2, Perm(5)); }) ==
          ErrorKind::DimensionMismatch);
}

TEST_CASE("hyperelliptic component counts") {
    CHECK(hyp_component_count(2) == BigCount(1));
    CHECK(hyp_component_count(3) == BigCount(36));
    CHECK(kind_of([] { hyp_component_count(1); }) == ErrorKind::DomainWarning);

    // |Sp(2g, F_2)| is divisible by (2g+2)! throughout the working range.
    for (unsigned g = 2; g <= 20; ++g) {
        const BigCount count = hyp_component_count(g);
        CHECK(BigCount(0) < count);
        CHECK(count * BigCount::factorial(2 * g + 2) == sp_group_order(g, 2));
    }
}
