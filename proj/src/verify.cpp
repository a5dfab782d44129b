#include "supel/verify.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "supel/branch_geometry.hpp"
#include "supel/divisor_lattice.hpp"
#include "supel/error.hpp"
#include "supel/level2.hpp"
#include "supel/level3.hpp"
#include "supel/rng.hpp"
#include "supel/symplectic.hpp"

namespace supel {

namespace {

void fail(const std::string& what) {
    throw Error(ErrorKind::VerificationFailed, what);
}

Rational random_point(SplitMix64& rng) {
    std::int64_t num = 0;
    while (num == 0) {
        num = rng.range(-9, 9);
    }
    return Rational(num, rng.range(1, 4));
}

std::vector<Rational> distinct_points(SplitMix64& rng, unsigned count) {
    std::vector<Rational> pts;
    while (pts.size() < count) {
        const Rational cand = random_point(rng);
        bool fresh = true;
        for (const Rational& seen : pts) {
            fresh = fresh && !(seen == cand);
        }
        if (fresh) {
            pts.push_back(cand);
        }
    }
    return pts;
}

Perm random_perm(SplitMix64& rng, unsigned n) {
    std::vector<std::uint32_t> images(n);
    std::iota(images.begin(), images.end(), 0u);
    for (unsigned i = n - 1; i > 0; --i) {
        std::swap(images[i], images[rng.below(i + 1)]);
    }
    return Perm::from_images(images);
}

}  // namespace

SuiteResult verify_weil(std::uint64_t seed) {
    SuiteResult result{"weil", true, 0, ""};
    SplitMix64 rng(seed);
    try {
        std::string summary;
        for (unsigned p : {2u, 3u}) {
            const Rational expected = p == 2 ? Rational(-1) : Rational(1);
            unsigned hits = 0;
            const unsigned trials = 100;
            for (unsigned trial = 0; trial < trials; ++trial) {
                unsigned finite = 0;
                std::vector<unsigned> exponents;
                if (p == 2) {
                    finite = 3 + 2 * static_cast<unsigned>(rng.below(2));
                    exponents.assign(finite, 1);
                } else {
                    finite = 3 + static_cast<unsigned>(rng.below(4));
                    // Resample until infinity carries exponent exactly 1.
                    unsigned sum;
                    do {
                        exponents.clear();
                        sum = 0;
                        for (unsigned i = 0; i < finite; ++i) {
                            exponents.push_back(1 + static_cast<unsigned>(rng.below(2)));
                            sum += exponents.back();
                        }
                    } while ((sum + 1) % 3 != 0);
                }
                const BranchConfiguration config(distinct_points(rng, finite), exponents, 1, p);
                const std::size_t i = rng.below(finite);
                std::size_t j = i;
                while (j == i) {
                    j = rng.below(finite);
                }
                if (!(weil_ratio_ramified(config, i, j) == expected)) {
                    fail("pairing ratio mismatch for " + config.to_json());
                }
                ++hits;
                ++result.checks;
            }
            if (!summary.empty()) {
                summary += "; ";
            }
            summary += "p=" + std::to_string(p) + ": " + std::to_string(hits) + "/" +
                       std::to_string(trials) + " ratios = " + expected.str();
        }
        result.detail = summary;
    } catch (const Error& e) {
        result.passed = false;
        result.detail = e.what();
    }
    return result;
}

SuiteResult verify_psi(std::uint64_t seed) {
    SuiteResult result{"psi", true, 0, ""};
    SplitMix64 rng(seed);
    try {
        for (unsigned g = 1; g <= 6; ++g) {
            const SymplecticForm form(g, 3);
            const FpMatrix id = FpMatrix::identity(2 * g, 3);
            for (const MultiplicityVector& m : trigonal_indexing_set(g)) {
                const AutGroup aut = aut_group(m);
                std::vector<FpMatrix> images;
                for (const Perm& gen : aut.generators) {
                    const PsiImage img = psi_generator_image(m, gen);
                    if (!is_symplectic(img.full, form)) {
                        fail("generator image not symplectic for " + m.str());
                    }
                    ++result.checks;
                    // Every generator squares to the identity permutation.
                    if (img.full * img.full != id) {
                        fail("generator image not an involution for " + m.str());
                    }
                    ++result.checks;
                    images.push_back(img.full);
                }
                for (unsigned word = 0; word < 8; ++word) {
                    const unsigned length = 1 + static_cast<unsigned>(rng.below(4));
                    Perm sigma(m.total());
                    FpMatrix prod = id;
                    for (unsigned step = 0; step < length; ++step) {
                        const std::size_t pick = rng.below(aut.generators.size());
                        sigma = aut.generators[pick] * sigma;
                        prod = images[pick] * prod;
                    }
                    if (psi_generator_image(m, sigma).full != prod) {
                        fail("word image is not the product of generator images for " + m.str());
                    }
                    ++result.checks;
                }
            }
        }
        result.detail = std::to_string(result.checks) + " image checks across g=1..6";
    } catch (const Error& e) {
        result.passed = false;
        result.detail = e.what();
    }
    return result;
}

SuiteResult verify_embedding(std::uint64_t seed) {
    SuiteResult result{"embedding", true, 0, ""};
    SplitMix64 rng(seed);
    try {
        // Exhaustive pass over S_6: distinct images that exhaust Sp(4, F_2).
        std::vector<std::uint32_t> images(6);
        std::iota(images.begin(), images.end(), 0u);
        std::unordered_set<FpMatrix, FpMatrix::Hash> image_set;
        do {
            if (!image_set.insert(embed_symmetric_group(2, Perm::from_images(images))).second) {
                fail("embedding is not injective on S_6");
            }
            ++result.checks;
        } while (std::next_permutation(images.begin(), images.end()));
        const std::vector<FpMatrix> group = enumerate_sp(2, 2);
        if (group.size() != image_set.size()) {
            fail("image of S_6 has the wrong size");
        }
        for (const FpMatrix& mat : group) {
            if (image_set.find(mat) == image_set.end()) {
                fail("symplectic matrix missed by the S_6 embedding");
            }
        }
        ++result.checks;

        for (unsigned g = 2; g <= 4; ++g) {
            for (unsigned trial = 0; trial < 6; ++trial) {
                const Perm s = random_perm(rng, 2 * g + 2);
                const Perm t = random_perm(rng, 2 * g + 2);
                const FpMatrix lhs = embed_symmetric_group(g, s) * embed_symmetric_group(g, t);
                if (lhs != embed_symmetric_group(g, s * t)) {
                    fail("embedding is not a homomorphism at genus " + std::to_string(g));
                }
                ++result.checks;
            }
        }
        result.detail = "S_6 exhausts Sp(4, F_2); " + std::to_string(result.checks) +
                        " checks total";
    } catch (const Error& e) {
        result.passed = false;
        result.detail = e.what();
    }
    return result;
}

SuiteResult verify_formula() {
    SuiteResult result{"formula", true, 0, ""};
    try {
        for (unsigned g = 1; g <= 40; ++g) {
            if (census_sum(g) != component_count_formula(g)) {
                fail("census total disagrees with the closed form at genus " +
                     std::to_string(g));
            }
            ++result.checks;
        }
        result.detail = "g=1..40: " + std::to_string(result.checks) + "/40 identities hold";
    } catch (const Error& e) {
        result.passed = false;
        result.detail = e.what();
    }
    return result;
}

std::vector<SuiteResult> run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "weil") return {verify_weil(seed)};
    if (name == "psi") return {verify_psi(seed)};
    if (name == "embedding") return {verify_embedding(seed)};
    if (name == "formula") return {verify_formula()};
    if (name == "all") return run_all_suites(seed);
    throw Error(ErrorKind::UnknownSuite, "no suite named '" + name + "'");
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed) {
    return {verify_weil(seed), verify_psi(seed), verify_embedding(seed), verify_formula()};
}

}  // namespace supel
