#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace supel {

/// Outcome of one self-check suite.  checks counts assertions that passed;
/// on failure detail carries the first violation.
struct SuiteResult {
    std::string name;
    bool passed;
    unsigned checks;
    std::string detail;
};

/// Pairing ratios of randomized branch configurations against the constant
/// predicted by the reciprocity identity.
SuiteResult verify_weil(std::uint64_t seed);

/// Relabeling action on trigonal 3-torsion for g <= 6: generator images are
/// symplectic involutions and random words multiply homomorphically.
SuiteResult verify_psi(std::uint64_t seed);

/// Hyperelliptic relabeling action: exhaustive injectivity and surjectivity
/// onto Sp(4, F_2) at g = 2, homomorphism spot checks at g = 2..4.
SuiteResult verify_embedding(std::uint64_t seed);

/// Census total equals the closed-form component count for g = 1..40.
SuiteResult verify_formula();

/// Named suite dispatch; UnknownSuite for anything else.
std::vector<SuiteResult> run_suite(const std::string& name, std::uint64_t seed);

std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

}  // namespace supel
