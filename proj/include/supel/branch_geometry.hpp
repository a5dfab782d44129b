#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supel/bigint.hpp"
#include "supel/permutation.hpp"

namespace supel {

/// Multiplicity vector of a branch divisor: counts[k-1] points carry exponent
/// k, for k = 1..p-1.  Instances are always the canonical orbit
/// representative: the entry for exponent 1 is maximal, with residue-scaling
/// ties resolved toward the lexicographically greatest tuple.
class MultiplicityVector {
public:
    MultiplicityVector(std::vector<unsigned> counts, unsigned p);

    unsigned p() const { return p_; }
    const std::vector<unsigned>& counts() const { return counts_; }
    unsigned count_for_exponent(unsigned k) const { return counts_[k - 1]; }

    /// Total number of branch points.
    unsigned total() const;

    /// Order of the subgroup of residues fixing this vector under index
    /// scaling; greater than 1 exactly for the flagged census entries.
    unsigned stabilizer_order() const;
    bool stabilizer_nontrivial() const { return stabilizer_order() > 1; }

    std::string str() const;

    bool operator==(const MultiplicityVector& o) const {
        return p_ == o.p_ && counts_ == o.counts_;
    }
    bool operator!=(const MultiplicityVector& o) const { return !(*this == o); }

private:
    std::vector<unsigned> counts_;
    unsigned p_;
};

/// Canonical representative of raw under the residue-scaling action
/// (m_1,...,m_{p-1}) -> (m_{z*1}, ..., m_{z*(p-1)}), indices mod p.
MultiplicityVector normalize_multiplicity_vector(const std::vector<unsigned>& raw, unsigned p);

/// Number of branch points of a degree-p totally ramified cover of genus g:
/// 2g/(p-1) + 2 when integral, otherwise no such curve exists.
std::optional<unsigned> ramification_count(unsigned g, unsigned p);

/// Branch data of an affine model s^p = prod (t - a_i)^{k_i}: the finite
/// branch points with their exponents, plus the exponent kappa at infinity.
/// Exponent sum including kappa is divisible by p.
class BranchConfiguration {
public:
    BranchConfiguration(std::vector<Rational> points, std::vector<unsigned> exponents,
                        unsigned kappa, unsigned p);

    unsigned p() const { return p_; }
    unsigned kappa() const { return kappa_; }
    const std::vector<Rational>& points() const { return points_; }
    const std::vector<unsigned>& exponents() const { return exponents_; }

    std::size_t finite_count() const { return points_.size(); }
    /// Finite branch points plus infinity when branched there.
    unsigned total_branch_count() const {
        return static_cast<unsigned>(points_.size()) + (kappa_ != 0 ? 1 : 0);
    }

    std::string to_json() const;
    static BranchConfiguration from_json(const std::string& text);

private:
    std::vector<Rational> points_;
    std::vector<unsigned> exponents_;
    unsigned kappa_;
    unsigned p_;
};

/// Configuration on the given support realizing the multiplicity vector:
/// points are assigned exponent 1 first, then exponent 2, block by block,
/// with kappa the unique residue completing the divisibility.
BranchConfiguration affine_model(const std::vector<Rational>& points,
                                 const MultiplicityVector& m);

/// Genus of the cover: (p-1)(m-2)/2 with m the total branch count.
unsigned genus_of(const BranchConfiguration& config);

/// Local monodromy: one cyclic sheet shift per branch point.
class MonodromyDatum {
public:
    explicit MonodromyDatum(std::vector<Perm> cycles) : cycles_(std::move(cycles)) {}

    const std::vector<Perm>& cycles() const { return cycles_; }

    /// Product of all cycles in list order; the identity for consistent data.
    Perm composite() const;

private:
    std::vector<Perm> cycles_;
};

/// Sheet permutations of the cover: n -> n + k_i mod p at each finite point,
/// and n -> n + kappa at infinity when branched there.
MonodromyDatum monodromy_cycles(const BranchConfiguration& config);

}  // namespace supel
