#pragma once

#include <vector>

#include "supel/bigint.hpp"
#include "supel/branch_geometry.hpp"
#include "supel/fp_matrix.hpp"
#include "supel/permutation.hpp"

namespace supel {

/// Multiplicity vectors (m_1, m_2) with m_1 + m_2 = g + 2 and
/// m_1 + 2*m_2 divisible by 3, in canonical form, ordered by ascending m_2.
/// Each one indexes a component family of the trigonal level-3 space.
std::vector<MultiplicityVector> trigonal_indexing_set(unsigned g);

/// Subgroup of S_m preserving the exponent assignment of a multiplicity
/// vector: permutations of each exponent block, plus the block swap when the
/// blocks have equal size (swapping exponents 1 and 2 scales by a residue).
struct AutGroup {
    unsigned m1;
    unsigned m2;
    bool has_block_swap;
    std::vector<Perm> generators;
    BigCount order;
};

AutGroup aut_group(const MultiplicityVector& m);

/// Membership test against the block structure, without enumeration.
bool aut_contains(const AutGroup& aut, const Perm& sigma);

/// Image of a relabeling permutation on the 3-torsion of the trigonal curve:
/// the action on difference classes D_j -> D_{sigma(j)} - D_{sigma(m-1)} in
/// normal-form coordinates, extended to the full symplectic matrix as
/// blockdiag(A, (A^T)^{-1}).
struct PsiImage {
    FpMatrix delta_block;
    FpMatrix full;
};

PsiImage psi_generator_image(const MultiplicityVector& m, const Perm& sigma);

/// Unipotent part of the deck transformation on 3-torsion: [[I, I], [0, I]].
FpMatrix deck_transvection(unsigned g);

/// Monodromy subgroup of Sp(2g, F_3) attached to a multiplicity vector:
/// closure of the relabeling images, together with the deck transvection for
/// m = 3 where relabelings alone act through scalars.  Checks that the
/// result has exactly |Aut| elements.
std::vector<FpMatrix> psi_subgroup(const MultiplicityVector& m);

/// Number of connected components of the genus-g trigonal level-3 moduli
/// space, by the closed-form expression.
BigCount component_count_formula(unsigned g);

/// Same count as the sum of |Sp(2g, F_3)| / |Aut(m)| over the indexing set.
BigCount census_sum(unsigned g);

struct CensusRow {
    MultiplicityVector m;
    BigCount aut_order;
    BigCount components;
    bool flagged;  // nontrivial residue-scaling stabilizer
};

struct CensusReport {
    unsigned g;
    std::vector<CensusRow> rows;
    BigCount total;
    BigCount formula_total;
    bool matches;
};

CensusReport census_report(unsigned g);

}  // namespace supel
