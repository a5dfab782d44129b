#pragma once

#include <vector>

#include "supel/bigint.hpp"
#include "supel/fp_matrix.hpp"

namespace supel {

/// Standard symplectic form on (Z/pZ)^{2g}: basis ordered e_1..e_g, f_1..f_g
/// with Gram matrix [[0, I], [-I, 0]].
class SymplecticForm {
public:
    SymplecticForm(unsigned g, unsigned p);

    unsigned genus() const { return g_; }
    unsigned modulus() const { return p_; }
    std::size_t dim() const { return 2 * static_cast<std::size_t>(g_); }
    const FpMatrix& matrix() const { return j_; }

private:
    unsigned g_, p_;
    FpMatrix j_;
};

/// m^T J m == J.  DimensionMismatch or ModulusMismatch when m does not
/// match the form.
bool is_symplectic(const FpMatrix& m, const SymplecticForm& form);

/// |Sp(2g, F_p)| = p^{g^2} * prod_{i=1..g} (p^{2i} - 1).
BigCount sp_group_order(unsigned g, unsigned p);

/// Every element of Sp(2g, F_p) by exhaustive scan over all 2g x 2g matrices.
/// Only feasible when p^{4g^2} <= 10^7; TooLarge otherwise.
std::vector<FpMatrix> enumerate_sp(unsigned g, unsigned p);

/// Number of left cosets of subgroup in group.  Both inputs are verified:
/// closure under multiplication and containment.  The count is computed by
/// Lagrange division and cross-checked by explicit coset partitioning.
BigCount left_coset_count(const std::vector<FpMatrix>& subgroup,
                          const std::vector<FpMatrix>& group);

}  // namespace supel
