#pragma once

#include <vector>

#include "supel/divisor_lattice.hpp"
#include "supel/fp_matrix.hpp"
#include "supel/permutation.hpp"
#include "supel/symplectic.hpp"

namespace supel {

/// Symplectic basis of the 2-torsion of a hyperelliptic curve of genus g,
/// assembled from differences of the 2g+2 branch points.  Classes are kept
/// in normal-form coordinates over the first 2g differences.
struct HyperellipticBasis {
    unsigned g;
    std::vector<DivisorClass> a;  // a[i] = D_{2i+1} + D_{2i+2}
    std::vector<DivisorClass> b;  // b[i] = D_{2i+2} + ... + D_{2g+1}, reduced
};

/// Basis for any g >= 1.
HyperellipticBasis build_basis(unsigned g);

/// Matrix of pairing exponents in the order a_1..a_g, b_1..b_g; equals the
/// standard form [[0, I], [I, 0]] over F_2.
FpMatrix gram_matrix(const HyperellipticBasis& basis);

/// Image in Sp(2g, F_2) of a permutation of the 2g+2 branch points (0-based;
/// index 2g+1 is the point at infinity).  Relabeling sends each difference
/// class D_i to D_{sigma(i)} + D_{sigma(infinity)}.  DomainWarning for g < 2,
/// where the map cannot be injective.
FpMatrix embed_symmetric_group(unsigned g, const Perm& sigma);

/// Component count of the genus-g hyperelliptic level-2 moduli space:
/// |Sp(2g, F_2)| / (2g+2)!.  DomainWarning for g < 2.
BigCount hyp_component_count(unsigned g);

}  // namespace supel
