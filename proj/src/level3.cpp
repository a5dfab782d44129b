#include "supel/level3.hpp"

#include <cstdint>
#include <deque>
#include <unordered_set>
#include <utility>

#include "supel/divisor_lattice.hpp"
#include "supel/error.hpp"
#include "supel/symplectic.hpp"

namespace supel {

namespace {

// Closure enumeration is capped by the predicted group order.
constexpr std::uint64_t kClosureBound = 100000;

void require_trigonal(const MultiplicityVector& m) {
    if (m.p() != 3) {
        throw Error(ErrorKind::Precondition, "multiplicity vector must be over p = 3");
    }
    if (m.total() < 3) {
        throw Error(ErrorKind::Precondition, "need at least three branch points");
    }
}

}  // namespace

std::vector<MultiplicityVector> trigonal_indexing_set(unsigned g) {
    if (g == 0) {
        throw Error(ErrorKind::Precondition, "trigonal_indexing_set: genus must be positive");
    }
    const unsigned m = g + 2;
    const unsigned r = (3 - m % 3) % 3;
    std::vector<MultiplicityVector> out;
    // m_2 runs over residues r mod 3 up to m/2; canonical form needs m_1 >= m_2.
    for (unsigned m2 = r; 2 * m2 <= m; m2 += 3) {
        out.emplace_back(std::vector<unsigned>{m - m2, m2}, 3);
    }
    return out;
}

AutGroup aut_group(const MultiplicityVector& m) {
    require_trigonal(m);
    AutGroup aut;
    aut.m1 = m.count_for_exponent(1);
    aut.m2 = m.count_for_exponent(2);
    aut.has_block_swap = aut.m1 == aut.m2;
    const unsigned total = aut.m1 + aut.m2;

    for (unsigned i = 0; i + 1 < aut.m1; ++i) {
        aut.generators.push_back(Perm::transposition(total, i, i + 1));
    }
    for (unsigned i = aut.m1; i + 1 < total; ++i) {
        aut.generators.push_back(Perm::transposition(total, i, i + 1));
    }
    if (aut.has_block_swap) {
        std::vector<uint32_t> images(total);
        const unsigned half = total / 2;
        for (unsigned x = 0; x < total; ++x) {
            images[x] = x < half ? x + half : x - half;
        }
        aut.generators.push_back(Perm::from_images(images));
    }

    aut.order = BigCount::factorial(aut.m1) * BigCount::factorial(aut.m2);
    if (aut.has_block_swap) {
        aut.order = aut.order * BigCount(2);
    }
    return aut;
}

bool aut_contains(const AutGroup& aut, const Perm& sigma) {
    if (sigma.size() != aut.m1 + aut.m2) {
        return false;
    }
    bool preserves = true;
    bool swaps = aut.has_block_swap;
    for (uint32_t x = 0; x < sigma.size(); ++x) {
        const bool in_first = x < aut.m1;
        const bool image_in_first = sigma(x) < aut.m1;
        preserves = preserves && (in_first == image_in_first);
        swaps = swaps && (in_first != image_in_first);
    }
    return preserves || swaps;
}

PsiImage psi_generator_image(const MultiplicityVector& m, const Perm& sigma) {
    require_trigonal(m);
    const unsigned total = m.total();
    if (sigma.size() != total) {
        throw Error(ErrorKind::DimensionMismatch,
                    "psi_generator_image: permutation must act on all branch points");
    }
    if (!aut_contains(aut_group(m), sigma)) {
        throw Error(ErrorKind::UnknownGenerator,
                    "psi_generator_image: permutation does not respect exponent blocks");
    }

    const unsigned g = total - 2;
    const unsigned m1 = m.count_for_exponent(1);
    // Exponents of the finite points once point total-1 is moved to infinity.
    std::vector<unsigned> exponents(total - 1);
    for (unsigned x = 0; x + 1 < total; ++x) {
        exponents[x] = x < m1 ? 1 : 2;
    }

    FpMatrix delta(g, 3);
    const uint32_t image_base = sigma(total - 1);
    for (unsigned j = 0; j < g; ++j) {
        std::vector<uint8_t> raw(total - 1, 0);
        const uint32_t image = sigma(j);
        if (image + 1 < total) {
            raw[image] = 1;
        }
        if (image_base + 1 < total) {
            raw[image_base] = 2;
        }
        const DivisorClass cls = normal_form(std::move(raw), exponents, 3);
        for (unsigned r = 0; r < g; ++r) {
            delta.set(r, j, cls.coeffs()[r]);
        }
    }

    FpMatrix full(2 * g, 3);
    const FpMatrix dual = delta.transpose().inverse();
    for (unsigned r = 0; r < g; ++r) {
        for (unsigned c = 0; c < g; ++c) {
            full.set(r, c, delta.at(r, c));
            full.set(g + r, g + c, dual.at(r, c));
        }
    }
    if (!is_symplectic(full, SymplecticForm(g, 3))) {
        throw Error(ErrorKind::VerificationFailed,
                    "psi_generator_image: image does not preserve the symplectic form");
    }
    return PsiImage{std::move(delta), std::move(full)};
}

FpMatrix deck_transvection(unsigned g) {
    if (g == 0) {
        throw Error(ErrorKind::Precondition, "deck_transvection: genus must be positive");
    }
    FpMatrix mat(2 * g, 3);
    for (unsigned i = 0; i < g; ++i) {
        mat.set(i, i, 1);
        mat.set(g + i, g + i, 1);
        mat.set(i, g + i, 1);
    }
    return mat;
}

std::vector<FpMatrix> psi_subgroup(const MultiplicityVector& m) {
    require_trigonal(m);
    const AutGroup aut = aut_group(m);
    if (aut.order > BigCount(kClosureBound)) {
        throw Error(ErrorKind::TooLarge, "psi_subgroup: predicted order exceeds closure bound");
    }
    const unsigned g = m.total() - 2;

    std::vector<FpMatrix> gens;
    gens.reserve(aut.generators.size() + 1);
    for (const Perm& sigma : aut.generators) {
        gens.push_back(psi_generator_image(m, sigma).full);
    }
    // With three branch points the relabelings act through scalars only; the
    // deck transformation of the cover supplies the missing unipotent part.
    if (m.total() == 3) {
        gens.push_back(deck_transvection(g));
    }

    // Breadth-first closure under right multiplication; every generator has
    // finite order, so inverses arrive as powers.
    std::deque<FpMatrix> found;
    std::unordered_set<FpMatrix, FpMatrix::Hash> seen;
    found.push_back(FpMatrix::identity(2 * g, 3));
    seen.insert(found.front());
    for (std::size_t head = 0; head < found.size(); ++head) {
        const FpMatrix& current = found[head];
        for (const FpMatrix& gen : gens) {
            FpMatrix next = current * gen;
            if (seen.insert(next).second) {
                found.push_back(std::move(next));
                if (BigCount(found.size()) > aut.order) {
                    throw Error(ErrorKind::VerificationFailed,
                                "psi_subgroup: closure exceeds predicted order");
                }
            }
        }
    }

    if (BigCount(found.size()) != aut.order) {
        throw Error(ErrorKind::VerificationFailed,
                    "psi_subgroup: closure does not match predicted order");
    }
    return std::vector<FpMatrix>(found.begin(), found.end());
}

BigCount component_count_formula(unsigned g) {
    if (g == 0) {
        throw Error(ErrorKind::Precondition, "component_count_formula: genus must be positive");
    }
    const unsigned m = g + 2;
    const unsigned k = (3 - m % 3) % 3;
    Rational sum(0);
    // Unbalanced vectors: m_2 = 3i + k strictly below m/2.
    for (unsigned m2 = k; 2 * m2 < m; m2 += 3) {
        sum += Rational(1) /
               Rational(BigCount::factorial(m2) * BigCount::factorial(m - m2));
    }
    // Balanced vector, present exactly when m is even; its relabeling group
    // picks up the block swap.
    if (m % 2 == 0) {
        const BigCount half = BigCount::factorial(m / 2);
        sum += Rational(1) / Rational(BigCount(2) * half * half);
    }
    return (Rational(sp_group_order(g, 3)) * sum).to_count();
}

BigCount census_sum(unsigned g) {
    const BigCount sp = sp_group_order(g, 3);
    BigCount total;
    for (const MultiplicityVector& m : trigonal_indexing_set(g)) {
        total += sp.divide_exact(aut_group(m).order);
    }
    return total;
}

CensusReport census_report(unsigned g) {
    CensusReport report{g, {}, BigCount(), component_count_formula(g), false};
    const BigCount sp = sp_group_order(g, 3);
    for (const MultiplicityVector& m : trigonal_indexing_set(g)) {
        const BigCount aut_order = aut_group(m).order;
        const BigCount components = sp.divide_exact(aut_order);
        report.total += components;
        report.rows.push_back(CensusRow{m, aut_order, components, m.stabilizer_nontrivial()});
    }
    report.matches = report.total == report.formula_total;
    return report;
}

}  // namespace supel
