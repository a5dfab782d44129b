#include "supel/level2.hpp"

#include <cstdint>

#include "supel/error.hpp"

namespace supel {

namespace {

DivisorClass reduced_class(std::vector<uint8_t> raw,
                           const std::vector<unsigned>& exponents) {
    return normal_form(std::move(raw), exponents, 2);
}

}  // namespace

HyperellipticBasis build_basis(unsigned g) {
    if (g == 0) {
        throw Error(ErrorKind::Precondition, "build_basis: genus must be positive");
    }
    const unsigned slots = 2 * g + 1;
    const std::vector<unsigned> exponents(slots, 1);

    HyperellipticBasis basis;
    basis.g = g;
    basis.a.reserve(g);
    basis.b.reserve(g);
    for (unsigned i = 1; i <= g; ++i) {
        std::vector<uint8_t> raw_a(slots, 0);
        raw_a[2 * i - 2] = 1;
        raw_a[2 * i - 1] = 1;
        basis.a.push_back(reduced_class(raw_a, exponents));

        // b_i is supported on slots 2i-1..2g before reduction; eliminating
        // the last slot folds it back onto the first 2i-1 differences.
        std::vector<uint8_t> raw_b(slots, 0);
        for (unsigned s = 2 * i - 1; s <= 2 * g; ++s) {
            raw_b[s] = 1;
        }
        basis.b.push_back(reduced_class(raw_b, exponents));
    }
    return basis;
}

FpMatrix gram_matrix(const HyperellipticBasis& basis) {
    const unsigned g = basis.g;
    FpMatrix gram(2 * g, 2);
    std::vector<const DivisorClass*> ordered;
    ordered.reserve(2 * g);
    for (const DivisorClass& cls : basis.a) {
        ordered.push_back(&cls);
    }
    for (const DivisorClass& cls : basis.b) {
        ordered.push_back(&cls);
    }
    for (unsigned r = 0; r < 2 * g; ++r) {
        for (unsigned c = 0; c < 2 * g; ++c) {
            gram.set(r, c, pairing_exponent(*ordered[r], *ordered[c]).value());
        }
    }
    return gram;
}

FpMatrix embed_symmetric_group(unsigned g, const Perm& sigma) {
    if (g < 2) {
        throw Error(ErrorKind::DomainWarning,
                    "embed_symmetric_group: relabeling action is faithful only for genus >= 2");
    }
    if (sigma.size() != 2 * g + 2) {
        throw Error(ErrorKind::DimensionMismatch,
                    "embed_symmetric_group: permutation must act on 2g+2 points");
    }

    const unsigned slots = 2 * g + 1;
    const std::vector<unsigned> exponents(slots, 1);
    const uint32_t image_base = sigma(2 * g + 1);

    // Columns of the action on difference classes, in raw D-coordinates.
    FpMatrix on_delta(2 * g, 2);
    for (unsigned j = 0; j < 2 * g; ++j) {
        std::vector<uint8_t> raw(slots, 0);
        const uint32_t image = sigma(j);
        if (image < slots) {
            raw[image] ^= 1;
        }
        if (image_base < slots) {
            raw[image_base] ^= 1;
        }
        const DivisorClass cls = reduced_class(raw, exponents);
        for (unsigned r = 0; r < 2 * g; ++r) {
            on_delta.set(r, j, cls.coeffs()[r]);
        }
    }

    // Change of basis into the symplectic frame a_1..a_g, b_1..b_g.
    const HyperellipticBasis basis = build_basis(g);
    FpMatrix frame(2 * g, 2);
    for (unsigned i = 0; i < g; ++i) {
        for (unsigned r = 0; r < 2 * g; ++r) {
            frame.set(r, i, basis.a[i].coeffs()[r]);
            frame.set(r, g + i, basis.b[i].coeffs()[r]);
        }
    }
    const FpMatrix result = frame.inverse() * on_delta * frame;

    const SymplecticForm form(g, 2);
    if (!is_symplectic(result, form)) {
        throw Error(ErrorKind::VerificationFailed,
                    "embed_symmetric_group: image does not preserve the symplectic form");
    }
    return result;
}

BigCount hyp_component_count(unsigned g) {
    if (g < 2) {
        throw Error(ErrorKind::DomainWarning,
                    "hyp_component_count: count is defined for genus >= 2");
    }
    return sp_group_order(g, 2).divide_exact(BigCount::factorial(2 * g + 2));
}

}  // namespace supel
