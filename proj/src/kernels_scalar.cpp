#include "supel/kernels.hpp"

#include <cstring>

namespace supel::kernels {

void matmul_mod_scalar(std::uint8_t* c, const std::uint8_t* a, const std::uint8_t* b,
                       std::size_t n, std::uint8_t p) noexcept {
    // Products are at most 96*96 and rows at most a few dozen entries, so a
    // 32-bit accumulator never wraps and one reduction per entry suffices.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::uint32_t acc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                acc += static_cast<std::uint32_t>(a[i * n + k]) * b[k * n + j];
            }
            c[i * n + j] = static_cast<std::uint8_t>(acc % p);
        }
    }
}

bool symplectic_check_scalar(const std::uint8_t* m, const std::uint8_t* j,
                             std::size_t n, std::uint8_t p) noexcept {
    if (n > kLaneDim) {
        // Rare oversized case: recompute per entry rather than allocate.
        for (std::size_t s = 0; s < n; ++s) {
            for (std::size_t r = 0; r < n; ++r) {
                std::uint32_t acc = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    std::uint32_t jv = 0;
                    for (std::size_t l = 0; l < n; ++l) {
                        jv += static_cast<std::uint32_t>(j[k * n + l]) * m[l * n + s];
                    }
                    acc += (jv % p) * m[k * n + r];
                }
                if (acc % p != j[r * n + s]) return false;
            }
        }
        return true;
    }

    // w = j * m, then compare m^T * w against j entry by entry.
    std::uint8_t w[kLaneDim * kLaneDim];
    matmul_mod_scalar(w, j, m, n, p);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) {
            std::uint32_t acc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                acc += static_cast<std::uint32_t>(m[k * n + r]) * w[k * n + s];
            }
            if (acc % p != j[r * n + s]) return false;
        }
    }
    return true;
}

}  // namespace supel::kernels
