// AVX2 variants of the modular matrix kernels.  Compiled with -mavx2 on
// x86-64 only; the dispatcher guards every call with a CPUID check.

#include "supel/kernels.hpp"

#if defined(SUPEL_HAVE_AVX2)

#include <immintrin.h>

#include <cstring>

namespace supel::kernels {

namespace {

inline std::uint32_t hsum_epi32(__m256i v) {
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i s = _mm_add_epi32(lo, hi);
    s = _mm_add_epi32(s, _mm_srli_si128(s, 8));
    s = _mm_add_epi32(s, _mm_srli_si128(s, 4));
    return static_cast<std::uint32_t>(_mm_cvtsi128_si32(s));
}

// Rows of a and rows of b^T, zero padded to one 32-byte lane each.  Entries
// are < 97, so vpmaddubsw (u8 x s8 -> paired i16) cannot overflow: products
// stay below 97^2 and adjacent pairs below 2 * 97^2 < 2^15.
struct PaddedOperands {
    alignas(32) std::uint8_t a[kLaneDim * kLaneDim];
    alignas(32) std::uint8_t bt[kLaneDim * kLaneDim];
};

inline void load_padded(PaddedOperands& ops, const std::uint8_t* a, const std::uint8_t* b,
                        std::size_t n) {
    std::memset(ops.a, 0, sizeof(ops.a));
    std::memset(ops.bt, 0, sizeof(ops.bt));
    for (std::size_t i = 0; i < n; ++i) {
        std::memcpy(ops.a + i * kLaneDim, a + i * n, n);
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            ops.bt[j * kLaneDim + k] = b[k * n + j];
        }
    }
}

inline void matmul_padded(std::uint8_t* c, const PaddedOperands& ops, std::size_t n,
                          std::uint8_t p) {
    const __m256i ones = _mm256_set1_epi16(1);
    for (std::size_t i = 0; i < n; ++i) {
        const __m256i va =
            _mm256_load_si256(reinterpret_cast<const __m256i*>(ops.a + i * kLaneDim));
        for (std::size_t j = 0; j < n; ++j) {
            const __m256i vb =
                _mm256_load_si256(reinterpret_cast<const __m256i*>(ops.bt + j * kLaneDim));
            const __m256i pairs = _mm256_maddubs_epi16(va, vb);
            const __m256i quads = _mm256_madd_epi16(pairs, ones);
            c[i * n + j] = static_cast<std::uint8_t>(hsum_epi32(quads) % p);
        }
    }
}

}  // namespace

void matmul_mod_avx2(std::uint8_t* c, const std::uint8_t* a, const std::uint8_t* b,
                     std::size_t n, std::uint8_t p) noexcept {
    if (n > kLaneDim) {
        matmul_mod_scalar(c, a, b, n, p);
        return;
    }
    PaddedOperands ops;
    load_padded(ops, a, b, n);
    matmul_padded(c, ops, n, p);
}

bool symplectic_check_avx2(const std::uint8_t* m, const std::uint8_t* j,
                           std::size_t n, std::uint8_t p) noexcept {
    if (n > kLaneDim) {
        return symplectic_check_scalar(m, j, n, p);
    }
    // w = j * m, then m^T * w compared against j.  The second product reuses
    // the padded-lane routine with m^T as the left operand.
    std::uint8_t w[kLaneDim * kLaneDim];
    std::uint8_t mt[kLaneDim * kLaneDim];
    std::uint8_t out[kLaneDim * kLaneDim];
    matmul_mod_avx2(w, j, m, n, p);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) {
            mt[r * n + s] = m[s * n + r];
        }
    }
    matmul_mod_avx2(out, mt, w, n, p);
    return std::memcmp(out, j, n * n) == 0;
}

}  // namespace supel::kernels

#endif  // SUPEL_HAVE_AVX2
