#include "supel/kernels.hpp"

#include <atomic>

namespace supel::kernels {

namespace {

std::atomic<bool> g_force_scalar{false};

bool avx2_supported() noexcept {
#if defined(SUPEL_HAVE_AVX2)
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported;
#else
    return false;
#endif
}

inline bool use_avx2() noexcept {
    return avx2_supported() && !g_force_scalar.load(std::memory_order_relaxed);
}

}  // namespace

void matmul_mod(std::uint8_t* c, const std::uint8_t* a, const std::uint8_t* b,
                std::size_t n, std::uint8_t p) noexcept {
#if defined(SUPEL_HAVE_AVX2)
    if (use_avx2()) {
        matmul_mod_avx2(c, a, b, n, p);
        return;
    }
#endif
    matmul_mod_scalar(c, a, b, n, p);
}

bool symplectic_check(const std::uint8_t* m, const std::uint8_t* j,
                      std::size_t n, std::uint8_t p) noexcept {
#if defined(SUPEL_HAVE_AVX2)
    if (use_avx2()) {
        return symplectic_check_avx2(m, j, n, p);
    }
#endif
    return symplectic_check_scalar(m, j, n, p);
}

const char* backend_name() noexcept { return use_avx2() ? "avx2" : "scalar"; }

void force_scalar_backend(bool on) noexcept {
    g_force_scalar.store(on, std::memory_order_relaxed);
}

}  // namespace supel::kernels
