#pragma once

#include <cstddef>
#include <cstdint>

// Modular small-matrix kernels behind the group-enumeration loops.  Matrices
// are square, row major, entries already reduced mod p (p <= 97).  A scalar
// reference implementation always exists; an AVX2 variant is selected at
// runtime when the CPU supports it.  Both produce identical results and the
// test suite checks them against each other.

namespace supel::kernels {

/// Kernels accept any n; vector paths engage for n <= kLaneDim.
inline constexpr std::size_t kLaneDim = 32;

/// c = a * b mod p.  c must not alias a or b.
void matmul_mod_scalar(std::uint8_t* c, const std::uint8_t* a, const std::uint8_t* b,
                       std::size_t n, std::uint8_t p) noexcept;

/// True when m^T * j * m == j over Z/pZ.
bool symplectic_check_scalar(const std::uint8_t* m, const std::uint8_t* j,
                             std::size_t n, std::uint8_t p) noexcept;

#if defined(SUPEL_HAVE_AVX2)
void matmul_mod_avx2(std::uint8_t* c, const std::uint8_t* a, const std::uint8_t* b,
                     std::size_t n, std::uint8_t p) noexcept;
bool symplectic_check_avx2(const std::uint8_t* m, const std::uint8_t* j,
                           std::size_t n, std::uint8_t p) noexcept;
#endif

/// Dispatched entry points used by the matrix layer.
void matmul_mod(std::uint8_t* c, const std::uint8_t* a, const std::uint8_t* b,
                std::size_t n, std::uint8_t p) noexcept;
bool symplectic_check(const std::uint8_t* m, const std::uint8_t* j,
                      std::size_t n, std::uint8_t p) noexcept;

/// Name of the backend the dispatcher would pick right now.
const char* backend_name() noexcept;

/// Pin the dispatcher to the scalar path (tests and A/B comparisons).
void force_scalar_backend(bool on) noexcept;

}  // namespace supel::kernels
