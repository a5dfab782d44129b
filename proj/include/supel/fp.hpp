#pragma once

#include <cstdint>

#include "supel/error.hpp"

namespace supel {

inline constexpr unsigned kMaxModulus = 97;

/// Primality by trial division.  Only modest moduli are ever used, so this
/// stays exact and allocation free.
inline bool is_small_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline void validate_modulus(unsigned p) {
    if (p > kMaxModulus || !is_small_prime(p)) {
        throw Error(ErrorKind::InvalidModulus,
                    "modulus must be a prime <= " + std::to_string(kMaxModulus) +
                        ", got " + std::to_string(p));
    }
}

/// Residue a^{-1} mod p via the extended Euclidean algorithm.
/// Raw form used by the matrix code; a must already be reduced.
inline std::uint8_t mod_inverse(std::uint8_t a, unsigned p) {
    if (a == 0) {
        throw Error(ErrorKind::ZeroInverse, "0 has no inverse mod " + std::to_string(p));
    }
    std::int32_t r0 = static_cast<std::int32_t>(p), r1 = a;
    std::int32_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int32_t q = r0 / r1;
        std::int32_t r2 = r0 - q * r1;
        std::int32_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    // r0 = gcd(a, p) = 1 since p is prime and 0 < a < p.
    if (t0 < 0) t0 += static_cast<std::int32_t>(p);
    return static_cast<std::uint8_t>(t0);
}

/// Element of the prime field Z/pZ with the modulus carried alongside the
/// value.  Arithmetic between elements of different fields is rejected.
class Fp {
public:
    Fp(unsigned value, unsigned modulus) : p_(modulus) {
        validate_modulus(modulus);
        v_ = static_cast<std::uint8_t>(value % modulus);
    }

    static Fp zero(unsigned p) { return Fp(0, p); }
    static Fp one(unsigned p) { return Fp(1, p); }

    unsigned value() const { return v_; }
    unsigned modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const {
        check_same_field(o);
        return make((v_ + o.v_) % p_);
    }
    Fp operator-(const Fp& o) const {
        check_same_field(o);
        return make((v_ + p_ - o.v_) % p_);
    }
    Fp operator*(const Fp& o) const {
        check_same_field(o);
        return make(static_cast<unsigned>(v_) * o.v_ % p_);
    }
    Fp operator-() const { return make(v_ == 0 ? 0u : p_ - v_); }

    Fp inverse() const { return make(mod_inverse(v_, p_)); }

    Fp pow(unsigned e) const {
        Fp acc = one(p_), base = *this;
        while (e > 0) {
            if (e & 1u) acc = acc * base;
            base = base * base;
            e >>= 1u;
        }
        return acc;
    }

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

private:
    Fp make(unsigned v) const {
        Fp r = *this;
        r.v_ = static_cast<std::uint8_t>(v);
        return r;
    }
    void check_same_field(const Fp& o) const {
        if (p_ != o.p_) {
            throw Error(ErrorKind::ModulusMismatch,
                        "mixed moduli " + std::to_string(p_) + " and " + std::to_string(o.p_));
        }
    }

    std::uint8_t v_ = 0;
    unsigned p_;
};

/// Field inverse as a standalone operation.
inline Fp fp_inverse(const Fp& x) { return x.inverse(); }

}  // namespace supel
