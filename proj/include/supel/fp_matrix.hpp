#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "supel/error.hpp"
#include "supel/fp.hpp"

namespace supel {

/// Square matrix over Z/pZ.  Entries are stored reduced, row major.
class FpMatrix {
public:
    FpMatrix(std::size_t n, unsigned p);

    static FpMatrix identity(std::size_t n, unsigned p);

    std::size_t dim() const { return n_; }
    unsigned modulus() const { return p_; }

    std::uint8_t at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, unsigned v) {
        e_[i * n_ + j] = static_cast<std::uint8_t>(v % p_);
    }

    const std::uint8_t* data() const { return e_.data(); }

    FpMatrix operator*(const FpMatrix& o) const;
    FpMatrix operator+(const FpMatrix& o) const;
    FpMatrix transpose() const;
    FpMatrix inverse() const;        // Gauss-Jordan; Singular when rank deficient
    std::uint8_t determinant() const;

    bool operator==(const FpMatrix& o) const {
        return n_ == o.n_ && p_ == o.p_ && e_ == o.e_;
    }
    bool operator!=(const FpMatrix& o) const { return !(*this == o); }

    struct Hash {
        std::size_t operator()(const FpMatrix& m) const noexcept {
            std::size_t h = 1469598103934665603ull ^ (m.n_ * 1099511628211ull) ^ m.p_;
            for (std::uint8_t b : m.e_) {
                h ^= b;
                h *= 1099511628211ull;
            }
            return h;
        }
    };

private:
    void check_compatible(const FpMatrix& o) const;

    std::size_t n_;
    unsigned p_;
    std::vector<std::uint8_t> e_;
};

}  // namespace supel
