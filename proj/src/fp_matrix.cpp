#include "supel/fp_matrix.hpp"

#include "supel/kernels.hpp"

namespace supel {

FpMatrix::FpMatrix(std::size_t n, unsigned p) : n_(n), p_(p), e_(n * n, 0) {
    validate_modulus(p);
    if (n == 0) throw Error(ErrorKind::DimensionMismatch, "matrix dimension must be positive");
}

FpMatrix FpMatrix::identity(std::size_t n, unsigned p) {
    FpMatrix m(n, p);
    for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = 1;
    return m;
}

void FpMatrix::check_compatible(const FpMatrix& o) const {
    if (p_ != o.p_) {
        throw Error(ErrorKind::ModulusMismatch, "matrices over different fields");
    }
    if (n_ != o.n_) {
        throw Error(ErrorKind::DimensionMismatch, "matrix dimensions differ");
    }
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    check_compatible(o);
    FpMatrix r(n_, p_);
    kernels::matmul_mod(r.e_.data(), e_.data(), o.e_.data(), n_,
                        static_cast<std::uint8_t>(p_));
    return r;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
    check_compatible(o);
    FpMatrix r(n_, p_);
    for (std::size_t k = 0; k < e_.size(); ++k) {
        r.e_[k] = static_cast<std::uint8_t>((e_[k] + o.e_[k]) % p_);
    }
    return r;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix r(n_, p_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            r.e_[j * n_ + i] = e_[i * n_ + j];
        }
    }
    return r;
}

FpMatrix FpMatrix::inverse() const {
    // Gauss-Jordan on [this | I].
    FpMatrix left = *this;
    FpMatrix right = identity(n_, p_);
    const unsigned p = p_;
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (pivot < n_ && left.e_[pivot * n_ + col] == 0) ++pivot;
        if (pivot == n_) throw Error(ErrorKind::Singular, "matrix is not invertible");
        if (pivot != col) {
            for (std::size_t j = 0; j < n_; ++j) {
                std::swap(left.e_[pivot * n_ + j], left.e_[col * n_ + j]);
                std::swap(right.e_[pivot * n_ + j], right.e_[col * n_ + j]);
            }
        }
        const unsigned inv = mod_inverse(left.e_[col * n_ + col], p);
        for (std::size_t j = 0; j < n_; ++j) {
            left.e_[col * n_ + j] = static_cast<std::uint8_t>(left.e_[col * n_ + j] * inv % p);
            right.e_[col * n_ + j] = static_cast<std::uint8_t>(right.e_[col * n_ + j] * inv % p);
        }
        for (std::size_t row = 0; row < n_; ++row) {
            if (row == col) continue;
            const unsigned f = left.e_[row * n_ + col];
            if (f == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                const unsigned sub = f * left.e_[col * n_ + j] % p;
                left.e_[row * n_ + j] =
                    static_cast<std::uint8_t>((left.e_[row * n_ + j] + p - sub) % p);
                const unsigned subr = f * right.e_[col * n_ + j] % p;
                right.e_[row * n_ + j] =
                    static_cast<std::uint8_t>((right.e_[row * n_ + j] + p - subr) % p);
            }
        }
    }
    return right;
}

std::uint8_t FpMatrix::determinant() const {
    FpMatrix w = *this;
    const unsigned p = p_;
    unsigned det = 1;
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (pivot < n_ && w.e_[pivot * n_ + col] == 0) ++pivot;
        if (pivot == n_) return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n_; ++j) {
                std::swap(w.e_[pivot * n_ + j], w.e_[col * n_ + j]);
            }
            det = det * (p - 1) % p;
        }
        const unsigned pv = w.e_[col * n_ + col];
        det = det * pv % p;
        const unsigned inv = mod_inverse(static_cast<std::uint8_t>(pv), p);
        for (std::size_t row = col + 1; row < n_; ++row) {
            const unsigned f = w.e_[row * n_ + col] * inv % p;
            if (f == 0) continue;
            for (std::size_t j = col; j < n_; ++j) {
                const unsigned sub = f * w.e_[col * n_ + j] % p;
                w.e_[row * n_ + j] =
                    static_cast<std::uint8_t>((w.e_[row * n_ + j] + p - sub) % p);
            }
        }
    }
    return static_cast<std::uint8_t>(det);
}

}  // namespace supel
