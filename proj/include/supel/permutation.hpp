#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "supel/error.hpp"

namespace supel {

/// Permutation of {0, ..., n-1} stored as the image table.
class Perm {
public:
    explicit Perm(std::size_t n) : img_(n) {
        std::iota(img_.begin(), img_.end(), 0u);
    }

    static Perm transposition(std::size_t n, std::size_t a, std::size_t b) {
        Perm s(n);
        if (a >= n || b >= n) throw Error(ErrorKind::Precondition, "transposition out of range");
        std::swap(s.img_[a], s.img_[b]);
        return s;
    }

    static Perm from_images(std::vector<std::uint32_t> images) {
        std::vector<bool> seen(images.size(), false);
        for (std::uint32_t v : images) {
            if (v >= images.size() || seen[v]) {
                throw Error(ErrorKind::Precondition, "image table is not a bijection");
            }
            seen[v] = true;
        }
        Perm s(images.size());
        s.img_ = std::move(images);
        return s;
    }

    std::size_t size() const { return img_.size(); }
    std::uint32_t operator()(std::size_t x) const { return img_[x]; }
    const std::vector<std::uint32_t>& images() const { return img_; }

    /// Composition acting left to right on points: (s * t)(x) = s(t(x)).
    Perm operator*(const Perm& t) const {
        if (size() != t.size()) {
            throw Error(ErrorKind::DimensionMismatch, "permutation sizes differ");
        }
        Perm r(size());
        for (std::size_t x = 0; x < size(); ++x) r.img_[x] = img_[t.img_[x]];
        return r;
    }

    Perm inverse() const {
        Perm r(size());
        for (std::size_t x = 0; x < size(); ++x) r.img_[img_[x]] = static_cast<std::uint32_t>(x);
        return r;
    }

    bool is_identity() const {
        for (std::size_t x = 0; x < size(); ++x) {
            if (img_[x] != x) return false;
        }
        return true;
    }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

private:
    std::vector<std::uint32_t> img_;
};

}  // namespace supel
