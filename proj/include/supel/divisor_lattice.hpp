#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "supel/bigint.hpp"
#include "supel/branch_geometry.hpp"

namespace supel {

/// Class in the p-torsion subgroup generated by differences of ramification
/// points against the base point.  Coordinates run over the m-1 non-base
/// points; the single relation sum k_i * D_i = 0 is used to keep the last
/// slot zero (normal form), leaving free coordinates D_1..D_{m-2}.
class DivisorClass {
public:
    DivisorClass(std::vector<std::uint8_t> coeffs, std::vector<unsigned> exponents,
                 unsigned p);

    unsigned p() const { return p_; }
    /// Total branch points of the ambient configuration.
    unsigned m() const { return static_cast<unsigned>(coeffs_.size()) + 1; }
    const std::vector<std::uint8_t>& coeffs() const { return coeffs_; }
    const std::vector<unsigned>& exponents() const { return exponents_; }

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass scaled(unsigned c) const;

    bool operator==(const DivisorClass& o) const {
        return p_ == o.p_ && coeffs_ == o.coeffs_ && exponents_ == o.exponents_;
    }
    bool operator!=(const DivisorClass& o) const { return !(*this == o); }

    std::string to_json() const;

private:
    friend DivisorClass normal_form(std::vector<std::uint8_t> raw,
                                    std::vector<unsigned> exponents, unsigned p);
    DivisorClass() = default;

    std::vector<std::uint8_t> coeffs_;
    std::vector<unsigned> exponents_;
    unsigned p_;
};

/// Reduce a raw coefficient vector over D_1..D_{m-1} by eliminating D_{m-1}
/// through D_{m-1} = -k_{m-1}^{-1} * sum_{i<m-1} k_i D_i.
/// NonInvertibleLeading when k_{m-1} vanishes mod p.
DivisorClass normal_form(std::vector<std::uint8_t> raw, std::vector<unsigned> exponents,
                         unsigned p);

/// Rank of the difference-class subgroup: m - 2.
unsigned delta_rank(unsigned m, unsigned p);

/// Discrete logarithm of a Weil-pairing value: the pairing of two classes is
/// the fixed primitive p-th root of unity raised to this exponent.
class PairingExponent {
public:
    PairingExponent(unsigned value, unsigned p) : v_(static_cast<std::uint8_t>(value % p)), p_(p) {}

    unsigned value() const { return v_; }
    unsigned p() const { return p_; }

    bool operator==(const PairingExponent& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const PairingExponent& o) const { return !(*this == o); }

private:
    std::uint8_t v_;
    unsigned p_;
};

/// Pairing exponent of two classes over the same configuration.
/// Zero identically for odd p; for p = 2 distinct generators pair to -1,
/// extended bilinearly.  ConfigMismatch when the ambient data differ.
PairingExponent pairing_exponent(const DivisorClass& x, const DivisorClass& y);

/// Exact evaluation of the Weil-pairing ratio between the function cutting
/// out branch point i and the one cutting out branch point j (0-based point
/// indices).  Requires the normalized model: kappa = 1 and every finite
/// branch point nonzero.  The result is (-1)^(p-1) for every valid input;
/// callers treat any other value as a broken model.
Rational weil_ratio_ramified(const BranchConfiguration& config, std::size_t i, std::size_t j);

}  // namespace supel
