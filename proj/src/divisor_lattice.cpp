#include "supel/divisor_lattice.hpp"

#include <nlohmann/json.hpp>

#include "supel/fp.hpp"

namespace supel {

DivisorClass::DivisorClass(std::vector<std::uint8_t> coeffs, std::vector<unsigned> exponents,
                           unsigned p)
    : coeffs_(std::move(coeffs)), exponents_(std::move(exponents)), p_(p) {
    validate_modulus(p);
    if (coeffs_.size() != exponents_.size() || coeffs_.size() < 2) {
        throw Error(ErrorKind::InvalidVector,
                    "need matching coefficient and exponent vectors of length >= 2");
    }
    for (std::uint8_t& c : coeffs_) c = static_cast<std::uint8_t>(c % p);
    if (coeffs_.back() != 0) {
        throw Error(ErrorKind::InvalidVector,
                    "not in normal form: last coordinate must be zero");
    }
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    if (p_ != o.p_ || exponents_ != o.exponents_) {
        throw Error(ErrorKind::ConfigMismatch, "classes over different configurations");
    }
    DivisorClass r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        r.coeffs_[i] = static_cast<std::uint8_t>((coeffs_[i] + o.coeffs_[i]) % p_);
    }
    return r;
}

DivisorClass DivisorClass::scaled(unsigned c) const {
    DivisorClass r = *this;
    for (std::uint8_t& v : r.coeffs_) {
        v = static_cast<std::uint8_t>(v * (c % p_) % p_);
    }
    return r;
}

std::string DivisorClass::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (std::uint8_t c : coeffs_) j.push_back(static_cast<unsigned>(c));
    return j.dump();
}

DivisorClass normal_form(std::vector<std::uint8_t> raw, std::vector<unsigned> exponents,
                         unsigned p) {
    validate_modulus(p);
    if (raw.size() != exponents.size() || raw.size() < 2) {
        throw Error(ErrorKind::InvalidVector,
                    "need matching coefficient and exponent vectors of length >= 2");
    }
    const std::size_t last = raw.size() - 1;
    const unsigned k_last = exponents[last] % p;
    if (k_last == 0) {
        throw Error(ErrorKind::NonInvertibleLeading,
                    "eliminated exponent vanishes mod " + std::to_string(p));
    }
    for (std::uint8_t& c : raw) c = static_cast<std::uint8_t>(c % p);
    const unsigned c = raw[last];
    if (c != 0) {
        // D_last = -k_last^{-1} * sum_{i<last} k_i D_i.
        const unsigned neg_inv = (p - mod_inverse(static_cast<std::uint8_t>(k_last), p)) % p;
        for (std::size_t i = 0; i < last; ++i) {
            const unsigned add = c * neg_inv % p * (exponents[i] % p) % p;
            raw[i] = static_cast<std::uint8_t>((raw[i] + add) % p);
        }
        raw[last] = 0;
    }
    DivisorClass out;
    out.coeffs_ = std::move(raw);
    out.exponents_ = std::move(exponents);
    out.p_ = p;
    return out;
}

unsigned delta_rank(unsigned m, unsigned p) {
    validate_modulus(p);
    if (m < 3) throw Error(ErrorKind::Precondition, "need at least three branch points");
    return m - 2;
}

PairingExponent pairing_exponent(const DivisorClass& x, const DivisorClass& y) {
    if (x.p() != y.p() || x.exponents() != y.exponents()) {
        throw Error(ErrorKind::ConfigMismatch, "classes over different configurations");
    }
    const unsigned p = x.p();
    if (p != 2) return PairingExponent(0, p);
    // Bilinear extension of: distinct generators pair to exponent 1, equal
    // generators to 0.  sum_{i != j} x_i y_j = (sum x)(sum y) - sum x_i y_i.
    unsigned sx = 0, sy = 0, diag = 0;
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        sx ^= x.coeffs()[i];
        sy ^= y.coeffs()[i];
        diag ^= static_cast<unsigned>(x.coeffs()[i] & y.coeffs()[i]);
    }
    return PairingExponent((sx & sy) ^ diag, 2);
}

Rational weil_ratio_ramified(const BranchConfiguration& config, std::size_t i, std::size_t j) {
    if (i == j) throw Error(ErrorKind::EqualIndices, "pairing needs two distinct points");
    const auto& pts = config.points();
    if (i >= pts.size() || j >= pts.size()) {
        throw Error(ErrorKind::Precondition, "point index out of range");
    }
    if (config.kappa() != 1) {
        throw Error(ErrorKind::NotNormalized, "model must have kappa = 1");
    }
    for (const Rational& a : pts) {
        if (a.is_zero()) {
            throw Error(ErrorKind::NotNormalized, "finite branch points must be nonzero");
        }
    }
    const unsigned p = config.p();

    unsigned degree = 0;
    for (unsigned k : config.exponents()) degree += k;
    // kappa = 1 forces degree = p*n - 1.
    const unsigned n = (degree + 1) / p;

    // Coefficients of f(t) = prod (t - a_l)^{k_l}, monic of the full degree.
    std::vector<Rational> f;
    f.reserve(degree + 1);
    f.push_back(Rational(1));
    for (std::size_t l = 0; l < pts.size(); ++l) {
        for (unsigned rep = 0; rep < config.exponents()[l]; ++rep) {
            f.insert(f.begin(), Rational(0));
            for (std::size_t d = 0; d + 1 < f.size(); ++d) {
                f[d] = f[d] - pts[l] * f[d + 1];
            }
        }
    }

    // g(t) = f(t) - t^{p(n-1)}, evaluated at a_i by Horner; no root finding.
    std::vector<Rational> g = f;
    const unsigned drop = p * (n - 1);
    g[drop] = g[drop] - Rational(1);

    const Rational& ai = pts[i];
    const Rational& aj = pts[j];
    const Rational g_at_ai = rational_eval_poly(g, ai);

    // f(a_i) = 0 pins g(a_i) exactly; anything else means the expansion broke.
    if (g_at_ai != -ai.pow(static_cast<int>(drop))) {
        throw Error(ErrorKind::VerificationFailed,
                    "polynomial expansion inconsistent at branch point");
    }

    const Rational neg_ai = -ai;
    const Rational psi = (ai - aj) / neg_ai.pow(static_cast<int>(p));
    // The factored product over the roots of g equals (-1)^{deg g} * g(a_i);
    // deg g = p*n - 1.
    const Rational root_sign = (p * n - 1) % 2 == 0 ? Rational(1) : Rational(-1);
    const Rational phi =
        (aj - ai) * root_sign * g_at_ai / neg_ai.pow(static_cast<int>(p * n));
    return psi / phi;
}

}  // namespace supel
