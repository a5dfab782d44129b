#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "supel/error.hpp"

namespace supel {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

/// Nonnegative arbitrary-precision integer for group orders and component
/// counts.  Thin shell over cpp_int that keeps the sign invariant and makes
/// exact division an explicit, checked operation.
class BigCount {
public:
    BigCount() : v_(0) {}
    BigCount(std::uint64_t v) : v_(v) {}
    explicit BigCount(cpp_int v) : v_(std::move(v)) {
        if (v_ < 0) {
            throw Error(ErrorKind::Precondition, "counts cannot be negative");
        }
    }

    static BigCount factorial(unsigned n) {
        cpp_int acc = 1;
        for (unsigned i = 2; i <= n; ++i) acc *= i;
        return BigCount(acc);
    }

    static BigCount pow(std::uint64_t base, unsigned exp) {
        return BigCount(boost::multiprecision::pow(cpp_int(base), exp));
    }

    const cpp_int& raw() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    BigCount operator+(const BigCount& o) const { return BigCount(v_ + o.v_); }
    BigCount operator*(const BigCount& o) const { return BigCount(v_ * o.v_); }
    BigCount& operator+=(const BigCount& o) {
        v_ += o.v_;
        return *this;
    }
    BigCount& operator*=(const BigCount& o) {
        v_ *= o.v_;
        return *this;
    }

    /// Quotient when the division leaves no remainder; NonIntegral otherwise.
    BigCount divide_exact(const BigCount& d) const {
        if (d.v_ == 0) throw Error(ErrorKind::DivisionByZero, "division by zero count");
        if (v_ % d.v_ != 0) {
            throw Error(ErrorKind::NonIntegral,
                        str() + " is not divisible by " + d.str());
        }
        return BigCount(v_ / d.v_);
    }

    bool operator==(const BigCount& o) const { return v_ == o.v_; }
    bool operator!=(const BigCount& o) const { return v_ != o.v_; }
    bool operator<(const BigCount& o) const { return v_ < o.v_; }
    bool operator<=(const BigCount& o) const { return v_ <= o.v_; }
    bool operator>(const BigCount& o) const { return v_ > o.v_; }

    std::string str() const { return v_.str(); }

    /// Short scientific rendering ("1.31e+17") for table output; exact values
    /// stay available through str().
    std::string scientific() const {
        std::string s = v_.str();
        if (s.size() <= 6) return s;
        std::string mant = s.substr(0, 1) + "." + s.substr(1, 2);
        return mant + "e+" + std::to_string(s.size() - 1);
    }

private:
    cpp_int v_;
};

/// Exact rational number.  Always held in lowest terms with positive
/// denominator (cpp_rational maintains that canonical form).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(std::int64_t n) : v_(n) {}
    Rational(std::int64_t num, std::int64_t den) { init(cpp_int(num), cpp_int(den)); }
    Rational(const cpp_int& num, const cpp_int& den) { init(num, den); }
    explicit Rational(const BigCount& c) : v_(c.raw()) {}

    cpp_int numerator() const { return boost::multiprecision::numerator(v_); }
    cpp_int denominator() const { return boost::multiprecision::denominator(v_); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }

    Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
        return Rational(v_ / o.v_);
    }
    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }

    /// Integer power; negative exponents invert (error on zero base).
    Rational pow(int e) const {
        if (e < 0) {
            if (is_zero()) throw Error(ErrorKind::DivisionByZero, "0 has no negative power");
            return Rational(1) / pow(-e);
        }
        cpp_int n = boost::multiprecision::pow(numerator(), static_cast<unsigned>(e));
        cpp_int d = boost::multiprecision::pow(denominator(), static_cast<unsigned>(e));
        return Rational(n, d);
    }

    /// Exact integer value; NonIntegral when a denominator remains.
    BigCount to_count() const {
        if (!is_integer() || v_ < 0) {
            throw Error(ErrorKind::NonIntegral, str() + " is not a nonnegative integer");
        }
        return BigCount(numerator());
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    std::string str() const {
        if (is_integer()) return numerator().str();
        return numerator().str() + "/" + denominator().str();
    }

private:
    explicit Rational(cpp_rational v) : v_(std::move(v)) {}
    // cpp_rational reduces to lowest terms but rejects negative denominators.
    void init(cpp_int num, cpp_int den) {
        if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        v_ = cpp_rational(std::move(num), std::move(den));
    }

    cpp_rational v_;
};

/// Horner evaluation of sum coeffs[k] * x^k with exact arithmetic.
inline Rational rational_eval_poly(const std::vector<Rational>& coeffs, const Rational& x) {
    if (coeffs.empty()) {
        throw Error(ErrorKind::Precondition, "polynomial needs at least one coefficient");
    }
    Rational acc = coeffs.back();
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
        acc = acc * x + coeffs[k];
    }
    return acc;
}

}  // namespace supel
