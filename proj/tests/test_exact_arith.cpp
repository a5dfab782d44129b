#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "supel/bigint.hpp"
#include "supel/fp.hpp"
#include "supel/rng.hpp"
#include "test_util.hpp"

using namespace supel;
using testutil::kind_of;

TEST_CASE("modular inverse by extended Euclid") {
    CHECK(mod_inverse(1, 3) == 1);
    CHECK(mod_inverse(2, 3) == 2);
    CHECK(kind_of([] { mod_inverse(0, 3); }) == ErrorKind::ZeroInverse);

    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 97u}) {
        for (unsigned a = 1; a < p; ++a) {
            const unsigned inv = mod_inverse(static_cast<std::uint8_t>(a), p);
            CHECK(inv < p);
            CHECK(a * inv % p == 1);
        }
    }
}

TEST_CASE("modulus validation") {
    CHECK(is_small_prime(2));
    CHECK(is_small_prime(97));
    CHECK_FALSE(is_small_prime(1));
    CHECK_FALSE(is_small_prime(91));

    CHECK(kind_of([] { Fp(1, 1); }) == ErrorKind::InvalidModulus);
    CHECK(kind_of([] { Fp(1, 4); }) == ErrorKind::InvalidModulus);
    CHECK(kind_of([] { Fp(1, 91); }) == ErrorKind::InvalidModulus);
    CHECK(kind_of([] { Fp(1, 101); }) == ErrorKind::InvalidModulus);
}

TEST_CASE("prime field arithmetic is closed and exact") {
    const Fp two(2, 3);
    CHECK((two + two).value() == 1);
    CHECK((two * two).value() == 1);
    CHECK((-two).value() == 1);
    CHECK(two.pow(4).value() == 1);
    CHECK(Fp(7, 3).value() == 1);
    CHECK(fp_inverse(two).value() == 2);
    CHECK(Fp::zero(5).is_zero());
    CHECK(Fp::one(5).value() == 1);

    CHECK(kind_of([] { fp_inverse(Fp::zero(3)); }) == ErrorKind::ZeroInverse);
    CHECK(kind_of([] { Fp(1, 3) + Fp(1, 5); }) == ErrorKind::ModulusMismatch);

    for (unsigned p : {2u, 3u, 5u, 97u}) {
        for (unsigned a = 0; a < p; ++a) {
            for (unsigned b = 0; b < p; ++b) {
                const Fp x(a, p), y(b, p);
                CHECK((x + y).value() == (a + b) % p);
                CHECK((x * y).value() == a * b % p);
                CHECK((x + (-x)).is_zero());
            }
        }
    }
}

TEST_CASE("big counts: factorial, powers, exact division") {
    CHECK(BigCount::factorial(0) == BigCount(1));
    CHECK(BigCount::factorial(10) == BigCount(3628800));
    CHECK(BigCount::pow(3, 4) == BigCount(81));
    CHECK(BigCount::pow(2, 100).str() == "1267650600228229401496703205376");

    CHECK(BigCount(720).divide_exact(BigCount(6)) == BigCount(120));
    CHECK(kind_of([] { BigCount(7).divide_exact(BigCount(2)); }) == ErrorKind::NonIntegral);
    CHECK(kind_of([] { BigCount(7).divide_exact(BigCount(0)); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([] { BigCount(cpp_int(-1)); }) == ErrorKind::Precondition);

    BigCount acc;
    acc += BigCount(5);
    acc *= BigCount(4);
    CHECK(acc == BigCount(20));
    CHECK(BigCount(3) < BigCount(4));
    CHECK(BigCount(4) > BigCount(3));
    CHECK(BigCount(4) <= BigCount(4));
    CHECK(BigCount().is_zero());
}

TEST_CASE("scientific rendering keeps short values verbatim") {
    CHECK(BigCount(51840).scientific() == "51840");
    // 20! = 2432902008176640000, nineteen digits.
    CHECK(BigCount::factorial(20).scientific() == "2.43e+18");
}

TEST_CASE("rationals stay in lowest terms with positive denominator") {
    const Rational half(2, 4);
    CHECK(half.numerator() == 1);
    CHECK(half.denominator() == 2);

    const Rational neg(1, -2);
    CHECK(neg.numerator() == -1);
    CHECK(neg.denominator() == 2);

    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
    CHECK((Rational(2, 3) * Rational(3, 2)) == Rational(1));
    CHECK((Rational(1, 2) / Rational(1, 4)) == Rational(2));
    CHECK((-Rational(1, 2)) == Rational(-1, 2));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).is_integer());
    CHECK(Rational(5).to_count() == BigCount(5));
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(-1).str() == "-1");
    CHECK(Rational(1, 3) < Rational(1, 2));

    CHECK(kind_of([] { Rational(1, 0); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([] { Rational(1) / Rational(0); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([] { Rational(0).pow(-1); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([] { Rational(1, 2).to_count(); }) == ErrorKind::NonIntegral);
    CHECK(kind_of([] { Rational(-1).to_count(); }) == ErrorKind::NonIntegral);
}

TEST_CASE("polynomial evaluation by Horner") {
    CHECK(rational_eval_poly({Rational(1), Rational(0), Rational(1)}, Rational(2)) ==
          Rational(5));
    CHECK(rational_eval_poly({Rational(0)}, Rational(7)).is_zero());
    CHECK(rational_eval_poly({Rational(-1), Rational(1)}, Rational(1)).is_zero());
    CHECK(kind_of([] { rational_eval_poly({}, Rational(1)); }) == ErrorKind::Precondition);

    // Horner agrees with direct power expansion at a fractional point.
    const std::vector<Rational> coeffs = {Rational(3, 2), Rational(-1, 3), Rational(0),
                                          Rational(5)};
    const Rational x(7, 4);
    Rational direct(0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        direct += coeffs[k] * x.pow(static_cast<int>(k));
    }
    CHECK(rational_eval_poly(coeffs, x) == direct);
}

TEST_CASE("seeded generator reproduces its stream") {
    SplitMix64 a(42), b(42);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.next() == b.next());
    }
    SplitMix64 c(7);
    for (int i = 0; i < 100; ++i) {
        CHECK(c.below(10) < 10);
        const std::int64_t v = c.range(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }
}
