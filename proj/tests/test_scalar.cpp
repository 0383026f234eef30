#include <doctest.h>

#include <random>

#include "cgeo/errors.hpp"
#include "cgeo/scalar.hpp"

using cgeo::Scalar;

namespace {

Scalar random_scalar(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  return Scalar(num(gen), den(gen)) + Scalar::sqrt2() * Scalar(num(gen), den(gen)) +
         Scalar::i() * (Scalar(num(gen), den(gen)) + Scalar::sqrt2() * Scalar(num(gen), den(gen)));
}

}  // namespace

TEST_CASE("scalar arithmetic basics") {
  CHECK(Scalar::sqrt2() * Scalar::sqrt2() == Scalar(2));
  CHECK((Scalar(1) + Scalar::i()) / (Scalar(1) - Scalar::i()) == Scalar::i());
  CHECK(Scalar::inv_sqrt2() * Scalar::inv_sqrt2() == Scalar(1, 2));
  CHECK(Scalar::inv_sqrt2() == Scalar(1) / Scalar::sqrt2());
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), cgeo::DegenerateScalar);
}

TEST_CASE("scalar conjugation") {
  CHECK(Scalar::i().conj() == -Scalar::i());
  Scalar real = Scalar(3) + Scalar(2) * Scalar::sqrt2();
  CHECK(real.conj() == real);
  CHECK((Scalar::i() * Scalar::sqrt2()).conj() == -(Scalar::i() * Scalar::sqrt2()));
  std::mt19937_64 gen(7);
  for (int t = 0; t < 50; ++t) {
    Scalar s = random_scalar(gen);
    CHECK(s.conj().conj() == s);
  }
}

TEST_CASE("field axioms on random scalars") {
  std::mt19937_64 gen(11);
  for (int t = 0; t < 100; ++t) {
    Scalar a = random_scalar(gen), b = random_scalar(gen), c = random_scalar(gen);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Scalar(0));
    if (!a.is_zero()) {
      CHECK(a * a.inv() == Scalar(1));
      CHECK(b / a * a == b);
    }
  }
}

TEST_CASE("float embedding is a ring homomorphism up to rounding") {
  std::mt19937_64 gen(13);
  for (int t = 0; t < 40; ++t) {
    Scalar prod = Scalar(1);
    std::complex<double> expect(1.0, 0.0);
    for (int k = 0; k < 8; ++k) {
      Scalar s = random_scalar(gen);
      prod *= s;
      expect *= s.to_complex();
    }
    CHECK(std::abs(prod.to_complex() - expect) < 1e-12 * (1.0 + std::abs(expect)));
  }
  CHECK(Scalar(1, 2).to_complex() == std::complex<double>(0.5, 0.0));
  CHECK(Scalar::sqrt2().to_complex().real() == doctest::Approx(1.4142135623730951));
  CHECK(Scalar::i().to_complex() == std::complex<double>(0.0, 1.0));
}

TEST_CASE("text round-trip") {
  std::mt19937_64 gen(17);
  for (int t = 0; t < 100; ++t) {
    Scalar s = random_scalar(gen);
    CHECK(Scalar::parse(s.str()) == s);
  }
  CHECK(Scalar::parse("1/2+3/4*s2+(5/6+7/8*s2)*i") ==
        Scalar(cgeo::Rational(1, 2), cgeo::Rational(3, 4), cgeo::Rational(5, 6),
               cgeo::Rational(7, 8)));
  CHECK(Scalar::parse("-s2*i") == -(Scalar::sqrt2() * Scalar::i()));
  CHECK(Scalar::parse(" (1 - i) * (1 + i) ") == Scalar(2));
  CHECK_THROWS_AS(Scalar::parse("1+"), cgeo::ParseError);
  CHECK_THROWS_AS(Scalar::parse("x"), cgeo::ParseError);
}
