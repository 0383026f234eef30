#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace cgeo {

using Rational = mpq_class;

/// Exact element of the field Q(i, sqrt2):
///   value = (re_rat + re_sqrt2*sqrt(2)) + i*(im_rat + im_sqrt2*sqrt(2)).
/// Rationals are kept in lowest terms with positive denominator, so equality
/// is literal comparison of the four coordinates.
class Scalar {
 public:
  Scalar() : a_(0), b_(0), c_(0), d_(0) {}
  Scalar(long n) : a_(n), b_(0), c_(0), d_(0) {}
  Scalar(long num, long den);
  Scalar(Rational re_rat, Rational re_sqrt2, Rational im_rat, Rational im_sqrt2);

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  static Scalar i() { return Scalar(0, 0, 1, 0); }
  static Scalar sqrt2() { return Scalar(0, 1, 0, 0); }
  /// 1/sqrt(2) = sqrt(2)/2
  static Scalar inv_sqrt2() { return Scalar(Rational(0), Rational(1, 2), Rational(0), Rational(0)); }

  const Rational& re_rat() const { return a_; }
  const Rational& re_sqrt2() const { return b_; }
  const Rational& im_rat() const { return c_; }
  const Rational& im_sqrt2() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  bool is_real() const { return c_ == 0 && d_ == 0; }

  Scalar operator-() const { return Scalar(-a_, -b_, -c_, -d_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  Scalar conj() const { return Scalar(a_, b_, -c_, -d_); }
  Scalar inv() const;

  std::complex<double> to_complex() const;

  /// Canonical text form "a/b+c/d*s2+(e/f+g/h*s2)*i"; parse(str()) == *this.
  std::string str() const;

  /// Parses any +,-,*,/ expression over integers, "s2" and "i".
  static Scalar parse(const std::string& text);

 private:
  Rational a_, b_, c_, d_;
};

Scalar conj(const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace cgeo
