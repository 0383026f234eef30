#include "cgeo/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

#include "cgeo/errors.hpp"

namespace cgeo {

namespace {

Rational canon(Rational q) {
  q.canonicalize();
  return q;
}

std::string rat_str(const Rational& q) {
  std::ostringstream os;
  os << q.get_num();
  if (q.get_den() != 1) os << "/" << q.get_den();
  return os.str();
}

// Prints u + v*s2 with u printed first when nonzero; "0" when both vanish.
std::string real_pair_str(const Rational& u, const Rational& v) {
  if (u == 0 && v == 0) return "0";
  std::string out;
  if (u != 0) out += rat_str(u);
  if (v != 0) {
    if (!out.empty() && v > 0) out += "+";
    out += rat_str(v) + "*s2";
  }
  return out;
}

}  // namespace

Scalar::Scalar(long num, long den) : a_(num, den), b_(0), c_(0), d_(0) {
  if (den == 0) throw DegenerateScalar("zero denominator");
  a_.canonicalize();
}

Scalar::Scalar(Rational re_rat, Rational re_sqrt2, Rational im_rat, Rational im_sqrt2)
    : a_(canon(std::move(re_rat))),
      b_(canon(std::move(re_sqrt2))),
      c_(canon(std::move(im_rat))),
      d_(canon(std::move(im_sqrt2))) {}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  // (x1 + i y1)(x2 + i y2) with x, y in Q(sqrt2);
  // (a + b s)(a' + b' s) = (aa' + 2bb') + (ab' + a'b) s.
  Rational ra = a_ * o.a_ + 2 * b_ * o.b_ - (c_ * o.c_ + 2 * d_ * o.d_);
  Rational rb = a_ * o.b_ + b_ * o.a_ - (c_ * o.d_ + d_ * o.c_);
  Rational rc = a_ * o.c_ + 2 * b_ * o.d_ + c_ * o.a_ + 2 * d_ * o.b_;
  Rational rd = a_ * o.d_ + b_ * o.c_ + c_ * o.b_ + d_ * o.a_;
  a_ = std::move(ra);
  b_ = std::move(rb);
  c_ = std::move(rc);
  d_ = std::move(rd);
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DegenerateScalar("division by zero in Q(i,sqrt2)");
  // 1/z = conj(z) / (z conj(z)); the norm lies in Q(sqrt2).
  Scalar n = *this * conj();  // n = u + v*s2, real
  Rational u = n.a_, v = n.b_;
  Rational den = u * u - 2 * v * v;  // (u + v s)(u - v s)
  Scalar inv_norm(canon(u / den), canon(-v / den), Rational(0), Rational(0));
  return conj() * inv_norm;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

std::complex<double> Scalar::to_complex() const {
  const double s = std::sqrt(2.0);
  return {a_.get_d() + s * b_.get_d(), c_.get_d() + s * d_.get_d()};
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (a_ != 0 || b_ != 0) out = real_pair_str(a_, b_);
  if (c_ != 0 || d_ != 0) {
    if (!out.empty()) out += "+";
    out += "(" + real_pair_str(c_, d_) + ")*i";
  }
  return out;
}

namespace {

// Recursive-descent parser for field expressions over integers, s2 and i.
class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Scalar run() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return v;
  }

 private:
  Scalar expr() {
    Scalar v = term();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        v += term();
      } else if (peek() == '-') {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        v *= factor();
      } else if (peek() == '/') {
        ++pos_;
        v /= factor();
      } else {
        return v;
      }
    }
  }

  Scalar factor() {
    skip_ws();
    bool neg = false;
    while (peek() == '+' || peek() == '-') {
      if (peek() == '-') neg = !neg;
      ++pos_;
      skip_ws();
    }
    Scalar v = atom();
    return neg ? -v : v;
  }

  Scalar atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == 's') {
      if (s_.compare(pos_, 2, "s2") != 0) fail("expected s2");
      pos_ += 2;
      return Scalar::sqrt2();
    }
    if (c == 'i') {
      ++pos_;
      return Scalar::i();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Rational q(s_.substr(start, pos_ - start));
      return Scalar(std::move(q), Rational(0), Rational(0), Rational(0));
    }
    fail("unexpected character");
    return Scalar();
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("scalar '" + s_ + "': " + why + " at position " + std::to_string(pos_));
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(const std::string& text) { return Parser(text).run(); }

Scalar conj(const Scalar& s) { return s.conj(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace cgeo
