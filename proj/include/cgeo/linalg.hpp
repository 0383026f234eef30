#pragma once

#include <Eigen/Core>

#include "cgeo/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<cgeo::Scalar> {
  typedef cgeo::Scalar Real;
  typedef cgeo::Scalar NonInteger;
  typedef cgeo::Scalar Literal;
  typedef cgeo::Scalar Nested;
  // IsComplex stays 0: Eigen's conjugation machinery is never used on exact
  // scalars (adjoint() below conjugates explicitly), and flagging complexity
  // would make ScalarBinaryOpTraits ambiguous for a self-real type.
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 100
  };
  static inline Real epsilon() { return cgeo::Scalar(0); }
  static inline Real dummy_precision() { return cgeo::Scalar(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace cgeo {

using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline Mat zero_mat(int n) { return Mat::Constant(n, n, Scalar(0)); }
inline Vec zero_vec(int n) { return Vec::Constant(n, Scalar(0)); }

inline Mat identity_mat(int n) {
  Mat m = zero_mat(n);
  for (int k = 0; k < n; ++k) m(k, k) = Scalar(1);
  return m;
}

inline bool is_zero(const Mat& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

/// Conjugate transpose with the exact conjugation of Q(i,sqrt2).
inline Mat adjoint(const Mat& m) {
  Mat out(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(c, r) = m(r, c).conj();
  return out;
}

inline bool is_hermitian(const Mat& m) { return is_zero(Mat(m - adjoint(m))); }
inline bool is_skew_symmetric(const Mat& m) { return is_zero(Mat(m + Mat(m.transpose()))); }

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }
inline Mat anticommutator(const Mat& a, const Mat& b) { return a * b + b * a; }

inline Scalar trace(const Mat& m) {
  Scalar t;
  for (int k = 0; k < m.rows(); ++k) t += m(k, k);
  return t;
}

}  // namespace cgeo
