#pragma once

#include <vector>

#include "cgeo/linalg.hpp"
#include "cgeo/scalar.hpp"

namespace cgeo {

class FrameSpec;

/// Increasing multi-indices of length p drawn from {0..dim-1}, in
/// lexicographic order, plus rank/unrank helpers.
namespace multi_index {

long binomial(int n, int k);
/// Rank of an increasing tuple in the lexicographic enumeration.
long rank(const std::vector<int>& idx, int dim);
std::vector<int> unrank(long r, int dim, int degree);
std::vector<std::vector<int>> all(int dim, int degree);

/// Sorts an arbitrary tuple; returns the permutation sign, or 0 on repeats.
int sort_sign(std::vector<int>& idx);

}  // namespace multi_index

/// Degree-p invariant form stored by components over increasing multi-indices;
/// component(I) = f(e_{i1},...,e_{ip}) for any tuple, with the permutation sign.
class Form {
 public:
  Form() : dim_(0), degree_(0) {}
  Form(int dim, int degree);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  long size() const { return static_cast<long>(comp_.size()); }

  const Scalar& operator[](long r) const { return comp_[r]; }
  Scalar& operator[](long r) { return comp_[r]; }

  Scalar component(std::vector<int> idx) const;
  /// Adds v to the component at an arbitrary tuple (sign-adjusted).
  void add_component(std::vector<int> idx, const Scalar& v);
  void set_component(std::vector<int> idx, const Scalar& v);

  bool is_zero() const;
  Form conj() const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Scalar& s);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Scalar& s, Form f) { return f *= s; }
  Form operator-() const;
  friend bool operator==(const Form& a, const Form& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.comp_ == b.comp_;
  }

  static Form basis(int dim, std::vector<int> idx);  // e^{i1} ^ ... ^ e^{ip}
  static Form one_form(const Vec& components);

 private:
  int dim_;
  int degree_;
  std::vector<Scalar> comp_;
};

Form wedge(const Form& a, const Form& b);
/// Contraction by the frame vector e_v.
Form contract(int v, const Form& f);
/// Pullback f(A.,...,A.) through an endomorphism in the frame.
Form pullback(const Mat& a, const Form& f);
/// Bilinear pairing sum_I a_I b_I over increasing multi-indices.
Scalar pair_bilinear(const Form& a, const Form& b);
/// Hermitian pairing sum_I conj(a_I) b_I; norm_sq(f) = <f,f>.
Scalar pair_hermitian(const Form& a, const Form& b);
Scalar norm_sq(const Form& f);
/// (J alpha)(X) = -alpha(JX) on one-forms.
Form j_one_form(const Mat& j, const Form& alpha);

Form exterior_d(const FrameSpec& spec, const Form& f);
Form hodge_star(const FrameSpec& spec, const Form& f);

}  // namespace cgeo
