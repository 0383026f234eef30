#pragma once

#include <vector>

#include "cgeo/form.hpp"
#include "cgeo/linalg.hpp"

namespace cgeo {

/// Element of Omega^2(T*M): components B(i;j,k) = B(e_i; e_j, e_k),
/// antisymmetric in the last two slots. Houses torsions T^dag (with
/// T^dag(i;j,k) = g(e_i, T(e_j,e_k))), potentials A^dag (A^dag(i;j,k)
/// = g(A_{e_i} e_j, e_k)) and the B-tensors of the hermitian family.
class TwoTensorForm {
 public:
  TwoTensorForm() : dim_(0) {}
  explicit TwoTensorForm(int dim) : dim_(dim), comp_(static_cast<size_t>(dim) * dim * dim, Scalar(0)) {}

  int dim() const { return dim_; }
  const Scalar& at(int i, int j, int k) const { return comp_[idx(i, j, k)]; }
  /// Sets B(i;j,k) = v and B(i;k,j) = -v.
  void set(int i, int j, int k, const Scalar& v) {
    comp_[idx(i, j, k)] = v;
    comp_[idx(i, k, j)] = -v;
  }
  void add(int i, int j, int k, const Scalar& v) {
    comp_[idx(i, j, k)] += v;
    comp_[idx(i, k, j)] -= v;
  }

  bool is_zero() const;
  /// Checks B(i;j,k) = -B(i;k,j) (true by construction for set/add users).
  bool last_two_antisymmetric() const;

  TwoTensorForm& operator+=(const TwoTensorForm& o);
  TwoTensorForm& operator-=(const TwoTensorForm& o);
  TwoTensorForm& operator*=(const Scalar& s);
  friend TwoTensorForm operator+(TwoTensorForm a, const TwoTensorForm& b) { return a += b; }
  friend TwoTensorForm operator-(TwoTensorForm a, const TwoTensorForm& b) { return a -= b; }
  friend TwoTensorForm operator*(const Scalar& s, TwoTensorForm t) { return t *= s; }
  TwoTensorForm operator-() const;
  friend bool operator==(const TwoTensorForm& a, const TwoTensorForm& b) {
    return a.dim_ == b.dim_ && a.comp_ == b.comp_;
  }

  /// The endomorphism B_{e_x}: (B_x)(r,c) = B(x; c, r), i.e. g(e_r, B_x e_c).
  Mat slot_endo(int x) const;

  /// Inclusion of a 3-form, B(i;j,k) = psi(i,j,k).
  static TwoTensorForm from_three_form(const Form& psi);
  /// alpha tensor beta for a 1-form alpha and 2-form beta: B(i;j,k) = alpha_i beta_{jk}.
  static TwoTensorForm tensor(const Form& alpha, const Form& beta);

 private:
  size_t idx(int i, int j, int k) const {
    return (static_cast<size_t>(i) * dim_ + j) * dim_ + k;
  }

  int dim_;
  std::vector<Scalar> comp_;
};

/// (tr B)_k = sum_i B(i;i,k).
Form trace_map(const TwoTensorForm& b);
/// Bianchi map: cyclic sum into a 3-form.
Form bianchi_map(const TwoTensorForm& b);
/// (A ^ alpha)(X;Y,Z) = (AX)_flat ^ alpha (Y,Z) for an endomorphism A.
TwoTensorForm wedge_endo(const Mat& a, const Form& alpha);
/// Embedding of a 1-form with tr(embed(alpha)) = alpha: (1/(dim-1)) 1_TM ^ alpha.
TwoTensorForm embed_one_form(const Form& alpha);
/// The involution (M B)(X;Y,Z) = B(X;JY,JZ); requires J^2 = -1.
TwoTensorForm mM_involution(const TwoTensorForm& b, const Mat& j);

struct Omega2Parts {
  Form alpha;          // degree 1
  Form psi;            // degree 3
  TwoTensorForm rest;  // trace-free, Bianchi-free part
};
/// Orthogonal decomposition B = embed(alpha) + psi + rest.
Omega2Parts decompose_omega2(const TwoTensorForm& b);

Scalar pair_components(const TwoTensorForm& a, const TwoTensorForm& b);

}  // namespace cgeo
