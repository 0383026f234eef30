#include "cgeo/two_tensor.hpp"

#include <cassert>

#include "cgeo/errors.hpp"

namespace cgeo {

bool TwoTensorForm::is_zero() const {
  for (const auto& c : comp_)
    if (!c.is_zero()) return false;
  return true;
}

bool TwoTensorForm::last_two_antisymmetric() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (at(i, j, k) != -at(i, k, j)) return false;
  return true;
}

TwoTensorForm& TwoTensorForm::operator+=(const TwoTensorForm& o) {
  assert(dim_ == o.dim_);
  for (size_t t = 0; t < comp_.size(); ++t) comp_[t] += o.comp_[t];
  return *this;
}

TwoTensorForm& TwoTensorForm::operator-=(const TwoTensorForm& o) {
  assert(dim_ == o.dim_);
  for (size_t t = 0; t < comp_.size(); ++t) comp_[t] -= o.comp_[t];
  return *this;
}

TwoTensorForm& TwoTensorForm::operator*=(const Scalar& s) {
  for (auto& c : comp_) c *= s;
  return *this;
}

TwoTensorForm TwoTensorForm::operator-() const {
  TwoTensorForm out(dim_);
  for (size_t t = 0; t < comp_.size(); ++t) out.comp_[t] = -comp_[t];
  return out;
}

Mat TwoTensorForm::slot_endo(int x) const {
  Mat m = zero_mat(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) m(r, c) = at(x, c, r);
  return m;
}

TwoTensorForm TwoTensorForm::from_three_form(const Form& psi) {
  assert(psi.degree() == 3);
  TwoTensorForm b(psi.dim());
  for (int i = 0; i < psi.dim(); ++i)
    for (int j = 0; j < psi.dim(); ++j)
      for (int k = j + 1; k < psi.dim(); ++k) b.set(i, j, k, psi.component({i, j, k}));
  return b;
}

TwoTensorForm TwoTensorForm::tensor(const Form& alpha, const Form& beta) {
  assert(alpha.degree() == 1 && beta.degree() == 2 && alpha.dim() == beta.dim());
  TwoTensorForm b(alpha.dim());
  for (int i = 0; i < alpha.dim(); ++i) {
    if (alpha[i].is_zero()) continue;
    for (int j = 0; j < alpha.dim(); ++j)
      for (int k = j + 1; k < alpha.dim(); ++k)
        b.set(i, j, k, alpha[i] * beta.component({j, k}));
  }
  return b;
}

Form trace_map(const TwoTensorForm& b) {
  Form out(b.dim(), 1);
  for (int k = 0; k < b.dim(); ++k) {
    Scalar s;
    for (int i = 0; i < b.dim(); ++i) s += b.at(i, i, k);
    out[k] = s;
  }
  return out;
}

Form bianchi_map(const TwoTensorForm& b) {
  Form out(b.dim(), 3);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = i + 1; j < b.dim(); ++j)
      for (int k = j + 1; k < b.dim(); ++k)
        out.set_component({i, j, k}, b.at(i, j, k) + b.at(k, i, j) + b.at(j, k, i));
  return out;
}

TwoTensorForm wedge_endo(const Mat& a, const Form& alpha) {
  assert(alpha.degree() == 1);
  int n = alpha.dim();
  TwoTensorForm b(n);
  // (A e_i)_flat(e_j) = g(A e_i, e_j) = a(j, i).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) b.set(i, j, k, a(j, i) * alpha[k] - a(k, i) * alpha[j]);
  return b;
}

TwoTensorForm embed_one_form(const Form& alpha) {
  int n = alpha.dim();
  TwoTensorForm b = wedge_endo(identity_mat(n), alpha);
  return Scalar(1, n - 1) * b;
}

TwoTensorForm mM_involution(const TwoTensorForm& b, const Mat& j) {
  int n = b.dim();
  if (!is_zero(Mat(j * j + identity_mat(n))))
    throw NonComplexStructure("mM involution needs J^2 = -1");
  TwoTensorForm out(n);
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        Scalar s;
        for (int y = 0; y < n; ++y) {
          if (j(y, p).is_zero()) continue;
          for (int z = 0; z < n; ++z) {
            if (j(z, q).is_zero()) continue;
            s += j(y, p) * j(z, q) * b.at(i, y, z);
          }
        }
        out.set(i, p, q, s);
      }
  return out;
}

Omega2Parts decompose_omega2(const TwoTensorForm& b) {
  Omega2Parts parts;
  parts.alpha = trace_map(b);
  parts.psi = Scalar(1, 3) * bianchi_map(b);
  parts.rest = b - embed_one_form(parts.alpha) - TwoTensorForm::from_three_form(parts.psi);
  return parts;
}

Scalar pair_components(const TwoTensorForm& a, const TwoTensorForm& b) {
  Scalar s;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k) s += a.at(i, j, k) * b.at(i, j, k);
  return s;
}

}  // namespace cgeo
