#include "cgeo/frame.hpp"

#include <cassert>

namespace cgeo {

FrameSpec::FrameSpec(int dim, int orientation) : dim_(dim), orientation_(orientation) {
  assert(dim > 0);
  assert(orientation == 1 || orientation == -1);
  c_.assign(static_cast<size_t>(dim) * dim * dim, Scalar(0));
}

void FrameSpec::set_c(int k, int i, int j, const Scalar& v) {
  c_[(static_cast<size_t>(k) * dim_ + i) * dim_ + j] = v;
  c_[(static_cast<size_t>(k) * dim_ + j) * dim_ + i] = -v;
  refresh_unimodular();
}

Vec FrameSpec::bracket(int i, int j) const {
  Vec out = zero_vec(dim_);
  for (int k = 0; k < dim_; ++k) out[k] = c(k, i, j);
  return out;
}

void FrameSpec::refresh_unimodular() {
  // tr(ad_{e_i}) = sum_k c^k_{ik} must vanish for every i.
  unimodular_ = true;
  for (int i = 0; i < dim_ && unimodular_; ++i) {
    Scalar t;
    for (int k = 0; k < dim_; ++k) t += c(k, i, k);
    if (!t.is_zero()) unimodular_ = false;
  }
}

std::vector<std::string> FrameSpec::validate() const {
  std::vector<std::string> bad;
  for (int k = 0; k < dim_; ++k)
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        if (c(k, i, j) != -c(k, j, i)) {
          bad.push_back("antisymmetry");
          goto jacobi;
        }
jacobi:
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        for (int l = 0; l < dim_; ++l) {
          Scalar s;
          for (int m = 0; m < dim_; ++m)
            s += c(m, i, j) * c(l, m, k) + c(m, j, k) * c(l, m, i) + c(m, k, i) * c(l, m, j);
          if (!s.is_zero()) {
            bad.push_back("jacobi");
            return bad;
          }
        }
  return bad;
}

Form FrameSpec::volume_form() const {
  std::vector<int> idx(dim_);
  for (int k = 0; k < dim_; ++k) idx[k] = k;
  Form f = Form::basis(dim_, idx);
  if (orientation_ < 0) f = -f;
  return f;
}

std::vector<Mat> levi_civita(const FrameSpec& spec) {
  int n = spec.dim();
  std::vector<Mat> gamma(n, zero_mat(n));
  // 2 g(D_{e_i} e_j, e_k) = c_{ijk} + c_{kij} + c_{kji} in metric notation
  // c_{abc} = g([e_a,e_b],e_c).
  Scalar half(1, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        gamma[i](k, j) =
            half * (spec.c_metric(i, j, k) + spec.c_metric(k, i, j) + spec.c_metric(k, j, i));
  return gamma;
}

std::vector<std::vector<Mat>> curvature_matrices(const FrameSpec& spec, const std::vector<Mat>& m) {
  int n = spec.dim();
  std::vector<std::vector<Mat>> f(n, std::vector<Mat>(n, zero_mat(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat fij = commutator(m[i], m[j]);
      for (int k = 0; k < n; ++k) {
        const Scalar& ck = spec.c(k, i, j);
        if (!ck.is_zero()) fij -= Mat(ck * m[k]);
      }
      f[i][j] = fij;
    }
  return f;
}

Scalar scalar_curvature(const FrameSpec& spec) {
  auto gamma = levi_civita(spec);
  auto f = curvature_matrices(spec, gamma);
  Scalar s;
  for (int i = 0; i < spec.dim(); ++i)
    for (int j = 0; j < spec.dim(); ++j) s += f[i][j](i, j);
  return s;
}

Mat lie_derivative_endo(const FrameSpec& spec, int x, const Mat& j) {
  int n = spec.dim();
  Mat out = zero_mat(n);
  for (int col = 0; col < n; ++col) {
    Vec v = zero_vec(n);
    // [e_x, J e_col] - J [e_x, e_col]
    for (int m = 0; m < n; ++m) {
      const Scalar& jm = j(m, col);
      if (!jm.is_zero()) v += Vec(jm * spec.bracket(x, m));
    }
    v -= Vec(j * spec.bracket(x, col));
    for (int r = 0; r < n; ++r) out(r, col) = v[r];
  }
  return out;
}

}  // namespace cgeo
