#pragma once

#include <string>
#include <vector>

#include "cgeo/form.hpp"
#include "cgeo/linalg.hpp"

namespace cgeo {

/// A manifold presented by an invariant orthonormal frame: all geometry is
/// encoded in the structure constants c^k_{ij} with [e_i,e_j] = sum_k c^k_{ij} e_k.
/// The metric is the identity in this frame by definition.
class FrameSpec {
 public:
  FrameSpec(int dim, int orientation = 1);

  int dim() const { return dim_; }
  int orientation() const { return orientation_; }
  bool unimodular() const { return unimodular_; }

  const Scalar& c(int k, int i, int j) const { return c_[(static_cast<size_t>(k) * dim_ + i) * dim_ + j]; }
  /// g([e_i,e_j], e_k); equals c^k_{ij} for orthonormal frames.
  const Scalar& c_metric(int i, int j, int k) const { return c(k, i, j); }
  /// Sets c^k_{ij} = v and c^k_{ji} = -v.
  void set_c(int k, int i, int j, const Scalar& v);

  Vec bracket(int i, int j) const;

  /// Violated structure-constant conditions ("antisymmetry", "jacobi"), empty if valid.
  std::vector<std::string> validate() const;

  Form volume_form() const;

 private:
  void refresh_unimodular();

  int dim_;
  int orientation_;
  bool unimodular_ = true;
  std::vector<Scalar> c_;
};

/// Levi-Civita connection matrices: result[i](k,j) = g(D_{e_i} e_j, e_k),
/// from the Koszul formula specialized to invariant orthonormal frames.
std::vector<Mat> levi_civita(const FrameSpec& spec);

/// Curvature F(e_i,e_j) = [M_i,M_j] - sum_k c^k_{ij} M_k of per-direction
/// connection matrices M_i on invariant sections.
std::vector<std::vector<Mat>> curvature_matrices(const FrameSpec& spec, const std::vector<Mat>& m);

Scalar scalar_curvature(const FrameSpec& spec);

/// (L_{e_x} J) for an invariant endomorphism field J.
Mat lie_derivative_endo(const FrameSpec& spec, int x, const Mat& j);

}  // namespace cgeo
