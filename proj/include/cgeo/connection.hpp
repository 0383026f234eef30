#pragma once

#include <vector>

#include "cgeo/frame.hpp"
#include "cgeo/two_tensor.hpp"

namespace cgeo {

/// Metric connection nabla = D + A stored by its potential A^dag relative to
/// Levi-Civita; A^dag(i;j,k) = g(A_{e_i} e_j, e_k) is antisymmetric in (j,k).
class MetricConnection {
 public:
  MetricConnection(const FrameSpec& spec, TwoTensorForm potential);

  static MetricConnection levi_civita(const FrameSpec& spec) {
    return MetricConnection(spec, TwoTensorForm(spec.dim()));
  }
  /// Connection with the given torsion, through A^dag = -T^dag + (1/2) b T^dag.
  static MetricConnection from_torsion(const FrameSpec& spec, const TwoTensorForm& torsion);

  const FrameSpec& spec() const { return spec_; }
  const TwoTensorForm& potential() const { return potential_; }
  TwoTensorForm torsion() const;

  /// Per-direction matrices M_i(k,j) = g(e_k, nabla_{e_i} e_j).
  const std::vector<Mat>& matrices() const { return matrices_; }
  const Mat& matrix(int i) const { return matrices_[i]; }

  /// nabla_{e_i} applied to an invariant endomorphism field.
  Mat covariant_endo(int i, const Mat& s) const { return commutator(matrices_[i], s); }

  bool preserves(const Mat& j) const;  // nabla J = 0
  bool kills_vector(int v) const;      // nabla e_v = 0

 private:
  FrameSpec spec_;
  TwoTensorForm potential_;
  std::vector<Mat> matrices_;
};

/// T^dag = -A^dag + b A^dag.
TwoTensorForm torsion_from_potential(const TwoTensorForm& a);
/// A^dag = -T^dag + (1/2) b T^dag.
TwoTensorForm potential_from_torsion(const TwoTensorForm& t);

std::vector<std::vector<Mat>> curvature(const MetricConnection& conn);

/// tr T^dag = 0, the condition for the induced Dirac operator to be symmetric.
bool is_nice(const MetricConnection& conn);

/// Dirac-equivalence class representative b T^dag (a 3-form).
Form dirac_class(const MetricConnection& conn);

}  // namespace cgeo
