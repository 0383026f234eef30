#include "cgeo/connection.hpp"

#include <cassert>

namespace cgeo {

MetricConnection::MetricConnection(const FrameSpec& spec, TwoTensorForm potential)
    : spec_(spec), potential_(std::move(potential)) {
  assert(potential_.dim() == spec.dim());
  assert(potential_.last_two_antisymmetric());
  matrices_ = cgeo::levi_civita(spec_);
  for (int i = 0; i < spec_.dim(); ++i) matrices_[i] += potential_.slot_endo(i);
}

MetricConnection MetricConnection::from_torsion(const FrameSpec& spec, const TwoTensorForm& torsion) {
  return MetricConnection(spec, potential_from_torsion(torsion));
}

TwoTensorForm MetricConnection::torsion() const { return torsion_from_potential(potential_); }

bool MetricConnection::preserves(const Mat& j) const {
  for (int i = 0; i < spec_.dim(); ++i)
    if (!is_zero(covariant_endo(i, j))) return false;
  return true;
}

bool MetricConnection::kills_vector(int v) const {
  for (int i = 0; i < spec_.dim(); ++i)
    for (int r = 0; r < spec_.dim(); ++r)
      if (!matrices_[i](r, v).is_zero()) return false;
  return true;
}

TwoTensorForm torsion_from_potential(const TwoTensorForm& a) {
  return -a + TwoTensorForm::from_three_form(bianchi_map(a));
}

TwoTensorForm potential_from_torsion(const TwoTensorForm& t) {
  return -t + TwoTensorForm::from_three_form(Scalar(1, 2) * bianchi_map(t));
}

std::vector<std::vector<Mat>> curvature(const MetricConnection& conn) {
  return curvature_matrices(conn.spec(), conn.matrices());
}

bool is_nice(const MetricConnection& conn) { return trace_map(conn.torsion()).is_zero(); }

Form dirac_class(const MetricConnection& conn) { return bianchi_map(conn.torsion()); }

}  // namespace cgeo
