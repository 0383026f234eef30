#pragma once

#include <utility>
#include <vector>

#include "cgeo/connection.hpp"
#include "cgeo/frame.hpp"

namespace cgeo {

/// Even-dimensional frame with a compatible almost complex structure and a
/// declared adapted pairing f_k = J e_k. The pairing fixes the unitary frame
/// eps_k = (e_k - i f_k)/sqrt2 used for all (p,q) bookkeeping.
class AlmostHermitian {
 public:
  AlmostHermitian(FrameSpec spec, Mat j, std::vector<std::pair<int, int>> pairs);

  const FrameSpec& spec() const { return spec_; }
  const Mat& j() const { return j_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int pair_count() const { return static_cast<int>(pairs_.size()); }

  /// omega(X,Y) = g(JX,Y).
  Form fundamental_form() const;

  /// Component transform between the real coframe basis and the complex
  /// frame basis indexed by (eps^0, epsbar^0, eps^1, epsbar^1, ...).
  Form to_complex_basis(const Form& f) const;
  Form from_complex_basis(const Form& f) const;
  /// Keeps only components of bidegree (p,q).
  Form pq_project(const Form& f, int p, int q) const;
  /// Omega^+ = (2,1)+(1,2) and Omega^- = (3,0)+(0,3) parts of a 3-form.
  std::pair<Form, Form> omega3_split(const Form& f) const;

  /// d^c f = df with every argument rotated through -J.
  Form dc(const Form& f) const;
  std::pair<Form, Form> dc_omega_parts() const;

  /// Adjoint of (omega ^ .) under the orthonormal component pairing.
  Form lambda_contract(const Form& f) const;
  Form lee_form() const;

  /// Quarter-normalized Nijenhuis tensor as an element of Omega^2(T*M).
  TwoTensorForm nijenhuis() const;

 private:
  FrameSpec spec_;
  Mat j_;
  std::vector<std::pair<int, int>> pairs_;
};

struct GauduchonParams {
  Form psi_plus;     // 3-form in Omega^+
  TwoTensorForm b;   // element of Omega^{1,1}_s
};

/// Throws InvalidParams unless psi_plus is in Omega^+ and b is in Omega^{1,1}_s.
void validate_params(const AlmostHermitian& ah, const GauduchonParams& p);

/// Torsion of the hermitian family member nabla(psi^+, B).
TwoTensorForm gauduchon_torsion(const AlmostHermitian& ah, const GauduchonParams& p);
MetricConnection gauduchon_connection(const AlmostHermitian& ah, const GauduchonParams& p);

MetricConnection first_canonical_connection(const AlmostHermitian& ah);
MetricConnection chern_connection(const AlmostHermitian& ah);
/// Nice member Dirac-equivalent to the first canonical connection; needs
/// tr B = theta/2 with B in Omega^{1,1}_s.
MetricConnection basic_connection(const AlmostHermitian& ah, const TwoTensorForm& b);

/// The imaginary 1-form a with nabla_X (eps_0 ^ ... ^ eps_m) = a(X) (...)
/// for a hermitian connection; throws NonHermitianConnection otherwise.
Form det_connection(const AlmostHermitian& ah, const MetricConnection& conn);

}  // namespace cgeo
