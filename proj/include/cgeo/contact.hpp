#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cgeo/hermitian.hpp"

namespace cgeo {

/// Metric contact manifold presented by an invariant frame. Index 0 carries
/// the Reeb field (eta = e^0, xi = e_0); the remaining indices split into
/// declared pairs (e_k, f_k = J e_k) spanning V = ker eta.
struct ContactData {
  FrameSpec spec{1};  // dim = 2n+1
  Mat j;
  std::vector<std::pair<int, int>> pairs;  // V-pairs, k = 1..n
  int n = 0;

  Form eta() const { return Form::basis(spec.dim(), {0}); }
  Form d_eta() const { return exterior_d(spec, eta()); }
};

/// Violated contact axioms; empty means valid.
std::vector<std::string> validate_contact(const ContactData& cd);

/// Phi = L_xi J, a symmetric traceless endomorphism of V anticommuting with J.
Mat phi_tensor(const ContactData& cd);

/// Half-normalized contact Nijenhuis tensor as an element of Omega^2(T*M).
TwoTensorForm contact_nijenhuis(const ContactData& cd);

/// True iff N(X,Y) + d_eta(X,Y) xi = 0 for all X,Y in V.
bool is_cr(const ContactData& cd);

/// The almost-hermitian cylinder: index 0 is the new central direction d/dt,
/// M-indices shift up by one, J-hat maps d/dt to xi.
AlmostHermitian build_cylinder(const ContactData& cd);

/// Restriction helpers between the cylinder and the base.
Form restrict_one_form(const Form& f);
TwoTensorForm restrict_two_tensor(const TwoTensorForm& b);
Mat restrict_endo(const Mat& m);

/// The B-tensor on the cylinder that makes the basic connection split:
/// B = 1/4 (Phi ^ dt + JPhi ^ eta) - 1/4 (P_V ^ dt + JP_V ^ eta) + 1/2 eta (x) d eta.
TwoTensorForm b0_tensor(const ContactData& cd);

/// Generalized Webster connection from its closed-form torsion.
MetricConnection webster_connection(const ContactData& cd);
/// Same connection obtained by slicing the cylinder basic connection.
MetricConnection webster_from_cylinder(const ContactData& cd);
/// Exact agreement of the two constructions plus the splitting conditions.
bool webster_slice_consistency(const ContactData& cd);

/// Nice contact connection with b T^dag = 0 induced by the symplectization.
MetricConnection sympl_connection(const ContactData& cd);

/// Determinant-line form of a contact connection on the complex bundle (V,J).
Form det_connection_contact(const ContactData& cd, const MetricConnection& conn);

/// (det n^1 - det n^w, det n^1 - det Chern-of-cylinder restricted to M).
std::pair<Form, Form> det_line_compare(const ContactData& cd);

/// True when the torsion vanishes on V^{1,0} x V^{1,0} (CR connection).
bool is_cr_connection(const ContactData& cd, const MetricConnection& conn);

struct ContactConnectionReport {
  TwoTensorForm torsion;
  bool nice = false;
  bool contact = false;  // nabla J = 0 and nabla xi = 0
  bool cr = false;
  Form dirac_class;  // 3-form
  Form det_line;     // imaginary 1-form
};

ContactConnectionReport report_connection(const ContactData& cd, const MetricConnection& conn);

}  // namespace cgeo
