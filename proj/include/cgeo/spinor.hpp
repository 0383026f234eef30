#pragma once

#include <complex>
#include <vector>

#include "cgeo/contact.hpp"

namespace cgeo {

/// The Clifford module Lambda^{0,*}V* of a metric contact manifold, realized
/// inside the cylinder exterior algebra: an element phi embeds as phi on even
/// degrees and as epsbar^0 ^ phi on odd degrees, and Clifford multiplication
/// is c(alpha) = chat(dt) chat(alpha). Basis: subsets S of {1..n} as bitmasks,
/// orthonormal for the hermitian inner product, graded by |S| mod 2.
class SpinorModule {
 public:
  explicit SpinorModule(ContactData cd);

  const ContactData& contact() const { return cd_; }
  int n() const { return cd_.n; }
  int dim_s() const { return 1 << cd_.n; }
  int frame_dim() const { return cd_.spec.dim(); }

  /// Clifford matrix of the coframe element e^i.
  const Mat& c(int i) const { return c_[i]; }
  Mat clifford_one_form(const Form& alpha) const;
  /// Multiplicative extension over increasing coframe products.
  Mat clifford_form(const Form& f) const;

  /// diag((-1)^{|S|}) = c(i eta).
  const Mat& parity() const { return parity_; }
  /// Intrinsic epsbar^k ^ . and eps^k -| . on the subset basis, k = 1..n.
  const Mat& wedge_bar(int k) const { return wedge_[k - 1]; }
  const Mat& contract_eps(int k) const { return contract_[k - 1]; }

  /// Spin lift of a metric connection: omega-hat_i = -1/4 sum M_i(r,s) c_r c_s.
  std::vector<Mat> spin_connection(const MetricConnection& conn) const;
  /// Spin^c matrices W_i = omega-hat_i + (1/2) a_i for a determinant-line form a.
  std::vector<Mat> spinc_connection(const MetricConnection& conn, const Form& a) const;

  /// Connection on Lambda^{0,*}V* obtained functorially from a contact
  /// connection acting on the epsbar coframe (derivation extension).
  std::vector<Mat> functorial_connection(const MetricConnection& conn) const;

  Mat dirac_matrix(const MetricConnection& conn, const Form& a) const;

  /// det of the cylinder Chern connection restricted to M.
  Form det_chern_restricted() const;

 private:
  ContactData cd_;
  std::vector<Mat> c_;
  std::vector<Mat> wedge_, contract_;
  Mat parity_;
};

struct HodgeDolbeaultBlocks {
  Mat z;  // c(eta) nabla^w_xi, block diagonal
  Mat t;  // sqrt2 (dbar_V + dbar_V^*), block off-diagonal
  Mat h;  // z + t
};

/// Assembles the contact Hodge-Dolbeault operator from its defining blocks,
/// using the Webster connection and the restricted Chern determinant line.
HodgeDolbeaultBlocks hodge_dolbeault_blocks(const SpinorModule& sm);

/// Unique hermitian-connection presentation of a generalized Laplacian
/// L = roughLap(W) + sum_i A_i W_i + B: shifts the connection by C = -A/2 and
/// returns the self-adjoint remainder.
struct WeitzPresentation {
  std::vector<Mat> shift;  // C_i = -A_i/2
  Mat remainder;           // (B + B*)/2 - 1/4 sum A_i A_i^*
};
WeitzPresentation weitzenbock_presentation(const std::vector<Mat>& a, const Mat& b);

/// Rough Laplacian -sum_i (W_i^2 - sum_k Gamma_iik W_k) on invariant sections;
/// requires a unimodular frame.
Mat rough_laplacian(const FrameSpec& spec, const std::vector<Mat>& w);

/// Difference between dirac_matrix(conn,a)^2 and its Weitzenbock presentation
/// roughLap(W^w) + [s/4 + c(d varpi) - 2|varpi|^2] + (1/2) c(da),
/// with varpi = (1/4) b T^dag. Zero when the presentation holds exactly.
Mat weitzenbock_check(const SpinorModule& sm, const MetricConnection& conn, const Form& a);

struct CommutatorSides {
  Mat lhs;       // {Z, T}
  Mat rhs;       // c(P_V * F_w) + 2 T-tilde
  Mat curv_term; // c(P_V * F_w)
  Mat phi_term;  // 2 T-tilde
};
/// dim-3 anticommutator identity; both sides returned for comparison.
CommutatorSides commutator_check(const SpinorModule& sm);

/// Eigenvalues of the float image, sorted by (re, im).
std::vector<std::complex<double>> spectrum(const Mat& op);

}  // namespace cgeo
