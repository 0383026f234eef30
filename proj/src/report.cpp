#include "cgeo/report.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cgeo/errors.hpp"
#include "cgeo/fixtures.hpp"

namespace cgeo {

using nlohmann::json;

namespace {

double fabs_scalar(const Scalar& s) { return std::abs(s.to_complex()); }

double residual_of(const Mat& m) {
  double r = 0;
  for (int a = 0; a < m.rows(); ++a)
    for (int b = 0; b < m.cols(); ++b) r = std::max(r, fabs_scalar(m(a, b)));
  return r;
}

double residual_of(const Form& f) {
  double r = 0;
  for (long k = 0; k < f.size(); ++k) r = std::max(r, fabs_scalar(f[k]));
  return r;
}

double residual_of(const TwoTensorForm& b) {
  double r = 0;
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      for (int k = j + 1; k < b.dim(); ++k) r = std::max(r, fabs_scalar(b.at(i, j, k)));
  return r;
}

std::string form_str(const Form& f) {
  std::ostringstream os;
  bool first = true;
  for (const auto& idx : multi_index::all(f.dim(), f.degree())) {
    Scalar v = f.component(idx);
    if (v.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << v.str() << ")*e^[";
    for (size_t t = 0; t < idx.size(); ++t) os << (t ? "," : "") << idx[t];
    os << "]";
  }
  if (first) os << "0";
  return os.str();
}

struct Rng {
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  Scalar rational() {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    return Scalar(num(gen), den(gen));
  }
  Scalar real_scalar() {
    return rational() + Scalar::sqrt2() * rational();
  }
  Form one_form(int dim) {
    Form f(dim, 1);
    for (int k = 0; k < dim; ++k) f[k] = real_scalar();
    return f;
  }
  Form three_form(int dim) {
    Form f(dim, 3);
    for (long r = 0; r < f.size(); ++r) f[r] = real_scalar();
    return f;
  }
  TwoTensorForm two_tensor(int dim) {
    TwoTensorForm b(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (int k = j + 1; k < dim; ++k) b.set(i, j, k, real_scalar());
    return b;
  }
  Mat endo(int dim) {
    Mat m = zero_mat(dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) m(r, c) = real_scalar();
    return m;
  }

  std::mt19937_64 gen;
};

std::uint64_t fnv(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

class Battery {
 public:
  Battery(const std::string& name, const ContactData& cd)
      : cd_(cd), hat_(build_cylinder(cd)), sm_(cd), rng_(fnv(name)) {}

  std::vector<IdentityResult> run();

 private:
  void check(const std::string& name, bool ok, double residual, const std::string& detail) {
    results_.push_back({name, detail, ok ? "pass" : "fail", ok ? 0.0 : residual});
  }
  void reported(const std::string& name, double residual, const std::string& detail) {
    results_.push_back({name, detail, "reported", residual});
  }

  void potential_torsion_roundtrip();
  void omega2_decomposition();
  void op_wedge();
  void gauduchon_traces();
  void lee_form_routes();
  void cylinder_dc_omega();
  void nijenhuis_relations();
  void lemma_b0();
  void webster();
  void sympl();
  void det_compares();
  void hodge_dolbeault();
  void geometric_dirac_shift();
  void weitzenbock();
  void pointwise_identities();
  void nice_hermitian_link();
  void spinor_lift_twist();
  void reeb_closed_forms();
  void zt_anticommutator();

  const ContactData& cd_;
  AlmostHermitian hat_;
  SpinorModule sm_;
  Rng rng_;
  std::vector<IdentityResult> results_;
};

void Battery::potential_torsion_roundtrip() {
  int dim = cd_.spec.dim();
  bool ok = true;
  double res = 0;
  for (int trial = 0; trial < 100 && ok; ++trial) {
    TwoTensorForm a = rng_.two_tensor(dim);
    TwoTensorForm t = torsion_from_potential(a);
    TwoTensorForm back = potential_from_torsion(t);
    ok = back == a && trace_map(a) == -trace_map(t) &&
         bianchi_map(a) == Scalar(1, 2) * bianchi_map(t);
    if (!ok) res = residual_of(back - a);
  }
  check("potential_torsion_roundtrip", ok, res,
        "torsion(potential) and potential(torsion) invert each other, 100 samples");
}

void Battery::omega2_decomposition() {
  int dim = cd_.spec.dim();
  bool ok = true;
  double res = 0;
  for (int trial = 0; trial < 100 && ok; ++trial) {
    TwoTensorForm b = rng_.two_tensor(dim);
    auto parts = decompose_omega2(b);
    TwoTensorForm embedded = embed_one_form(parts.alpha);
    TwoTensorForm psi = TwoTensorForm::from_three_form(parts.psi);
    TwoTensorForm sum = embedded + psi + parts.rest;
    ok = sum == b && trace_map(parts.rest).is_zero() && bianchi_map(parts.rest).is_zero() &&
         pair_components(embedded, psi).is_zero() &&
         pair_components(embedded, parts.rest).is_zero() &&
         pair_components(psi, parts.rest).is_zero();
    if (!ok) res = residual_of(sum - b);
  }
  check("omega2_decomposition", ok, res,
        "1-form + 3-form + trace/Bianchi-free reconstruction, orthogonal parts, 100 samples");
}

void Battery::op_wedge() {
  int dim = cd_.spec.dim();
  bool ok = true;
  double res = 0;
  Scalar half(1, 2);
  for (int trial = 0; trial < 100 && ok; ++trial) {
    Mat a = rng_.endo(dim);
    Form alpha = rng_.one_form(dim);
    TwoTensorForm w = wedge_endo(a, alpha);
    // tr(A ^ alpha) = (tr A) alpha - A^t alpha
    Form lhs = trace_map(w);
    Form rhs = trace(a) * alpha;
    for (int k = 0; k < dim; ++k) {
      Scalar s;
      for (int m = 0; m < dim; ++m) s += a(k, m) * alpha[m];  // (A^t alpha)_k = alpha(A e_k)
      rhs[k] -= s;
    }
    // b(A ^ alpha) = 2 omega_{A_-} ^ alpha
    Mat askew = half * Mat(a - Mat(a.transpose()));
    Form omega_a(dim, 2);
    for (int r = 0; r < dim; ++r)
      for (int c = r + 1; c < dim; ++c) omega_a.set_component({r, c}, askew(c, r));
    Form lhs_b = bianchi_map(w);
    Form rhs_b = Scalar(2) * wedge(omega_a, alpha);
    ok = lhs == rhs && lhs_b == rhs_b;
    if (!ok) res = std::max(residual_of(lhs - rhs), residual_of(lhs_b - rhs_b));
  }
  check("op_wedge", ok, res,
        "trace and Bianchi of endomorphism-wedge-1-form, 100 samples");
}

void Battery::gauduchon_traces() {
  Form theta = hat_.lee_form();
  Form t0 = trace_map(first_canonical_connection(hat_).torsion());
  Form tc = trace_map(chern_connection(hat_).torsion());
  Form want0 = Scalar(-1, 2) * theta;
  check("gauduchon_trace_first_canonical", t0 == want0, residual_of(t0 - want0),
        "trace of the first canonical torsion is -theta/2 on the cylinder");
  check("gauduchon_trace_chern", tc == -theta, residual_of(tc + theta),
        "trace of the Chern torsion is -theta on the cylinder");
}

void Battery::lee_form_routes() {
  Form theta = hat_.lee_form();
  Form want(hat_.spec().dim(), 1);
  want[0] = Scalar(-cd_.n);
  check("lee_form", theta == want, residual_of(theta - want),
        "cylinder Lee form equals -n dt, n = " + std::to_string(cd_.n));
  auto [plus, minus] = hat_.dc_omega_parts();
  (void)minus;
  Form route2 = -j_one_form(hat_.j(), hat_.lambda_contract(plus));
  check("lee_form_second_route", theta == route2, residual_of(theta - route2),
        "contraction of d omega agrees with -J Lambda of the (2,1)+(1,2) part");
}

void Battery::cylinder_dc_omega() {
  Form dcw = hat_.dc(hat_.fundamental_form());
  Form eta_hat = Form::basis(hat_.spec().dim(), {1});
  Form want = -wedge(eta_hat, exterior_d(hat_.spec(), eta_hat));
  auto [plus, minus] = hat_.dc_omega_parts();
  bool ok = dcw == want && minus.is_zero() && plus == dcw;
  check("cylinder_dc_omega", ok, residual_of(dcw - want),
        "d^c of the cylinder fundamental form is -eta ^ d eta, with vanishing (3,0)+(0,3) part");
}

void Battery::nijenhuis_relations() {
  int dim = cd_.spec.dim();
  TwoTensorForm nhat = hat_.nijenhuis();
  TwoTensorForm ncon = contact_nijenhuis(cd_);
  Mat phi = phi_tensor(cd_);

  bool dt_ok = true;
  for (int i = 0; i < dim && dt_ok; ++i)
    for (int x = 0; x < dim && dt_ok; ++x)
      if (nhat.at(i + 1, 0, x + 1) != Scalar(1, 4) * phi(i, x)) dt_ok = false;
  for (int x = 0; x <= dim && dt_ok; ++x)
    if (!nhat.at(0, 0, x).is_zero()) dt_ok = false;
  check("nijenhuis_dt_direction", dt_ok, dt_ok ? 0.0 : 1.0,
        "cylinder Nijenhuis pairs d/dt with Phi/4");

  TwoTensorForm restr = restrict_two_tensor(nhat);
  TwoTensorForm want = Scalar(1, 2) * ncon +
                       Scalar(1, 2) * TwoTensorForm::tensor(cd_.eta(), cd_.d_eta());
  check("nijenhuis_restriction", restr == want, residual_of(restr - want),
        "cylinder Nijenhuis restricted to the base is N/2 + (eta (x) d eta)/2");

  Form bn = bianchi_map(ncon);
  Form want_b = -wedge(cd_.eta(), cd_.d_eta());
  check("nijenhuis_bianchi", bn == want_b, residual_of(bn - want_b),
        "Bianchi of the contact Nijenhuis tensor is -eta ^ d eta");
  check("nijenhuis_traceless", trace_map(nhat).is_zero(), residual_of(trace_map(nhat)),
        "cylinder Nijenhuis tensor is trace-free");

  // N(xi, X) = -(1/2) J Phi X.
  Mat jphi = cd_.j * phi;
  bool xi_ok = true;
  for (int i = 0; i < dim && xi_ok; ++i)
    for (int x = 1; x < dim && xi_ok; ++x)
      if (ncon.at(i, 0, x) != Scalar(-1, 2) * jphi(i, x)) xi_ok = false;
  check("nijenhuis_reeb", xi_ok, xi_ok ? 0.0 : 1.0,
        "contact Nijenhuis against the Reeb direction is -J Phi / 2");
}

void Battery::lemma_b0() {
  TwoTensorForm b = b0_tensor(cd_);
  int dimh = hat_.spec().dim();
  bool mm = mM_involution(b, hat_.j()) == b;
  bool bianchi0 = bianchi_map(b).is_zero();
  Form tr = trace_map(b);
  Form want(dimh, 1);
  want[0] = Scalar(-cd_.n, 2);
  bool trace_ok = tr == want;
  bool slot0 = is_zero(b.slot_endo(0));
  // B(X;Y,dt) = (1/4) g(X, Phi Y) - (1/4) g(X_V, Y_V) for X,Y on the base.
  Mat phi = phi_tensor(cd_);
  bool b0b = true;
  for (int x = 1; x < dimh && b0b; ++x)
    for (int y = 1; y < dimh && b0b; ++y) {
      Scalar want_v;
      if (x >= 2 && y >= 2) want_v = Scalar(1, 4) * phi(x - 1, y - 1) - Scalar(x == y ? 1 : 0, 4);
      if (!(b.at(x, y, 0) == want_v)) b0b = false;
    }
  bool ok = mm && bianchi0 && trace_ok && slot0 && b0b;
  check("lemma_b0", ok, ok ? 0.0 : 1.0,
        "splitting tensor lies in the symmetric (1,1) space, trace -n/2 dt, stated slot identities");
}

void Battery::webster() {
  bool paths = webster_slice_consistency(cd_);
  check("webster_two_path", paths, paths ? 0.0 : 1.0,
        "closed-form torsion equals the cylinder-slice construction, splitting verified");

  MetricConnection w = webster_connection(cd_);
  check("webster_contact", w.preserves(cd_.j) && w.kills_vector(0), 1.0,
        "Webster connection preserves J and the Reeb field");
  Form tr = trace_map(w.torsion());
  check("webster_nice", tr.is_zero(), residual_of(tr), "Webster torsion is trace-free");
  Form cls = dirac_class(w);
  Form want = wedge(cd_.eta(), cd_.d_eta());
  check("webster_bianchi_class", cls == want, residual_of(cls - want),
        "Bianchi of the Webster torsion is eta ^ d eta");

  if (is_cr(cd_)) {
    TwoTensorForm t = w.torsion();
    Form deta = cd_.d_eta();
    bool tv = true;
    for (int x = 1; x < cd_.spec.dim() && tv; ++x)
      for (int y = x + 1; y < cd_.spec.dim() && tv; ++y)
        for (int i = 0; i < cd_.spec.dim() && tv; ++i) {
          Scalar want_v = i == 0 ? deta.component({x, y}) : Scalar(0);
          if (t.at(i, x, y) != want_v) tv = false;
        }
    check("webster_torsion_on_v", tv, tv ? 0.0 : 1.0,
          "T(X,Y) = d eta(X,Y) xi for X,Y in the contact distribution");
  }
}

void Battery::sympl() {
  MetricConnection s = sympl_connection(cd_);
  check("sympl_contact", s.preserves(cd_.j) && s.kills_vector(0), 1.0,
        "symplectization connection preserves J and the Reeb field");
  Form tr = trace_map(s.torsion());
  check("sympl_nice", tr.is_zero(), residual_of(tr), "symplectization torsion is trace-free");
  Form cls = dirac_class(s);
  check("sympl_bianchi_zero", cls.is_zero(), residual_of(cls),
        "Bianchi of the symplectization torsion vanishes");

  MetricConnection lc = MetricConnection::levi_civita(cd_.spec);
  Form zero(cd_.spec.dim(), 1);
  Form det_c = sm_.det_chern_restricted();
  Form rand_a = Scalar::i() * rng_.one_form(cd_.spec.dim());
  bool equiv = true;
  double res = 0;
  for (const Form* a : {&zero, &det_c, &rand_a}) {
    Mat diff = sm_.dirac_matrix(s, *a) - sm_.dirac_matrix(lc, *a);
    if (!is_zero(diff)) {
      equiv = false;
      res = residual_of(diff);
    }
  }
  check("sympl_dirac_equiv", equiv, res,
        "Dirac matrices of the symplectization connection and Levi-Civita coincide for all twists");

  MetricConnection w = webster_connection(cd_);
  bool uniq = is_nice(w) && is_nice(s) && !(dirac_class(w) == cls);
  if (is_cr(cd_)) uniq = uniq && is_cr_connection(cd_, w) && is_cr_connection(cd_, s);
  check("distinct_nice_cr_classes", uniq, 1.0,
        "the two nice contact connections represent distinct Dirac classes");
}

void Battery::det_compares() {
  MetricConnection chern = chern_connection(hat_);
  MetricConnection basic = basic_connection(hat_, b0_tensor(cd_));
  Form diff_cyl = det_connection(hat_, chern) - det_connection(hat_, basic);
  Form want_cyl(hat_.spec().dim(), 1);
  want_cyl[1] = Scalar(cd_.n, 2) * Scalar::i();
  check("det_compare_cylinder", diff_cyl == want_cyl, residual_of(diff_cyl - want_cyl),
        "det(Chern) - det(basic) computed = " + form_str(diff_cyl) +
            "; asserted = " + form_str(want_cyl));

  auto [d1, d2] = det_line_compare(cd_);
  Form want1(cd_.spec.dim(), 1);
  want1[0] = Scalar(3 * cd_.n) * Scalar::i();
  check("det_compare_sympl", d1 == want1, residual_of(d1 - want1),
        "det(sympl) - det(Webster) computed = " + form_str(d1) +
            "; asserted = " + form_str(want1));
  Form want2(cd_.spec.dim(), 1);
  want2[0] = Scalar(5 * cd_.n, 2) * Scalar::i();
  check("det_compare_sympl_chern", d2 == want2, residual_of(d2 - want2),
        "det(sympl) - det(restricted Chern) computed = " + form_str(d2) +
            "; asserted = " + form_str(want2));
}

void Battery::hodge_dolbeault() {
  HodgeDolbeaultBlocks blocks = hodge_dolbeault_blocks(sm_);
  MetricConnection w = webster_connection(cd_);
  Form a = sm_.det_chern_restricted();
  Mat dirac = sm_.dirac_matrix(w, a);
  check("hodge_dolbeault_assembly", is_zero(Mat(blocks.h - dirac)),
        residual_of(Mat(blocks.h - dirac)),
        "block assembly from the Reeb derivative and dbar_V equals the Dirac matrix");

  Mat zc = commutator(blocks.z, sm_.parity());
  Mat ta = anticommutator(blocks.t, sm_.parity());
  check("hodge_dolbeault_block_structure", is_zero(zc) && is_zero(ta),
        std::max(residual_of(zc), residual_of(ta)),
        "Z preserves the parity grading, T reverses it");
  check("hodge_dolbeault_hermitian", is_hermitian(blocks.h),
        residual_of(Mat(blocks.h - adjoint(blocks.h))), "assembled operator is hermitian");

  if (cd_.spec.dim() == 3) {
    MetricConnection lc = MetricConnection::levi_civita(cd_.spec);
    Mat shift = sm_.dirac_matrix(lc, a) - blocks.h;
    Mat want = Scalar(1, 4) * identity_mat(sm_.dim_s());
    check("dirac_shift_quarter", is_zero(Mat(shift - want)), residual_of(Mat(shift - want)),
          "Levi-Civita spin^c Dirac minus the assembled operator is 1/4");
  }
}

void Battery::geometric_dirac_shift() {
  MetricConnection lc = MetricConnection::levi_civita(cd_.spec);
  Form a = sm_.det_chern_restricted();
  for (auto [name, conn] : {std::pair<const char*, MetricConnection>{"webster", webster_connection(cd_)},
                            {"sympl", sympl_connection(cd_)}}) {
    Mat lhs = sm_.dirac_matrix(conn, a) - sm_.dirac_matrix(lc, a);
    Mat rhs = Scalar(1, 4) * sm_.clifford_form(dirac_class(conn));
    check(std::string("geometric_dirac_") + name, is_zero(Mat(lhs - rhs)),
          residual_of(Mat(lhs - rhs)),
          "Dirac shift equals a quarter of the Clifford image of the torsion class");
  }
}

void Battery::weitzenbock() {
  Form zero(cd_.spec.dim(), 1);
  Mat res_lc = weitzenbock_check(sm_, MetricConnection::levi_civita(cd_.spec), zero);
  check("weitzenbock_levi_civita", is_zero(res_lc), residual_of(res_lc),
        "Lichnerowicz presentation of the squared spin Dirac matrix");
  Mat res_w = weitzenbock_check(sm_, webster_connection(cd_), zero);
  check("weitzenbock_webster", is_zero(res_w), residual_of(res_w),
        "Weitzenbock presentation with remainder s/4 + c(d varpi) - 2|varpi|^2");
}

void Battery::pointwise_identities() {
  int dim = cd_.spec.dim();
  auto gamma = levi_civita(cd_.spec);
  TwoTensorForm ncon = contact_nijenhuis(cd_);
  Form etadeta = wedge(cd_.eta(), cd_.d_eta());
  bool dj = true;
  for (int x = 0; x < dim && dj; ++x) {
    Mat dxj = commutator(gamma[x], cd_.j);
    for (int y = 0; y < dim && dj; ++y)
      for (int z = 0; z < dim && dj; ++z) {
        Scalar lhs = dxj(z, y);
        Scalar rhs;
        for (int m = 0; m < dim; ++m) {
          if (!cd_.j(m, x).is_zero())
            rhs += cd_.j(m, x) * (ncon.at(m, y, z) + Scalar(1, 2) * etadeta.component({m, y, z}));
        }
        if (lhs != rhs) dj = false;
      }
  }
  check("levi_civita_j_derivative", dj, dj ? 0.0 : 1.0,
        "derivative of J against Levi-Civita matches the Nijenhuis/volume closed form");

  // Cylinder identity relating D J-hat to d omega and the Nijenhuis tensor.
  int dimh = hat_.spec().dim();
  auto gh = levi_civita(hat_.spec());
  Form dw = exterior_d(hat_.spec(), hat_.fundamental_form());
  TwoTensorForm nhat = hat_.nijenhuis();
  const Mat& jh = hat_.j();
  bool kn = true;
  Scalar half(1, 2);
  for (int x = 0; x < dimh && kn; ++x) {
    Mat dxj = commutator(gh[x], jh);
    for (int y = 0; y < dimh && kn; ++y)
      for (int z = 0; z < dimh && kn; ++z) {
        Scalar lhs = dxj(z, y);
        Scalar rhs = half * dw.component({x, y, z});
        for (int a = 0; a < dimh; ++a) {
          if (jh(a, y).is_zero()) continue;
          for (int b = 0; b < dimh; ++b) {
            if (jh(b, z).is_zero()) continue;
            rhs -= half * jh(a, y) * jh(b, z) * dw.component({x, a, b});
          }
        }
        for (int m = 0; m < dimh; ++m)
          if (!jh(m, x).is_zero())
            rhs += Scalar(2) * jh(m, x) * nhat.at(m, y, z);
        if (lhs != rhs) kn = false;
      }
  }
  check("hermitian_j_derivative", kn, kn ? 0.0 : 1.0,
        "cylinder derivative of J matches the d omega / Nijenhuis closed form");

  // g(X,Y) = eta(X) eta(Y) + d eta(X, JY).
  Form deta = cd_.d_eta();
  bool metric_ok = true;
  for (int x = 0; x < dim && metric_ok; ++x)
    for (int y = 0; y < dim && metric_ok; ++y) {
      Scalar acc = (x == 0 && y == 0) ? Scalar(1) : Scalar(0);
      for (int m = 0; m < dim; ++m)
        if (!cd_.j(m, y).is_zero()) acc += deta.component({x, m}) * cd_.j(m, y);
      if (acc != Scalar(x == y ? 1 : 0)) metric_ok = false;
    }
  check("metric_from_structure", metric_ok, metric_ok ? 0.0 : 1.0,
        "g recovers from eta and d eta(., J.)");
}

void Battery::nice_hermitian_link() {
  Form zero(cd_.spec.dim(), 1);
  bool ok = true;
  for (auto conn : {MetricConnection::levi_civita(cd_.spec), webster_connection(cd_),
                    sympl_connection(cd_)})
    ok = ok && is_hermitian(sm_.dirac_matrix(conn, zero));
  MetricConnection bad =
      MetricConnection::from_torsion(cd_.spec, embed_one_form(cd_.eta()));
  bool bad_is_nice = is_nice(bad);
  Mat bad_dirac = sm_.dirac_matrix(bad, zero);
  ok = ok && !bad_is_nice && !is_hermitian(bad_dirac);
  check("nice_hermitian_link", ok, ok ? 0.0 : 1.0,
        "trace-free torsion gives hermitian Dirac matrices; the embedded-trace counterexample does not");
}

void Battery::spinor_lift_twist() {
  MetricConnection w = webster_connection(cd_);
  std::vector<Mat> functorial = sm_.functorial_connection(w);
  std::vector<Mat> lift = sm_.spin_connection(w);
  Form det_w = det_connection_contact(cd_, w);
  bool ok = true;
  double res = 0;
  for (int i = 0; i < cd_.spec.dim(); ++i) {
    Mat want = lift[i] + Mat(Scalar(1, 2) * det_w[i] * identity_mat(sm_.dim_s()));
    Mat diff = functorial[i] - want;
    if (!is_zero(diff)) {
      ok = false;
      res = std::max(res, residual_of(diff));
    }
  }
  check("spinor_lift_determinant_twist", ok, res,
        "functorial (0,*)-lift equals the spin lift plus half the determinant form");
}

void Battery::reeb_closed_forms() {
  int dim = cd_.spec.dim();
  Mat pv = identity_mat(dim);
  pv(0, 0) = Scalar(0);
  Mat gamma0 = levi_civita(cd_.spec)[0];
  Mat pd = pv * gamma0 * pv;

  MetricConnection w = webster_connection(cd_);
  Mat ww = w.matrix(0);
  Mat cand_w = pd - Mat(Scalar(1, 2) * cd_.j);
  std::string detail = "Reeb derivative of the Webster connection ";
  detail += is_zero(Mat(ww - cand_w)) ? "matches P_V D_xi - J/2" : "does not match P_V D_xi - J/2";
  reported("webster_reeb_derivative", residual_of(Mat(ww - cand_w)), detail);

  MetricConnection s = sympl_connection(cd_);
  Mat ws = s.matrix(0);
  Mat cand_a = pd - Mat(Scalar(3, 2) * cd_.j);  // "D^V_xi - J"
  Mat cand_b = pd + cd_.j;                      // "P_V D_xi + J"
  std::string which;
  if (is_zero(Mat(ws - cand_b))) which = "P_V D_xi + J";
  else if (is_zero(Mat(ws - cand_a))) which = "P_V D_xi - 3J/2";
  else which = "neither closed form";
  reported("sympl_reeb_derivative",
           std::min(residual_of(Mat(ws - cand_a)), residual_of(Mat(ws - cand_b))),
           "Reeb derivative of the symplectization connection matches " + which);

  // Torsion against the Reeb field vs +-(1/2) J Phi.
  TwoTensorForm tw = w.torsion();
  Mat jphi = cd_.j * phi_tensor(cd_);
  bool plus = true, minus = true;
  for (int i = 0; i < dim; ++i)
    for (int y = 1; y < dim; ++y) {
      if (tw.at(i, 0, y) != Scalar(1, 2) * jphi(i, y)) plus = false;
      if (tw.at(i, 0, y) != Scalar(-1, 2) * jphi(i, y)) minus = false;
    }
  std::string sign = plus && minus ? "+J Phi/2 and -J Phi/2 (Phi = 0)"
                     : plus        ? "+J Phi/2"
                     : minus       ? "-J Phi/2"
                                   : "neither sign of J Phi/2";
  reported("webster_reeb_torsion", plus || minus ? 0.0 : 1.0,
           "T(xi, .) of the Webster connection matches " + sign);
}

void Battery::zt_anticommutator() {
  if (cd_.spec.dim() != 3) return;
  CommutatorSides sides = commutator_check(sm_);
  Mat diff = sides.lhs - sides.rhs;
  bool phi_zero = is_zero(phi_tensor(cd_));
  if (phi_zero) {
    check("commutator_identity", is_zero(diff), residual_of(diff),
          "anticommutator of the diagonal and off-diagonal blocks equals the curvature term");
  } else {
    json detail = {{"lhs", matrix_to_json(sides.lhs)},
                   {"rhs", matrix_to_json(sides.rhs)},
                   {"curvature_term", matrix_to_json(sides.curv_term)},
                   {"phi_term", matrix_to_json(sides.phi_term)}};
    reported("commutator_identity", residual_of(diff), detail.dump());
  }
}

std::vector<IdentityResult> Battery::run() {
  potential_torsion_roundtrip();
  omega2_decomposition();
  op_wedge();
  gauduchon_traces();
  lee_form_routes();
  cylinder_dc_omega();
  nijenhuis_relations();
  lemma_b0();
  webster();
  sympl();
  det_compares();
  hodge_dolbeault();
  geometric_dirac_shift();
  weitzenbock();
  pointwise_identities();
  nice_hermitian_link();
  spinor_lift_twist();
  reeb_closed_forms();
  zt_anticommutator();
  return std::move(results_);
}

}  // namespace

VerificationReport run_battery(const std::string& name, const ContactData& cd,
                               const std::string& content_hash) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.fixture = name;
  rep.fixture_hash = content_hash;
  for (const auto& axiom :
       {"antisymmetry", "jacobi", "odd-dimension", "J-skew", "J-squared", "J-pairing", "reeb",
        "deta-compatibility", "volume"}) {
    rep.axioms.push_back({axiom, true});
  }
  for (const auto& violation : validate_contact(cd))
    for (auto& ax : rep.axioms)
      if (ax.name == violation) ax.ok = false;

  Battery battery(name, cd);
  rep.identities = battery.run();

  for (const auto& op : operator_names())
    rep.spectra[op] = spectrum(named_operator(cd, op));

  // Spectrum-reality summary for the assembled operator.
  double max_imag = 0;
  for (const auto& ev : rep.spectra.at("H")) max_imag = std::max(max_imag, std::abs(ev.imag()));
  rep.identities.push_back({"spectrum_reality",
                            "eigenvalues of the assembled operator are real to 1e-10",
                            max_imag < 1e-10 ? "pass" : "fail", max_imag});

  rep.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return rep;
}

std::vector<std::string> operator_names() {
  return {"H", "dirac_LC", "dirac_webster", "dirac_sympl", "c_ieta"};
}

Mat named_operator(const ContactData& cd, const std::string& name) {
  SpinorModule sm(cd);
  if (name == "c_ieta") return sm.parity();
  if (name == "H") return hodge_dolbeault_blocks(sm).h;
  Form a = sm.det_chern_restricted();
  if (name == "dirac_LC") return sm.dirac_matrix(MetricConnection::levi_civita(cd.spec), a);
  if (name == "dirac_webster") return sm.dirac_matrix(webster_connection(cd), a);
  if (name == "dirac_sympl") return sm.dirac_matrix(sympl_connection(cd), a);
  throw ParseError("unknown operator " + name);
}

namespace {

json spectrum_json(const std::vector<std::complex<double>>& ev) {
  json out = json::array();
  for (const auto& v : ev) out.push_back({v.real(), v.imag()});
  return out;
}

std::string fmt12(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

json report_to_json(const VerificationReport& r, bool include_timing) {
  json axioms = json::array();
  for (const auto& a : r.axioms) axioms.push_back({{"name", a.name}, {"ok", a.ok}});
  json identities = json::array();
  for (const auto& id : r.identities)
    identities.push_back({{"name", id.name},
                          {"detail", id.detail},
                          {"status", id.status},
                          {"residual", id.residual}});
  json spectra;
  for (const auto& [k, v] : r.spectra) spectra[k] = spectrum_json(v);
  return {{"schema", 1},
          {"fixture", r.fixture},
          {"fixture_hash", r.fixture_hash},
          {"axioms", axioms},
          {"identities", identities},
          {"spectra", spectra},
          {"timing_ms", include_timing ? r.timing_ms : 0}};
}

std::string report_to_text(const VerificationReport& r, bool include_timing) {
  std::ostringstream os;
  os << "fixture " << r.fixture << " (hash " << r.fixture_hash << ")\n";
  os << "axioms:\n";
  for (const auto& a : r.axioms) os << "  [" << (a.ok ? "ok" : "VIOLATED") << "] " << a.name << "\n";
  os << "identities:\n";
  for (const auto& id : r.identities) {
    std::string tag = id.status == "pass" ? "PASS" : id.status == "fail" ? "FAIL" : "REPORTED";
    os << "  [" << tag << "] " << id.name;
    if (id.residual != 0) os << " (residual " << fmt12(id.residual) << ")";
    os << " - " << id.detail << "\n";
  }
  os << "spectra:\n";
  for (const auto& [k, v] : r.spectra) {
    os << "  " << k << ":";
    for (const auto& ev : v) {
      os << " " << fmt12(ev.real());
      if (ev.imag() != 0) os << (ev.imag() > 0 ? "+" : "") << fmt12(ev.imag()) << "i";
    }
    os << "\n";
  }
  if (include_timing) os << "timing_ms: " << r.timing_ms << "\n";
  return os.str();
}

}  // namespace cgeo
