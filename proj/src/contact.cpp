#include "cgeo/contact.hpp"

#include <cassert>

#include "cgeo/errors.hpp"

namespace cgeo {

namespace {

Mat projection_v(int dim) {
  Mat p = identity_mat(dim);
  p(0, 0) = Scalar(0);
  return p;
}

/// Extends an endomorphism of M (dim d) to the cylinder (dim d+1) by zero on
/// the new direction; index m of M becomes m+1.
Mat extend_endo(const Mat& m) {
  int d = static_cast<int>(m.rows());
  Mat out = zero_mat(d + 1);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) out(r + 1, c + 1) = m(r, c);
  return out;
}

}  // namespace

std::vector<std::string> validate_contact(const ContactData& cd) {
  std::vector<std::string> bad = cd.spec.validate();
  int dim = cd.spec.dim();
  if (dim % 2 == 0 || cd.n * 2 + 1 != dim) bad.push_back("odd-dimension");
  if (!is_skew_symmetric(cd.j)) bad.push_back("J-skew");

  // J^2 = -1 + eta (x) xi.
  Mat expect = -identity_mat(dim);
  expect(0, 0) = Scalar(0);
  if (!is_zero(Mat(cd.j * cd.j - expect))) bad.push_back("J-squared");

  // Declared pairing f_k = J e_k, with {xi} + pairs exhausting the frame.
  std::vector<bool> used(dim, false);
  used[0] = true;
  bool pairing_ok = true;
  for (auto [e, f] : cd.pairs) {
    if (e <= 0 || f <= 0 || e >= dim || f >= dim || used[e] || used[f]) {
      pairing_ok = false;
      break;
    }
    used[e] = used[f] = true;
    for (int r = 0; r < dim; ++r)
      if (cd.j(r, e) != Scalar(r == f ? 1 : 0)) pairing_ok = false;
  }
  for (bool u : used) pairing_ok = pairing_ok && u;
  if (!pairing_ok) bad.push_back("J-pairing");

  Form deta = cd.d_eta();
  // Reeb condition xi -| d eta = 0.
  if (!contract(0, deta).is_zero()) bad.push_back("reeb");

  // d eta(X,Y) = g(JX,Y).
  bool compat = true;
  for (int a = 0; a < dim && compat; ++a)
    for (int b = a + 1; b < dim && compat; ++b)
      if (deta.component({a, b}) != cd.j(b, a)) compat = false;
  if (!compat) bad.push_back("deta-compatibility");

  // (1/n!) eta ^ (d eta)^n = dv.
  Form vol = cd.eta();
  Scalar factorial(1);
  for (int k = 1; k <= cd.n; ++k) {
    vol = wedge(vol, deta);
    factorial *= Scalar(k);
  }
  vol *= factorial.inv();
  if (!(vol == cd.spec.volume_form())) bad.push_back("volume");

  return bad;
}

Mat phi_tensor(const ContactData& cd) { return lie_derivative_endo(cd.spec, 0, cd.j); }

TwoTensorForm contact_nijenhuis(const ContactData& cd) {
  int dim = cd.spec.dim();
  TwoTensorForm out(dim);
  Scalar half(1, 2);
  Mat j2 = cd.j * cd.j;
  for (int x = 0; x < dim; ++x)
    for (int y = x + 1; y < dim; ++y) {
      // N(X,Y) = 1/2 { J^2[X,Y] + [JX,JY] - J[X,JY] - J[JX,Y] }
      Vec acc = Vec(j2 * cd.spec.bracket(x, y));
      for (int a = 0; a < dim; ++a) {
        if (cd.j(a, x).is_zero()) continue;
        for (int b = 0; b < dim; ++b) {
          if (cd.j(b, y).is_zero()) continue;
          acc += Vec((cd.j(a, x) * cd.j(b, y)) * cd.spec.bracket(a, b));
        }
      }
      Vec mixed = zero_vec(dim);
      for (int b = 0; b < dim; ++b)
        if (!cd.j(b, y).is_zero()) mixed += Vec(cd.j(b, y) * cd.spec.bracket(x, b));
      for (int a = 0; a < dim; ++a)
        if (!cd.j(a, x).is_zero()) mixed += Vec(cd.j(a, x) * cd.spec.bracket(a, y));
      acc -= Vec(cd.j * mixed);
      for (int i = 0; i < dim; ++i) out.set(i, x, y, half * acc[i]);
    }
  return out;
}

bool is_cr(const ContactData& cd) {
  TwoTensorForm n = contact_nijenhuis(cd);
  Form deta = cd.d_eta();
  int dim = cd.spec.dim();
  for (int x = 1; x < dim; ++x)
    for (int y = x + 1; y < dim; ++y)
      for (int i = 0; i < dim; ++i) {
        Scalar expect = i == 0 ? -deta.component({x, y}) : Scalar(0);
        if (n.at(i, x, y) != expect) return false;
      }
  return true;
}

AlmostHermitian build_cylinder(const ContactData& cd) {
  int dim = cd.spec.dim();
  FrameSpec hat(dim + 1, cd.spec.orientation());
  for (int k = 0; k < dim; ++k)
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) {
        const Scalar& v = cd.spec.c(k, i, j);
        if (!v.is_zero()) hat.set_c(k + 1, i + 1, j + 1, v);
      }
  Mat jhat = extend_endo(cd.j);
  jhat(1, 0) = Scalar(1);   // J d/dt = xi
  jhat(0, 1) = Scalar(-1);  // J xi = -d/dt
  std::vector<std::pair<int, int>> pairs{{0, 1}};
  for (auto [e, f] : cd.pairs) pairs.emplace_back(e + 1, f + 1);
  return AlmostHermitian(std::move(hat), std::move(jhat), std::move(pairs));
}

Form restrict_one_form(const Form& f) {
  assert(f.degree() == 1);
  Form out(f.dim() - 1, 1);
  for (int k = 0; k + 1 < f.dim(); ++k) out[k] = f[k + 1];
  return out;
}

TwoTensorForm restrict_two_tensor(const TwoTensorForm& b) {
  TwoTensorForm out(b.dim() - 1);
  for (int i = 0; i + 1 < b.dim(); ++i)
    for (int j = 0; j + 1 < b.dim(); ++j)
      for (int k = j + 1; k + 1 < b.dim(); ++k) out.set(i, j, k, b.at(i + 1, j + 1, k + 1));
  return out;
}

Mat restrict_endo(const Mat& m) {
  int d = static_cast<int>(m.rows()) - 1;
  Mat out = zero_mat(d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) out(r, c) = m(r + 1, c + 1);
  return out;
}

TwoTensorForm b0_tensor(const ContactData& cd) {
  AlmostHermitian ah = build_cylinder(cd);
  int dimh = ah.spec().dim();
  Mat phi = extend_endo(phi_tensor(cd));
  Mat pv = projection_v(dimh);
  pv(1, 1) = Scalar(0);  // V excludes both d/dt and xi on the cylinder
  const Mat& jh = ah.j();
  Form dt = Form::basis(dimh, {0});
  Form eta = Form::basis(dimh, {1});
  Form deta = exterior_d(ah.spec(), eta);

  TwoTensorForm b = wedge_endo(phi, dt);
  b += wedge_endo(Mat(jh * phi), eta);
  b -= wedge_endo(pv, dt);
  b -= wedge_endo(Mat(jh * pv), eta);
  b *= Scalar(1, 4);
  b += Scalar(1, 2) * TwoTensorForm::tensor(eta, deta);
  return b;
}

MetricConnection webster_connection(const ContactData& cd) {
  int dim = cd.spec.dim();
  Form eta = cd.eta();
  Form deta = cd.d_eta();
  Mat phi = phi_tensor(cd);

  TwoTensorForm t = Scalar(1, 2) * contact_nijenhuis(cd);
  t += Scalar(5, 4) * TwoTensorForm::tensor(eta, deta);
  t += TwoTensorForm::from_three_form(Scalar(1, 4) * wedge(eta, deta));
  t += Scalar(1, 4) * wedge_endo(Mat(cd.j * phi - cd.j), eta);
  (void)dim;
  return MetricConnection::from_torsion(cd.spec, t);
}

MetricConnection webster_from_cylinder(const ContactData& cd) {
  AlmostHermitian ah = build_cylinder(cd);
  MetricConnection hat = basic_connection(ah, b0_tensor(cd));
  int dim = cd.spec.dim();
  // Slice: M-direction matrices restricted to TM, re-expressed as a potential.
  TwoTensorForm pot(dim);
  auto gamma = levi_civita(cd.spec);
  for (int i = 0; i < dim; ++i) {
    Mat w = restrict_endo(hat.matrix(i + 1));
    Mat a = w - gamma[i];
    for (int jj = 0; jj < dim; ++jj)
      for (int k = jj + 1; k < dim; ++k) pot.set(i, jj, k, a(k, jj));
  }
  return MetricConnection(cd.spec, pot);
}

bool webster_slice_consistency(const ContactData& cd) {
  AlmostHermitian ah = build_cylinder(cd);
  MetricConnection hat = basic_connection(ah, b0_tensor(cd));
  int dimh = ah.spec().dim();
  // nabla^b_t = 0 and the splitting g(nabla^b X, d/dt) = 0.
  if (!is_zero(hat.matrix(0))) return false;
  for (int i = 1; i < dimh; ++i) {
    const Mat& m = hat.matrix(i);
    for (int r = 0; r < dimh; ++r)
      if (!m(0, r).is_zero() || !m(r, 0).is_zero()) return false;
  }
  MetricConnection direct = webster_connection(cd);
  MetricConnection sliced = webster_from_cylinder(cd);
  return direct.potential() == sliced.potential();
}

MetricConnection sympl_connection(const ContactData& cd) {
  Form eta = cd.eta();
  Form deta = cd.d_eta();
  Mat phi = phi_tensor(cd);

  TwoTensorForm t = Scalar(1, 2) * contact_nijenhuis(cd);
  t -= Scalar(1, 2) * TwoTensorForm::tensor(eta, deta);
  t += Scalar(1, 2) * wedge_endo(cd.j, eta);
  t += Scalar(1, 4) * wedge_endo(Mat(cd.j * phi), eta);
  return MetricConnection::from_torsion(cd.spec, t);
}

Form det_connection_contact(const ContactData& cd, const MetricConnection& conn) {
  if (!conn.preserves(cd.j))
    throw NonHermitianConnection("contact determinant line needs nabla J = 0");
  int dim = cd.spec.dim();
  Form a(dim, 1);
  for (int x = 0; x < dim; ++x) {
    Scalar s;
    for (auto [e, f] : cd.pairs) s += conn.matrix(x)(f, e);
    a[x] = Scalar::i() * s;
  }
  return a;
}

std::pair<Form, Form> det_line_compare(const ContactData& cd) {
  Form det_w = det_connection_contact(cd, webster_connection(cd));
  Form det_1 = det_connection_contact(cd, sympl_connection(cd));
  AlmostHermitian ah = build_cylinder(cd);
  Form det_c = restrict_one_form(det_connection(ah, chern_connection(ah)));
  return {det_1 - det_w, det_1 - det_c};
}

bool is_cr_connection(const ContactData& cd, const MetricConnection& conn) {
  // T(Z,W) = 0 for Z,W in V^{1,0}; expand Z = (e_j - i f_j)/sqrt2.
  TwoTensorForm t = conn.torsion();
  int dim = cd.spec.dim();
  int m = static_cast<int>(cd.pairs.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      auto [ea, fa] = cd.pairs[a];
      auto [eb, fb] = cd.pairs[b];
      for (int i = 0; i < dim; ++i) {
        Scalar v = t.at(i, ea, eb) - t.at(i, fa, fb) -
                   Scalar::i() * (t.at(i, ea, fb) + t.at(i, fa, eb));
        if (!v.is_zero()) return false;
      }
    }
  return true;
}

ContactConnectionReport report_connection(const ContactData& cd, const MetricConnection& conn) {
  ContactConnectionReport r;
  r.torsion = conn.torsion();
  r.nice = is_nice(conn);
  r.contact = conn.preserves(cd.j) && conn.kills_vector(0);
  r.cr = r.contact && is_cr_connection(cd, conn);
  r.dirac_class = bianchi_map(r.torsion);
  r.det_line = r.contact ? det_connection_contact(cd, conn) : Form(cd.spec.dim(), 1);
  return r;
}

}  // namespace cgeo
