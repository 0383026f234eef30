#include "cgeo/hermitian.hpp"

#include <cassert>

#include "cgeo/errors.hpp"

namespace cgeo {

namespace mi = multi_index;

AlmostHermitian::AlmostHermitian(FrameSpec spec, Mat j, std::vector<std::pair<int, int>> pairs)
    : spec_(std::move(spec)), j_(std::move(j)), pairs_(std::move(pairs)) {
  int n = spec_.dim();
  assert(n % 2 == 0 && static_cast<int>(pairs_.size()) * 2 == n);
  if (!is_zero(Mat(j_ * j_ + identity_mat(n))))
    throw NonComplexStructure("almost-hermitian J must square to -1");
  if (!is_skew_symmetric(j_)) throw NonComplexStructure("J must be skew-symmetric");
  std::vector<bool> used(n, false);
  for (auto [e, f] : pairs_) {
    used[e] = used[f] = true;
    for (int r = 0; r < n; ++r)
      if (j_(r, e) != Scalar(r == f ? 1 : 0))
        throw NonComplexStructure("declared pairing does not satisfy f = J e");
  }
  for (bool u : used) assert(u);
}

Form AlmostHermitian::fundamental_form() const {
  int n = spec_.dim();
  Form w(n, 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) w.set_component({a, b}, j_(b, a));
  return w;
}

Form AlmostHermitian::to_complex_basis(const Form& f) const {
  int n = spec_.dim();
  int p = f.degree();
  // Real coframe index -> complex-basis expansion; complex index 2k is eps^k,
  // 2k+1 is epsbar^k.
  std::vector<std::vector<std::pair<int, Scalar>>> expand(n);
  const Scalar h = Scalar::inv_sqrt2();
  const Scalar ih = Scalar::i() * h;
  for (int k = 0; k < pair_count(); ++k) {
    auto [e, fidx] = pairs_[k];
    expand[e] = {{2 * k, h}, {2 * k + 1, h}};
    expand[fidx] = {{2 * k, -ih}, {2 * k + 1, ih}};
  }
  Form out(n, p);
  for (const auto& idx : mi::all(n, p)) {
    Scalar v = f.component(idx);
    if (v.is_zero()) continue;
    // Distribute over the expansion of each factor.
    std::vector<int> tgt(p);
    std::vector<int> choice(p, 0);
    for (;;) {
      Scalar coeff = v;
      for (int t = 0; t < p; ++t) {
        const auto& term = expand[idx[t]][choice[t]];
        tgt[t] = term.first;
        coeff *= term.second;
      }
      out.add_component(tgt, coeff);
      int t = p - 1;
      while (t >= 0 && choice[t] == 1) choice[t--] = 0;
      if (t < 0) break;
      ++choice[t];
    }
  }
  return out;
}

Form AlmostHermitian::from_complex_basis(const Form& f) const {
  int n = spec_.dim();
  int p = f.degree();
  std::vector<std::vector<std::pair<int, Scalar>>> expand(n);
  const Scalar h = Scalar::inv_sqrt2();
  const Scalar ih = Scalar::i() * h;
  for (int k = 0; k < pair_count(); ++k) {
    auto [e, fidx] = pairs_[k];
    expand[2 * k] = {{e, h}, {fidx, ih}};       // eps^k
    expand[2 * k + 1] = {{e, h}, {fidx, -ih}};  // epsbar^k
  }
  Form out(n, p);
  for (const auto& idx : mi::all(n, p)) {
    Scalar v = f.component(idx);
    if (v.is_zero()) continue;
    std::vector<int> tgt(p);
    std::vector<int> choice(p, 0);
    for (;;) {
      Scalar coeff = v;
      for (int t = 0; t < p; ++t) {
        const auto& term = expand[idx[t]][choice[t]];
        tgt[t] = term.first;
        coeff *= term.second;
      }
      out.add_component(tgt, coeff);
      int t = p - 1;
      while (t >= 0 && choice[t] == 1) choice[t--] = 0;
      if (t < 0) break;
      ++choice[t];
    }
  }
  return out;
}

Form AlmostHermitian::pq_project(const Form& f, int p, int q) const {
  Form cx = to_complex_basis(f);
  for (const auto& idx : mi::all(f.dim(), f.degree())) {
    int holo = 0, anti = 0;
    for (int v : idx) (v % 2 == 0 ? holo : anti)++;
    if (holo != p || anti != q) cx.set_component(idx, Scalar(0));
  }
  return from_complex_basis(cx);
}

std::pair<Form, Form> AlmostHermitian::omega3_split(const Form& f) const {
  assert(f.degree() == 3);
  Form plus = pq_project(f, 2, 1) + pq_project(f, 1, 2);
  Form minus = pq_project(f, 3, 0) + pq_project(f, 0, 3);
  return {plus, minus};
}

Form AlmostHermitian::dc(const Form& f) const {
  return pullback(Mat(-j_), exterior_d(spec_, f));
}

std::pair<Form, Form> AlmostHermitian::dc_omega_parts() const {
  return omega3_split(dc(fundamental_form()));
}

Form AlmostHermitian::lambda_contract(const Form& f) const {
  assert(f.degree() >= 2);
  Form w = fundamental_form();
  Form out(f.dim(), f.degree() - 2);
  for (const auto& idx : mi::all(f.dim(), f.degree() - 2)) {
    Form basis = Form::basis(f.dim(), idx);
    out.set_component(idx, pair_bilinear(wedge(w, basis), f));
  }
  return out;
}

Form AlmostHermitian::lee_form() const { return lambda_contract(exterior_d(spec_, fundamental_form())); }

TwoTensorForm AlmostHermitian::nijenhuis() const {
  int n = spec_.dim();
  TwoTensorForm out(n);
  Scalar quarter(1, 4);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      // N(X,Y) = 1/4 ([JX,JY] - [X,Y] - J[X,JY] - J[JX,Y])
      Vec acc = zero_vec(n);
      for (int a = 0; a < n; ++a) {
        if (j_(a, x).is_zero()) continue;
        for (int b = 0; b < n; ++b) {
          if (j_(b, y).is_zero()) continue;
          acc += Vec((j_(a, x) * j_(b, y)) * spec_.bracket(a, b));
        }
      }
      acc -= spec_.bracket(x, y);
      Vec mixed = zero_vec(n);
      for (int b = 0; b < n; ++b)
        if (!j_(b, y).is_zero()) mixed += Vec(j_(b, y) * spec_.bracket(x, b));
      for (int a = 0; a < n; ++a)
        if (!j_(a, x).is_zero()) mixed += Vec(j_(a, x) * spec_.bracket(a, y));
      acc -= Vec(j_ * mixed);
      for (int i = 0; i < n; ++i) out.set(i, x, y, quarter * acc[i]);
    }
  return out;
}

void validate_params(const AlmostHermitian& ah, const GauduchonParams& p) {
  auto [plus, minus] = ah.omega3_split(p.psi_plus);
  if (!minus.is_zero() || !(plus == p.psi_plus))
    throw InvalidParams("psi_plus must lie in Omega^+");
  if (p.b.dim() != ah.spec().dim()) throw InvalidParams("B has the wrong dimension");
  if (!(mM_involution(p.b, ah.j()) == p.b)) throw InvalidParams("B must be M-invariant");
  if (!bianchi_map(p.b).is_zero()) throw InvalidParams("B must be Bianchi-free");
}

TwoTensorForm gauduchon_torsion(const AlmostHermitian& ah, const GauduchonParams& p) {
  validate_params(ah, p);
  auto [dcw_plus, dcw_minus] = ah.dc_omega_parts();
  (void)dcw_minus;
  TwoTensorForm cplus = TwoTensorForm::from_three_form(dcw_plus);
  TwoTensorForm psi = TwoTensorForm::from_three_form(p.psi_plus);
  TwoTensorForm t = ah.nijenhuis();
  t += Scalar(1, 8) * cplus;
  t -= Scalar(3, 8) * mM_involution(cplus, ah.j());
  t += Scalar(9, 8) * psi;
  t -= Scalar(3, 8) * mM_involution(psi, ah.j());
  t += p.b;
  return t;
}

MetricConnection gauduchon_connection(const AlmostHermitian& ah, const GauduchonParams& p) {
  return MetricConnection::from_torsion(ah.spec(), gauduchon_torsion(ah, p));
}

MetricConnection first_canonical_connection(const AlmostHermitian& ah) {
  auto [plus, minus] = ah.dc_omega_parts();
  (void)minus;
  return gauduchon_connection(ah, {Scalar(-1, 3) * plus, TwoTensorForm(ah.spec().dim())});
}

MetricConnection chern_connection(const AlmostHermitian& ah) {
  auto [plus, minus] = ah.dc_omega_parts();
  (void)minus;
  return gauduchon_connection(ah, {Scalar(1, 3) * plus, TwoTensorForm(ah.spec().dim())});
}

MetricConnection basic_connection(const AlmostHermitian& ah, const TwoTensorForm& b) {
  Form target = Scalar(1, 2) * ah.lee_form();
  if (!(trace_map(b) == target)) throw InvalidParams("basic connection needs tr B = theta/2");
  auto [plus, minus] = ah.dc_omega_parts();
  (void)minus;
  return gauduchon_connection(ah, {Scalar(-1, 3) * plus, b});
}

Form det_connection(const AlmostHermitian& ah, const MetricConnection& conn) {
  if (!conn.preserves(ah.j()))
    throw NonHermitianConnection("determinant line needs nabla J = 0");
  int n = ah.spec().dim();
  Form a(n, 1);
  for (int x = 0; x < n; ++x) {
    Scalar s;
    for (auto [e, f] : ah.pairs()) s += conn.matrix(x)(f, e);
    a[x] = Scalar::i() * s;
  }
  return a;
}

}  // namespace cgeo
