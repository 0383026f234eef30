#include "cgeo/form.hpp"

#include <algorithm>
#include <cassert>

#include "cgeo/frame.hpp"

namespace cgeo {
namespace multi_index {

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int t = 0; t < k; ++t) r = r * (n - t) / (t + 1);
  return r;
}

long rank(const std::vector<int>& idx, int dim) {
  // Lexicographic rank: count tuples preceding idx.
  long r = 0;
  int prev = -1;
  int p = static_cast<int>(idx.size());
  for (int t = 0; t < p; ++t) {
    for (int v = prev + 1; v < idx[t]; ++v) r += binomial(dim - 1 - v, p - 1 - t);
    prev = idx[t];
  }
  return r;
}

std::vector<int> unrank(long r, int dim, int degree) {
  std::vector<int> idx(degree);
  int v = 0;
  for (int t = 0; t < degree; ++t) {
    for (;; ++v) {
      long cnt = binomial(dim - 1 - v, degree - 1 - t);
      if (r < cnt) break;
      r -= cnt;
    }
    idx[t] = v++;
  }
  return idx;
}

std::vector<std::vector<int>> all(int dim, int degree) {
  std::vector<std::vector<int>> out;
  long n = binomial(dim, degree);
  out.reserve(n);
  for (long r = 0; r < n; ++r) out.push_back(unrank(r, dim, degree));
  return out;
}

int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (size_t a = 0; a + 1 < idx.size(); ++a)
    for (size_t b = 0; b + 1 < idx.size() - a; ++b)
      if (idx[b] > idx[b + 1]) {
        std::swap(idx[b], idx[b + 1]);
        sign = -sign;
      }
  for (size_t a = 0; a + 1 < idx.size(); ++a)
    if (idx[a] == idx[a + 1]) return 0;
  return sign;
}

}  // namespace multi_index

namespace mi = multi_index;

Form::Form(int dim, int degree) : dim_(dim), degree_(degree) {
  assert(degree >= 0);
  comp_.assign(degree > dim ? 0 : mi::binomial(dim, degree), Scalar(0));
}

Scalar Form::component(std::vector<int> idx) const {
  assert(static_cast<int>(idx.size()) == degree_);
  if (degree_ > dim_) return Scalar(0);
  int sign = mi::sort_sign(idx);
  if (sign == 0) return Scalar(0);
  Scalar v = comp_[mi::rank(idx, dim_)];
  return sign > 0 ? v : -v;
}

void Form::add_component(std::vector<int> idx, const Scalar& v) {
  assert(static_cast<int>(idx.size()) == degree_);
  int sign = mi::sort_sign(idx);
  if (sign == 0) return;
  comp_[mi::rank(idx, dim_)] += sign > 0 ? v : -v;
}

void Form::set_component(std::vector<int> idx, const Scalar& v) {
  int sign = mi::sort_sign(idx);
  assert(sign != 0);
  comp_[mi::rank(idx, dim_)] = sign > 0 ? v : -v;
}

bool Form::is_zero() const {
  for (const auto& c : comp_)
    if (!c.is_zero()) return false;
  return true;
}

Form Form::conj() const {
  Form out = *this;
  for (auto& c : out.comp_) c = c.conj();
  return out;
}

Form& Form::operator+=(const Form& o) {
  assert(dim_ == o.dim_ && degree_ == o.degree_);
  for (size_t k = 0; k < comp_.size(); ++k) comp_[k] += o.comp_[k];
  return *this;
}

Form& Form::operator-=(const Form& o) {
  assert(dim_ == o.dim_ && degree_ == o.degree_);
  for (size_t k = 0; k < comp_.size(); ++k) comp_[k] -= o.comp_[k];
  return *this;
}

Form& Form::operator*=(const Scalar& s) {
  for (auto& c : comp_) c *= s;
  return *this;
}

Form Form::operator-() const {
  Form out = *this;
  for (auto& c : out.comp_) c = -c;
  return out;
}

Form Form::basis(int dim, std::vector<int> idx) {
  Form f(dim, static_cast<int>(idx.size()));
  f.set_component(std::move(idx), Scalar(1));
  return f;
}

Form Form::one_form(const Vec& components) {
  Form f(static_cast<int>(components.size()), 1);
  for (int k = 0; k < components.size(); ++k) f[k] = components[k];
  return f;
}

Form wedge(const Form& a, const Form& b) {
  Form out(a.dim(), a.degree() + b.degree());
  if (out.degree() > a.dim()) return out;  // identically zero
  const auto idx_a = mi::all(a.dim(), a.degree());
  for (long ra = 0; ra < static_cast<long>(idx_a.size()); ++ra) {
    if (a[ra].is_zero()) continue;
    const auto idx_b = mi::all(b.dim(), b.degree());
    for (long rb = 0; rb < static_cast<long>(idx_b.size()); ++rb) {
      if (b[rb].is_zero()) continue;
      std::vector<int> joined = idx_a[ra];
      joined.insert(joined.end(), idx_b[rb].begin(), idx_b[rb].end());
      out.add_component(std::move(joined), a[ra] * b[rb]);
    }
  }
  return out;
}

Form contract(int v, const Form& f) {
  Form out(f.dim(), f.degree() - 1);
  if (f.degree() == 0) return Form(f.dim(), 0);  // caller guards; degree -1 not representable
  for (const auto& idx : mi::all(f.dim(), f.degree() - 1)) {
    std::vector<int> full;
    full.reserve(idx.size() + 1);
    full.push_back(v);
    full.insert(full.end(), idx.begin(), idx.end());
    out.set_component(idx, f.component(std::move(full)));
  }
  return out;
}

Form pullback(const Mat& a, const Form& f) {
  int dim = f.dim();
  Form out(dim, f.degree());
  if (f.degree() == 0) return f;
  for (const auto& target : mi::all(dim, f.degree())) {
    // f(A e_{k1}, ..., A e_{kp}) expanded over the frame.
    Scalar acc;
    std::vector<int> src(f.degree());
    // Iterate over all tuples of source indices.
    long total = 1;
    for (int t = 0; t < f.degree(); ++t) total *= dim;
    for (long code = 0; code < total; ++code) {
      long c = code;
      Scalar coeff(1);
      bool skip = false;
      for (int t = 0; t < f.degree(); ++t) {
        src[t] = static_cast<int>(c % dim);
        c /= dim;
        const Scalar& entry = a(src[t], target[t]);
        if (entry.is_zero()) {
          skip = true;
          break;
        }
        coeff *= entry;
      }
      if (skip) continue;
      Scalar base = f.component(src);
      if (!base.is_zero()) acc += coeff * base;
    }
    out.set_component(target, acc);
  }
  return out;
}

Scalar pair_bilinear(const Form& a, const Form& b) {
  assert(a.dim() == b.dim() && a.degree() == b.degree());
  Scalar s;
  for (long r = 0; r < a.size(); ++r) s += a[r] * b[r];
  return s;
}

Scalar pair_hermitian(const Form& a, const Form& b) {
  assert(a.dim() == b.dim() && a.degree() == b.degree());
  Scalar s;
  for (long r = 0; r < a.size(); ++r) s += a[r].conj() * b[r];
  return s;
}

Scalar norm_sq(const Form& f) { return pair_hermitian(f, f); }

Form j_one_form(const Mat& j, const Form& alpha) {
  assert(alpha.degree() == 1);
  Form out(alpha.dim(), 1);
  for (int k = 0; k < alpha.dim(); ++k) {
    Scalar s;
    for (int m = 0; m < alpha.dim(); ++m) s += alpha[m] * j(m, k);
    out[k] = -s;
  }
  return out;
}

Form exterior_d(const FrameSpec& spec, const Form& f) {
  int dim = spec.dim();
  int p = f.degree();
  Form out(dim, p + 1);
  if (p + 1 > dim) return out;  // zero (dim+1)-form representation
  // Invariant Palais formula: the only surviving terms are
  // d f(X_0..X_p) = sum_{a<b} (-1)^{a+b} f([X_a,X_b], X_0..^a..^b..X_p).
  for (const auto& idx : mi::all(dim, p + 1)) {
    Scalar acc;
    for (int a = 0; a <= p; ++a)
      for (int b = a + 1; b <= p; ++b) {
        std::vector<int> rest;
        rest.reserve(p);
        rest.push_back(-1);  // slot for the bracket index
        for (int t = 0; t <= p; ++t)
          if (t != a && t != b) rest.push_back(idx[t]);
        int sign = ((a + b) % 2 == 0) ? 1 : -1;
        for (int m = 0; m < dim; ++m) {
          const Scalar& cm = spec.c(m, idx[a], idx[b]);
          if (cm.is_zero()) continue;
          rest[0] = m;
          Scalar base = f.component(rest);
          if (base.is_zero()) continue;
          acc += (sign > 0 ? cm : -cm) * base;
        }
      }
    out.set_component(idx, acc);
  }
  return out;
}

Form hodge_star(const FrameSpec& spec, const Form& f) {
  int dim = spec.dim();
  int p = f.degree();
  Form out(dim, dim - p);
  for (const auto& idx : mi::all(dim, p)) {
    Scalar v = f.component(idx);
    if (v.is_zero()) continue;
    std::vector<int> comp;
    comp.reserve(dim - p);
    size_t t = 0;
    for (int k = 0; k < dim; ++k) {
      if (t < idx.size() && idx[t] == k) {
        ++t;
        continue;
      }
      comp.push_back(k);
    }
    std::vector<int> full = idx;
    full.insert(full.end(), comp.begin(), comp.end());
    int sign = mi::sort_sign(full) * spec.orientation();
    out.add_component(comp, sign > 0 ? v : -v);
  }
  return out;
}

}  // namespace cgeo
