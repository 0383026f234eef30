// Exploration probe; not part of the build.
#include <iostream>

#include "cgeo/fixtures.hpp"
#include "cgeo/report.hpp"

using namespace cgeo;

static void dump_form(const std::string& label, const Form& f) {
  std::cout << label << ": ";
  bool first = true;
  for (const auto& idx : multi_index::all(f.dim(), f.degree())) {
    Scalar v = f.component(idx);
    if (v.is_zero()) continue;
    if (!first) std::cout << " + ";
    first = false;
    std::cout << "(" << v.str() << ")e^[";
    for (int i : idx) std::cout << i;
    std::cout << "]";
  }
  if (first) std::cout << "0";
  std::cout << "\n";
}

static void dump_mat(const std::string& label, const Mat& m) {
  std::cout << label << ":\n";
  for (int r = 0; r < m.rows(); ++r) {
    std::cout << "  ";
    for (int c = 0; c < m.cols(); ++c) std::cout << m(r, c).str() << "  ";
    std::cout << "\n";
  }
}

int main() {
  for (auto [name, cd] : {std::pair<std::string, ContactData>{"heis3", fixtures::heis3()},
                          {"e11", fixtures::e11()},
                          {"heis5", fixtures::heis5()},
                          {"round_s3", fixtures::round_s3()}}) {
    std::cout << "==== " << name << " ====\n";
    auto viol = validate_contact(cd);
    std::cout << "violations:";
    for (auto& v : viol) std::cout << " " << v;
    std::cout << "\n";
    std::cout << "scalar curvature: " << scalar_curvature(cd.spec).str() << "\n";
    std::cout << "is_cr: " << is_cr(cd) << "\n";
    dump_mat("Phi", phi_tensor(cd));

    MetricConnection w = webster_connection(cd);
    MetricConnection s = sympl_connection(cd);
    std::cout << "webster nice: " << is_nice(w) << " contact: "
              << (w.preserves(cd.j) && w.kills_vector(0)) << "\n";
    dump_form("bT_w", dirac_class(w));
    std::cout << "two-path: " << webster_slice_consistency(cd) << "\n";
    std::cout << "sympl nice: " << is_nice(s) << " contact: "
              << (s.preserves(cd.j) && s.kills_vector(0)) << "\n";
    dump_form("bT_1", dirac_class(s));

    dump_form("det_w", det_connection_contact(cd, w));
    dump_form("det_1", det_connection_contact(cd, s));
    AlmostHermitian hat = build_cylinder(cd);
    dump_form("theta", hat.lee_form());
    dump_form("det_chern_cyl", det_connection(hat, chern_connection(hat)));
    dump_form("det_basic_cyl", det_connection(hat, basic_connection(hat, b0_tensor(cd))));
    dump_form("det_first_canonical_cyl", det_connection(hat, first_canonical_connection(hat)));
    auto [d1, d2] = det_line_compare(cd);
    dump_form("det1 - detw", d1);
    dump_form("det1 - detc|M", d2);

    SpinorModule sm(cd);
    Form a = sm.det_chern_restricted();
    dump_form("det_chern restricted", a);
    HodgeDolbeaultBlocks blocks = hodge_dolbeault_blocks(sm);
    dump_mat("H", blocks.h);
    Mat dirac = sm.dirac_matrix(w, a);
    std::cout << "H == dirac(webster, det_c): " << is_zero(Mat(blocks.h - dirac)) << "\n";
    Mat lc_dirac = sm.dirac_matrix(MetricConnection::levi_civita(cd.spec), a);
    dump_mat("dirac_LC - H", Mat(lc_dirac - blocks.h));
    Form zero(cd.spec.dim(), 1);
    dump_mat("weitz residual LC", weitzenbock_check(sm, MetricConnection::levi_civita(cd.spec), zero));
    dump_mat("weitz residual webster", weitzenbock_check(sm, w, zero));
    if (cd.spec.dim() == 3) {
      auto sides = commutator_check(sm);
      dump_mat("ZT+TZ", sides.lhs);
      dump_mat("rhs", sides.rhs);
    }
    std::cout << "spectrum H:";
    for (auto ev : spectrum(blocks.h)) std::cout << " (" << ev.real() << "," << ev.imag() << ")";
    std::cout << "\n";
  }
  return 0;
}
