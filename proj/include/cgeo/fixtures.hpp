#pragma once

#include "cgeo/contact.hpp"

namespace cgeo {
namespace fixtures {

/// Heisenberg group H^3: [e1,e2] = -xi, Sasakian (Phi = 0).
ContactData heis3();
/// Unimodular solvable Sol geometry: [xi,e1] = e1, [xi,e2] = -e2, [e1,e2] = -xi;
/// contact metric with Phi != 0.
ContactData e11();
/// Heisenberg group H^5: [e_k, f_k] = -xi for k = 1,2.
ContactData heis5();
/// su(2) scaled so the standard structure is contact: [e_i,e_j] = -eps_{ijk} e_k.
ContactData round_s3();

/// Flat torus frame, all brackets zero.
FrameSpec abelian(int dim);
/// Abelian R^4 with the standard complex structure (Kahler-like).
AlmostHermitian kahler_r4();

}  // namespace fixtures
}  // namespace cgeo
