#include "cgeo/fixtures.hpp"

namespace cgeo {
namespace fixtures {

namespace {

Mat standard_j(int dim, const std::vector<std::pair<int, int>>& pairs) {
  Mat j = zero_mat(dim);
  for (auto [e, f] : pairs) {
    j(f, e) = Scalar(1);
    j(e, f) = Scalar(-1);
  }
  return j;
}

}  // namespace

ContactData heis3() {
  FrameSpec spec(3);
  spec.set_c(0, 1, 2, Scalar(-1));
  std::vector<std::pair<int, int>> pairs{{1, 2}};
  return ContactData{std::move(spec), standard_j(3, pairs), pairs, 1};
}

ContactData e11() {
  FrameSpec spec(3);
  spec.set_c(0, 1, 2, Scalar(-1));
  spec.set_c(1, 0, 1, Scalar(1));
  spec.set_c(2, 0, 2, Scalar(-1));
  std::vector<std::pair<int, int>> pairs{{1, 2}};
  return ContactData{std::move(spec), standard_j(3, pairs), pairs, 1};
}

ContactData heis5() {
  FrameSpec spec(5);
  spec.set_c(0, 1, 2, Scalar(-1));
  spec.set_c(0, 3, 4, Scalar(-1));
  std::vector<std::pair<int, int>> pairs{{1, 2}, {3, 4}};
  return ContactData{std::move(spec), standard_j(5, pairs), pairs, 2};
}

ContactData round_s3() {
  FrameSpec spec(3);
  spec.set_c(0, 1, 2, Scalar(-1));
  spec.set_c(1, 2, 0, Scalar(-1));
  spec.set_c(2, 0, 1, Scalar(-1));
  std::vector<std::pair<int, int>> pairs{{1, 2}};
  return ContactData{std::move(spec), standard_j(3, pairs), pairs, 1};
}

FrameSpec abelian(int dim) { return FrameSpec(dim); }

AlmostHermitian kahler_r4() {
  std::vector<std::pair<int, int>> pairs{{0, 1}, {2, 3}};
  return AlmostHermitian(FrameSpec(4), standard_j(4, pairs), pairs);
}

}  // namespace fixtures
}  // namespace cgeo
