#include "cgeo/json_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cgeo/errors.hpp"

namespace cgeo {

using nlohmann::json;

Fixture parse_fixture(const json& j) {
  try {
    Fixture fx;
    fx.name = j.value("name", "fixture");
    int dim = j.at("dim").get<int>();
    int orientation = j.value("orientation", 1);
    if (dim <= 0) throw ParseError("dim must be positive");
    if (orientation != 1 && orientation != -1) throw ParseError("orientation must be +1 or -1");
    fx.spec = FrameSpec(dim, orientation);
    for (const auto& entry : j.value("c", json::array())) {
      int i = entry.at("i").get<int>();
      int jj = entry.at("j").get<int>();
      int k = entry.at("k").get<int>();
      if (i < 0 || jj < 0 || k < 0 || i >= dim || jj >= dim || k >= dim)
        throw ParseError("structure constant index out of range");
      fx.spec.set_c(k, i, jj, Scalar::parse(entry.at("val").get<std::string>()));
    }
    if (j.contains("contact")) {
      const auto& cj = j.at("contact");
      if (cj.value("eta_index", 0) != 0) throw ParseError("eta_index must be 0");
      if (dim % 2 == 0) throw ParseError("contact fixtures need odd dimension");
      ContactData cd;
      cd.spec = fx.spec;
      cd.n = (dim - 1) / 2;
      cd.j = zero_mat(dim);
      const auto& rows = cj.at("J");
      if (static_cast<int>(rows.size()) != dim) throw ParseError("J must be dim x dim");
      for (int r = 0; r < dim; ++r) {
        if (static_cast<int>(rows[r].size()) != dim) throw ParseError("J must be dim x dim");
        for (int c = 0; c < dim; ++c) cd.j(r, c) = Scalar::parse(rows[r][c].get<std::string>());
      }
      for (const auto& p : cj.at("pairs")) {
        if (p.size() != 2) throw ParseError("pairs entries must be [e,f]");
        cd.pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
      }
      if (static_cast<int>(cd.pairs.size()) != cd.n) throw ParseError("need n pairs");
      fx.contact = std::move(cd);
    }
    return fx;
  } catch (const json::exception& e) {
    throw ParseError(std::string("fixture: ") + e.what());
  }
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open fixture file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("fixture JSON: ") + e.what());
  }
  return parse_fixture(j);
}

std::string file_content_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file " + path);
  std::uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

json form_to_json(const Form& f) {
  json entries = json::array();
  for (const auto& idx : multi_index::all(f.dim(), f.degree())) {
    Scalar v = f.component(idx);
    if (v.is_zero()) continue;
    entries.push_back({{"idx", idx}, {"val", v.str()}});
  }
  return {{"degree", f.degree()}, {"entries", entries}};
}

json two_tensor_to_json(const TwoTensorForm& b) {
  json entries = json::array();
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      for (int k = j + 1; k < b.dim(); ++k) {
        const Scalar& v = b.at(i, j, k);
        if (v.is_zero()) continue;
        entries.push_back({{"i", i}, {"j", j}, {"k", k}, {"val", v.str()}});
      }
  return entries;
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cgeo
