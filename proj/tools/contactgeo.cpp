#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cgeo/errors.hpp"
#include "cgeo/report.hpp"

namespace {

using nlohmann::json;

// Glob matcher for --only (supports * and ?).
bool glob_match(const std::string& pat, const std::string& s, size_t p = 0, size_t t = 0) {
  while (p < pat.size()) {
    if (pat[p] == '*') {
      for (size_t k = t; k <= s.size(); ++k)
        if (glob_match(pat, s, p + 1, k)) return true;
      return false;
    }
    if (t == s.size()) return false;
    if (pat[p] != '?' && pat[p] != s[t]) return false;
    ++p;
    ++t;
  }
  return t == s.size();
}

int cmd_validate(const std::string& path) {
  cgeo::Fixture fx = cgeo::load_fixture(path);
  std::vector<std::string> violations;
  if (fx.contact) {
    violations = cgeo::validate_contact(*fx.contact);
  } else {
    violations = fx.spec.validate();
  }
  if (violations.empty()) {
    std::cout << "ok: " << fx.name << " satisfies all axioms\n";
    return 0;
  }
  std::cout << "violations in " << fx.name << ":\n";
  for (const auto& v : violations) std::cout << "  " << v << "\n";
  return 1;
}

int cmd_report(const std::string& path, const std::string& format, const std::string& only,
               bool timing) {
  cgeo::Fixture fx = cgeo::load_fixture(path);
  if (!fx.contact) {
    std::cerr << "report requires a contact fixture\n";
    return 2;
  }
  cgeo::VerificationReport rep =
      cgeo::run_battery(fx.name, *fx.contact, cgeo::file_content_hash(path));
  if (!only.empty()) {
    std::erase_if(rep.identities,
                  [&](const cgeo::IdentityResult& id) { return !glob_match(only, id.name); });
  }
  if (format == "json")
    std::cout << cgeo::report_to_json(rep, timing).dump(2) << "\n";
  else
    std::cout << cgeo::report_to_text(rep, timing);
  for (const auto& id : rep.identities)
    if (id.status == "fail") return 1;
  return 0;
}

int cmd_spectrum(const std::string& path, const std::string& opname, const std::string& baseline,
                 double tol) {
  cgeo::Fixture fx = cgeo::load_fixture(path);
  if (!fx.contact) {
    std::cerr << "spectrum requires a contact fixture\n";
    return 2;
  }
  auto names = cgeo::operator_names();
  if (std::find(names.begin(), names.end(), opname) == names.end()) {
    std::cerr << "unknown operator '" << opname << "'; valid names:";
    for (const auto& n : names) std::cerr << " " << n;
    std::cerr << "\n";
    return 2;
  }
  auto ev = cgeo::spectrum(cgeo::named_operator(*fx.contact, opname));
  std::cout.precision(12);
  for (const auto& v : ev) std::cout << v.real() << " " << v.imag() << "\n";
  if (!baseline.empty()) {
    std::ifstream in(baseline);
    if (!in) {
      std::cerr << "cannot open baseline " << baseline << "\n";
      return 2;
    }
    json base;
    in >> base;
    const auto& vals = base.at("eigenvalues");
    if (vals.size() != ev.size()) {
      std::cerr << "baseline size mismatch\n";
      return 1;
    }
    double worst = 0;
    for (size_t k = 0; k < ev.size(); ++k) {
      double dr = ev[k].real() - vals[k][0].get<double>();
      double di = ev[k].imag() - vals[k][1].get<double>();
      worst = std::max(worst, std::hypot(dr, di));
    }
    if (worst > tol) {
      std::cerr << "baseline mismatch: max deviation " << worst << " > " << tol << "\n";
      return 1;
    }
    std::cout << "baseline match within " << tol << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification engine for connections and Dirac operators on metric contact manifolds"};
  app.require_subcommand(1);

  std::string fixture, format = "text", only, operator_name, baseline;
  double tol = 1e-9;
  bool timing = false;

  auto* validate = app.add_subcommand("validate", "check fixture axioms");
  validate->add_option("--fixture", fixture, "fixture JSON path")->required();

  auto* report = app.add_subcommand("report", "run the full identity battery");
  report->add_option("--fixture", fixture, "fixture JSON path")->required();
  report->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
  report->add_option("--only", only, "glob filter on identity names");
  report->add_flag("--timing", timing, "include wall-clock timing in the output");

  auto* spec_cmd = app.add_subcommand("spectrum", "eigenvalues of a named operator");
  spec_cmd->add_option("--fixture", fixture, "fixture JSON path")->required();
  spec_cmd->add_option("--operator", operator_name, "operator name")->required();
  spec_cmd->add_option("--baseline", baseline, "baseline JSON for regression compare");
  spec_cmd->add_option("--tol", tol, "baseline tolerance (default 1e-9)");

  try {
    app.parse(argc, argv);
    if (validate->parsed()) return cmd_validate(fixture);
    if (report->parsed()) return cmd_report(fixture, format, only, timing);
    if (spec_cmd->parsed()) return cmd_spectrum(fixture, operator_name, baseline, tol);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const cgeo::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const cgeo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
