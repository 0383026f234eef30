#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cgeo/json_io.hpp"
#include "cgeo/spinor.hpp"

namespace cgeo {

struct AxiomResult {
  std::string name;
  bool ok = false;
};

struct IdentityResult {
  std::string name;
  std::string detail;
  std::string status;  // "pass" | "fail" | "reported"
  double residual = 0.0;
};

struct VerificationReport {
  std::string fixture;
  std::string fixture_hash;
  std::vector<AxiomResult> axioms;
  std::vector<IdentityResult> identities;
  std::map<std::string, std::vector<std::complex<double>>> spectra;
  long timing_ms = 0;
};

/// Runs the full identity battery on a contact fixture. Deterministic: the
/// random samples are seeded from the fixture name.
VerificationReport run_battery(const std::string& name, const ContactData& cd,
                               const std::string& content_hash);

/// Named operators exposed by the spectrum command.
std::vector<std::string> operator_names();
Mat named_operator(const ContactData& cd, const std::string& name);

nlohmann::json report_to_json(const VerificationReport& r, bool include_timing);
std::string report_to_text(const VerificationReport& r, bool include_timing);

}  // namespace cgeo
