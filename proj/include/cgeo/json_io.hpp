#pragma once

#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "cgeo/contact.hpp"

namespace cgeo {

struct Fixture {
  std::string name;
  FrameSpec spec{1};
  std::optional<ContactData> contact;
};

/// Parses the fixture JSON schema:
/// { "name": str, "dim": int, "orientation": +-1,
///   "c": [ {"i": , "j": , "k": , "val": Scalar-string} ],
///   "contact": { "eta_index": 0, "J": [[Scalar-string]], "pairs": [[e,f]] } }
/// Throws ParseError on malformed input.
Fixture parse_fixture(const nlohmann::json& j);
Fixture load_fixture(const std::string& path);

/// FNV-1a hash of the file bytes, as 16 hex digits.
std::string file_content_hash(const std::string& path);

nlohmann::json form_to_json(const Form& f);
nlohmann::json two_tensor_to_json(const TwoTensorForm& b);
nlohmann::json matrix_to_json(const Mat& m);

}  // namespace cgeo
