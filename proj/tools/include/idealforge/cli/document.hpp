#pragma once

// Verdict documents: UTF-8 JSON with a fixed field order so identical runs
// produce identical bytes.

#include <cstdint>
#include <string>

#include <json.hpp>

namespace idealforge::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormat = "idealforge-verdict/1";
inline constexpr const char* kToolVersion = "0.1.0";

struct VerdictDocument {
  std::string operation;
  Json inputs = Json::object();
  std::string verdict;  // member | non-member | pass | fail | undecided-resource
  Json certificate = Json::object();
  std::uint64_t seed = 0;
};

/// FNV-1a over the compact dump of `inputs`, as "fnv1a64:<16 hex digits>".
std::string digest(const Json& inputs);

Json to_json(const VerdictDocument& doc);
/// Throws std::invalid_argument on a malformed document or a digest mismatch.
VerdictDocument from_json(const Json& j);

std::string render(const VerdictDocument& doc);

}  // namespace idealforge::cli
