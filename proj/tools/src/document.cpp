#include "idealforge/cli/document.hpp"

#include <cstdio>
#include <stdexcept>

namespace idealforge::cli {

std::string digest(const Json& inputs) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : inputs.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

Json to_json(const VerdictDocument& doc) {
  Json j;
  j["format"] = kFormat;
  j["tool"] = Json{{"name", "idealforge"}, {"version", kToolVersion}};
  j["claim"] = Json{{"operation", doc.operation}, {"inputs", doc.inputs}, {"digest", digest(doc.inputs)}};
  j["verdict"] = doc.verdict;
  j["certificate"] = doc.certificate;
  j["seed"] = doc.seed;
  return j;
}

VerdictDocument from_json(const Json& j) {
  if (!j.is_object() || j.value("format", "") != kFormat) throw std::invalid_argument("not a verdict document");
  const Json& claim = j.at("claim");
  VerdictDocument doc;
  doc.operation = claim.at("operation").get<std::string>();
  doc.inputs = claim.at("inputs");
  if (claim.at("digest").get<std::string>() != digest(doc.inputs)) {
    throw std::invalid_argument("claim digest does not match its inputs");
  }
  doc.verdict = j.at("verdict").get<std::string>();
  doc.certificate = j.at("certificate");
  doc.seed = j.at("seed").get<std::uint64_t>();
  return doc;
}

std::string render(const VerdictDocument& doc) { return to_json(doc).dump(2) + "\n"; }

}  // namespace idealforge::cli
