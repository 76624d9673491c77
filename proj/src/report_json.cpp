#include "aslkit/report_json.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>

namespace aslkit {

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::ordered_json report_to_json(const Report& r, const std::string& input_digest, bool timings) {
  nlohmann::ordered_json out;
  out["version"] = kVersion;
  out["input_digest"] = input_digest;
  out["conventions"] = r.conventions();
  std::vector<CheckResult> checks = r.checks();
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    e["witness"] = c.witness.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(c.witness);
    e["ms"] = timings ? c.ms : 0.0;
    arr.push_back(std::move(e));
  }
  out["checks"] = std::move(arr);
  return out;
}

}  // namespace aslkit
