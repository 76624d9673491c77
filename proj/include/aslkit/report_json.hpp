#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "aslkit/report.hpp"

namespace aslkit {

inline constexpr const char* kVersion = "0.1.0";

// 64-bit FNV-1a as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

// {"version", "input_digest", "conventions", "checks": [{"name", "status",
// "witness", "ms"}]} with checks sorted by name. Without timings every "ms"
// is 0 so that reports compare byte for byte.
nlohmann::ordered_json report_to_json(const Report& r, const std::string& input_digest, bool timings = true);

}  // namespace aslkit
