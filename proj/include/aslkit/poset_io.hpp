#pragma once

#include <string>
#include <string_view>

#include "aslkit/poset.hpp"

namespace aslkit {

// {"elements": ["<label>", ...], "covers": [["<a>", "<b>"], ...]}, a covered by b.
Poset parse_poset_json(std::string_view text);
Poset read_poset_file(const std::string& path);
std::string poset_to_json(const Poset& p);

}  // namespace aslkit
