#include "aslkit/poset_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aslkit/error.hpp"

namespace aslkit {

using nlohmann::json;

Poset parse_poset_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError,
                "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what(),
                std::to_string(e.byte));
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array()) {
    throw Error(ErrorCode::ParseError, "expected an object with an \"elements\" array");
  }
  std::vector<std::string> labels;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw Error(ErrorCode::ParseError, "element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  if (doc.contains("covers")) {
    if (!doc["covers"].is_array()) throw Error(ErrorCode::ParseError, "\"covers\" must be an array");
    for (const auto& c : doc["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
        throw Error(ErrorCode::ParseError, "each cover must be a pair of label strings");
      }
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  }
  return build_poset(labels, covers);
}

Poset read_poset_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_poset_json(buf.str());
}

std::string poset_to_json(const Poset& p) {
  json doc;
  doc["elements"] = p.labels();
  json covers = json::array();
  for (auto [a, b] : p.covers()) covers.push_back({p.label(a), p.label(b)});
  doc["covers"] = covers;
  return doc.dump(2) + "\n";
}

}  // namespace aslkit
