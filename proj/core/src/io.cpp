#include "gt42/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace gt42 {

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.what() carries "at line L, column C" context from the parser.
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

json load_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return parse_json_text(text);
}

json moment_to_json(const MomentPoint<double>& mu) {
  return json::array({mu.x[0], mu.x[1], mu.x[2], mu.x[3]});
}

json pattern_to_json(ZeroPattern pattern) {
  json out = json::array();
  for (int k = 0; k < kNumPairs; ++k)
    if (pattern[k]) out.push_back(pair_name(k));
  return out;
}

ZeroPattern pattern_from_json(const json& j) {
  if (!j.is_array()) throw InputError("pattern must be an array of pair names");
  ZeroPattern p;
  for (const json& e : j) {
    if (!e.is_string()) throw InputError("pattern entries must be pair names like \"12\"");
    p.set(parse_pair(e.get<std::string>()));
  }
  return p;
}

}  // namespace gt42
