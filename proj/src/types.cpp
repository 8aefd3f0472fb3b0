#include "eiscomp/types.hpp"

#include <stdexcept>

namespace eiscomp {

std::string weight_str(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out + ")";
}

Weight parse_weight(const std::string& s) {
  Weight out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) throw std::invalid_argument("malformed weight: '" + s + "'");
    std::size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed weight: '" + s + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("malformed weight: '" + s + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty weight");
  return out;
}

}  // namespace eiscomp
