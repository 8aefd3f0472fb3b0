#pragma once

#include <string>
#include <vector>

namespace eiscomp {

// Integer n-tuple: a highest weight / torus character of GL_n.
using Weight = std::vector<int>;

inline bool is_dominant(const Weight& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] < w[i]) return false;
  return true;
}

inline int weight_sum(const Weight& w) {
  int s = 0;
  for (int x : w) s += x;
  return s;
}

inline bool all_even(const Weight& w) {
  for (int x : w)
    if (x % 2 != 0) return false;
  return true;
}

// "(1,-1,2)"
std::string weight_str(const Weight& w);

// Parses "1,1,0"; throws std::invalid_argument on malformed input.
Weight parse_weight(const std::string& s);

}  // namespace eiscomp
