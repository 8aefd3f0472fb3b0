#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eiscomp/types.hpp"

namespace eiscomp::levi {

// One tensor factor of a Hecke-module label, attached to a Levi block.
//
//   GL1            H^0(GL_1(Z), V_a), one-dimensional, prints "a"
//   GL2H0          H^0(GL_2(Z), V_{a,a}), one-dimensional, prints "a|a"
//   GL2Eisenstein  Eisenstein line of H^1(GL_2(Z), V_{a,b}), prints "a,b"
//   GL2Interior    cuspidal part of H^1(GL_2(Z), V_{a,b}), prints "~a,b";
//                  dimension dim S_{a-b+2}, invisible on smaller faces
//   GL3            imported H^*(GL_3(Z), V_mu) line; prints "m1,m2,m3", or
//                  "c|c|c" for the degree-0 classes of constant weight
struct Segment {
  enum class Kind { GL1, GL2H0, GL2Eisenstein, GL2Interior, GL3 };

  Kind kind;
  Weight weight;                      // 1, 2 or 3 entries per kind
  int dim = 1;
  std::optional<Weight> torus;        // restriction to the diagonal torus
  bool face_restriction_zero = false; // dies on every proper smaller face

  std::string str() const;
};

// Ordered tensor product of segments along the blocks of a face.
struct ModuleLabel {
  std::vector<Segment> segments;

  int dim() const;
  std::string str() const;  // "(1,-1|2|2)"

  bool operator==(const ModuleLabel& o) const;
};

// Concatenated torus character tuple, or nullopt if any factor has none
// (cuspidal classes die on the torus face).
std::optional<Weight> torus_restriction(const ModuleLabel& l);

// One-dimensional labels are isomorphic Hecke modules iff both torus
// restrictions are defined and equal. Throws on labels of dimension > 1.
bool hecke_isomorphic(const ModuleLabel& a, const ModuleLabel& b);

// Degree -> labels; zero-dimensional labels are never stored.
class GradedSum {
 public:
  void add(int degree, ModuleLabel label);

  bool empty() const { return by_degree_.empty(); }
  std::vector<int> degrees() const;
  const std::vector<ModuleLabel>& at(int degree) const;
  bool has(int degree) const { return by_degree_.count(degree) > 0; }

  int total_dim() const;
  int dim_at(int degree) const;
  long long euler_characteristic() const;  // sum of (-1)^q dims

  const std::map<int, std::vector<ModuleLabel>>& cells() const { return by_degree_; }

 private:
  std::map<int, std::vector<ModuleLabel>> by_degree_;
};

// Graded tensor product: degrees add, segment lists concatenate, dimensions
// multiply. Empty factor annihilates. kunneth({}) is one trivial class in
// degree 0 (empty label of dimension 1).
GradedSum kunneth(const std::vector<GradedSum>& parts);

}  // namespace eiscomp::levi
