#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eiscomp/types.hpp"

namespace eiscomp::weyl {

// Permutation of {1..n} written value-per-position: "231" places value 2 in
// position 1, 3 in position 2 and 1 in position 3, i.e. w(1)=3, w(2)=1,
// w(3)=2 as a map from values to positions. Acting on coordinate tuples,
// (w.x)_{w(i)} = x_i.
class WeylWord {
 public:
  explicit WeylWord(std::vector<int> word);

  static WeylWord identity(int n);
  static std::vector<WeylWord> all(int n);  // lexicographic by word

  int n() const { return static_cast<int>(word_.size()); }
  int value_at(int pos) const { return word_[pos]; }          // 0-based pos
  int position_of(int value) const { return pos_[value - 1]; }  // 0-based

  int length() const;  // inversion count of the word

  // this after other: (this*other)(i) = this(other(i)) on value->position maps.
  WeylWord compose(const WeylWord& other) const;

  Weight apply(const Weight& x) const;  // coordinate i moves to position w(i)

  std::string str() const;  // "231"

  bool operator==(const WeylWord& o) const { return word_ == o.word_; }
  bool operator<(const WeylWord& o) const { return word_ < o.word_; }

 private:
  std::vector<int> word_;  // value at each position, values 1..n
  std::vector<int> pos_;   // pos_[v-1] = position of value v
};

// rho realized as (n-1, n-2, ..., 0); any constant shift acts identically
// under the dot action since permutations fix constant vectors.
Weight rho(int n);

// w.lambda = w(lambda + rho) - rho.
Weight dot_action(const WeylWord& w, const Weight& lambda);

// Ordered tuple of positive block sizes summing to n; names a standard
// parabolic subgroup / boundary face.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  int n() const { return n_; }
  const std::vector<int>& parts() const { return parts_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  // Half-open block ranges [start, start+len), 0-based.
  std::vector<std::pair<int, int>> blocks() const;
  // Cut positions in {1..n-1}; refinement = superset of cuts.
  std::vector<int> cuts() const;

  std::string str() const;  // "2,1,1"

  bool operator==(const Composition& o) const { return parts_ == o.parts_; }
  bool operator<(const Composition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
  int n_;
};

// True iff c2 refines c1: every block of c1 is a consecutive concatenation of
// blocks of c2. Reflexive. Throws on mismatched n.
bool face_incidence(const Composition& c1, const Composition& c2);

std::vector<Composition> compositions_of(int n);

struct KostantDatum {
  WeylWord w;
  int length;
  std::vector<Weight> levi_weight;  // dot-action weight split along blocks

  Weight flat_weight() const;
};

// The unique minimal-length representatives of W_P \ W: exactly the words w
// for which w(lambda + rho) is strictly decreasing within each block (lambda
// dominant makes lambda + rho regular, so each coset picks one). Sorted by
// word. Throws on non-dominant lambda.
std::vector<KostantDatum> kostant_reps(const Composition& c, const Weight& lambda);

// Weyl dimension formula for a dominant GL_m weight:
// prod_{i<j} (mu_i - mu_j + j - i) / (j - i).
long long weyl_dimension(const Weight& mu);

}  // namespace eiscomp::weyl
