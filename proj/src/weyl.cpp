#include "eiscomp/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eiscomp::weyl {

WeylWord::WeylWord(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  pos_.assign(n, -1);
  for (int p = 0; p < n; ++p) {
    const int v = word_[p];
    if (v < 1 || v > n || pos_[v - 1] != -1)
      throw std::invalid_argument("word is not a permutation of {1..n}");
    pos_[v - 1] = p;
  }
}

WeylWord WeylWord::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return WeylWord(std::move(w));
}

std::vector<WeylWord> WeylWord::all(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<WeylWord> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

int WeylWord::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < word_.size(); ++i)
    for (std::size_t j = i + 1; j < word_.size(); ++j)
      if (word_[i] > word_[j]) ++inv;
  return inv;
}

WeylWord WeylWord::compose(const WeylWord& other) const {
  if (n() != other.n()) throw std::invalid_argument("composing words of different sizes");
  // Positions: (this*other)(v) = this(other(v)). Rebuild the word from the map.
  std::vector<int> word(n());
  for (int v = 1; v <= n(); ++v) {
    const int p = position_of(other.position_of(v) + 1);
    word[p] = v;
  }
  return WeylWord(std::move(word));
}

Weight WeylWord::apply(const Weight& x) const {
  if (static_cast<int>(x.size()) != n())
    throw std::invalid_argument("weight size does not match word size");
  Weight out(x.size());
  for (int i = 0; i < n(); ++i) out[position_of(i + 1)] = x[i];
  return out;
}

std::string WeylWord::str() const {
  std::string s;
  for (int v : word_) s += std::to_string(v);
  return s;
}

Weight rho(int n) {
  Weight r(n);
  for (int i = 0; i < n; ++i) r[i] = n - 1 - i;
  return r;
}

Weight dot_action(const WeylWord& w, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != w.n())
    throw std::invalid_argument("dot_action: size mismatch");
  const Weight r = rho(w.n());
  Weight shifted(lambda);
  for (int i = 0; i < w.n(); ++i) shifted[i] += r[i];
  Weight moved = w.apply(shifted);
  for (int i = 0; i < w.n(); ++i) moved[i] -= r[i];
  return moved;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)), n_(0) {
  if (parts_.empty()) throw std::invalid_argument("empty composition");
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("composition parts must be positive");
    n_ += p;
  }
}

std::vector<std::pair<int, int>> Composition::blocks() const {
  std::vector<std::pair<int, int>> out;
  int start = 0;
  for (int p : parts_) {
    out.emplace_back(start, p);
    start += p;
  }
  return out;
}

std::vector<int> Composition::cuts() const {
  std::vector<int> out;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    acc += parts_[i];
    out.push_back(acc);
  }
  return out;
}

std::string Composition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out;
}

bool face_incidence(const Composition& c1, const Composition& c2) {
  if (c1.n() != c2.n()) throw std::invalid_argument("face_incidence: size mismatch");
  const std::vector<int> a = c1.cuts(), b = c2.cuts();
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  // Subsets of cut positions {1..n-1}.
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int prev = 0;
    for (int c = 1; c < n; ++c)
      if (mask & (1u << (c - 1))) {
        parts.push_back(c - prev);
        prev = c;
      }
    parts.push_back(n - prev);
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Weight KostantDatum::flat_weight() const {
  Weight out;
  for (const auto& b : levi_weight) out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<KostantDatum> kostant_reps(const Composition& c, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != c.n())
    throw std::invalid_argument("kostant_reps: size mismatch");
  if (!is_dominant(lambda))
    throw std::invalid_argument("kostant_reps: weight is not dominant");
  std::vector<KostantDatum> out;
  for (const WeylWord& w : WeylWord::all(c.n())) {
    const Weight r = rho(c.n());
    Weight shifted(lambda);
    for (int i = 0; i < c.n(); ++i) shifted[i] += r[i];
    const Weight nu = w.apply(shifted);
    bool blockwise_decreasing = true;
    for (const auto& [start, len] : c.blocks())
      for (int i = start + 1; i < start + len; ++i)
        if (nu[i - 1] <= nu[i]) {
          blockwise_decreasing = false;
          break;
        }
    if (!blockwise_decreasing) continue;
    Weight dot = nu;
    for (int i = 0; i < c.n(); ++i) dot[i] -= r[i];
    std::vector<Weight> split;
    for (const auto& [start, len] : c.blocks())
      split.emplace_back(dot.begin() + start, dot.begin() + start + len);
    out.push_back(KostantDatum{w, w.length(), std::move(split)});
  }
  return out;
}

long long weyl_dimension(const Weight& mu) {
  const int m = static_cast<int>(mu.size());
  if (!is_dominant(mu)) throw std::invalid_argument("weyl_dimension: non-dominant weight");
  long long num = 1, den = 1;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      num *= mu[i] - mu[j] + j - i;
      den *= j - i;
    }
  return num / den;
}

}  // namespace eiscomp::weyl
