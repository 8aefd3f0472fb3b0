#include "support/ce_oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ce_oracle {

using eiscomp::QMatrix;
using eiscomp::Rational;

GlModule GlModule::trivial(int n) {
  GlModule m{n, 1, {}};
  m.action.assign(n, std::vector<IMatrix>(n, IMatrix(1, std::vector<long long>(1, 0))));
  return m;
}

GlModule GlModule::standard(int n) {
  GlModule m{n, n, {}};
  m.action.assign(n, std::vector<IMatrix>(n, IMatrix(n, std::vector<long long>(n, 0))));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.action[a][b][a][b] = 1;  // E_{ab} e_b = e_a
  return m;
}

GlModule GlModule::lambda2_standard(int n) {
  std::vector<std::pair<int, int>> basis;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) basis.emplace_back(i, j);
  const int dim = static_cast<int>(basis.size());
  auto index_of = [&basis](int x, int y) -> std::pair<int, int> {
    // returns (index, sign) of e_x ^ e_y, sign 0 when x == y
    if (x == y) return {-1, 0};
    const int sign = x < y ? 1 : -1;
    if (x > y) std::swap(x, y);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k] == std::make_pair(x, y)) return {static_cast<int>(k), sign};
    return {-1, 0};
  };
  GlModule m{n, dim, {}};
  m.action.assign(n, std::vector<IMatrix>(n, IMatrix(dim, std::vector<long long>(dim, 0))));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int col = 0; col < dim; ++col) {
        const auto [i, j] = basis[col];
        // E_{ab} (e_i ^ e_j) = (E_{ab} e_i) ^ e_j + e_i ^ (E_{ab} e_j)
        if (b == i) {
          const auto [row, sign] = index_of(a, j);
          if (row >= 0) m.action[a][b][row][col] += sign;
        }
        if (b == j) {
          const auto [row, sign] = index_of(i, a);
          if (row >= 0) m.action[a][b][row][col] += sign;
        }
      }
  return m;
}

GlModule GlModule::for_weight(int n, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != n)
    throw std::invalid_argument("ce_oracle: weight size mismatch");
  const int c = lambda.back();
  Weight mu(lambda);
  for (int& x : mu) x -= c;
  if (std::all_of(mu.begin(), mu.end(), [](int x) { return x == 0; })) return trivial(n);
  Weight std_wt(n, 0);
  std_wt[0] = 1;
  if (mu == std_wt) return standard(n);
  Weight l2(n, 0);
  l2[0] = l2[1] = 1;
  if (mu == l2) return lambda2_standard(n);
  throw std::invalid_argument("ce_oracle: unsupported weight " + eiscomp::weight_str(lambda));
}

namespace {

// Generators of n_P: elementary matrices E_{ab} with block(a) < block(b).
std::vector<std::pair<int, int>> radical_basis(const Composition& face) {
  std::vector<int> block_of(face.n());
  int bi = 0;
  for (const auto& [start, len] : face.blocks()) {
    for (int i = start; i < start + len; ++i) block_of[i] = bi;
    ++bi;
  }
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < face.n(); ++a)
    for (int b = 0; b < face.n(); ++b)
      if (block_of[a] < block_of[b]) out.emplace_back(a, b);
  return out;
}

// [E_{ab}, E_{cd}] = delta_{bc} E_{ad} - delta_{da} E_{cb}; inside n_P at
// most one of the two terms survives.
struct BracketTerm {
  int gen;   // index into the radical basis, or -1
  int sign;  // +-1
};

BracketTerm bracket(const std::vector<std::pair<int, int>>& gens, int x, int y) {
  const auto [a, b] = gens[x];
  const auto [c, d] = gens[y];
  int ra = -1, rb = -1, sign = 0;
  if (b == c) {
    ra = a;
    rb = d;
    sign = 1;
  } else if (d == a) {
    ra = c;
    rb = b;
    sign = -1;
  } else {
    return {-1, 0};
  }
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (gens[k] == std::make_pair(ra, rb)) return {static_cast<int>(k), sign};
  return {-1, 0};
}

// k-subsets of {0..m-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < m; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Position and sign of inserting value v into the sorted set s (without v).
std::pair<std::vector<int>, int> insert_sorted(const std::vector<int>& s, int v) {
  std::vector<int> out = s;
  const auto it = std::lower_bound(out.begin(), out.end(), v);
  const int moved = static_cast<int>(it - out.begin());
  out.insert(it, v);
  return {out, moved % 2 == 0 ? 1 : -1};
}

}  // namespace

std::vector<int> cohomology_dims(const Composition& face, const GlModule& module) {
  if (module.n != face.n()) throw std::invalid_argument("ce_oracle: size mismatch");
  const auto gens = radical_basis(face);
  const int m = static_cast<int>(gens.size());
  const int vdim = module.dim;

  std::vector<std::vector<std::vector<int>>> bases(m + 1);
  std::vector<std::map<std::vector<int>, int>> index(m + 1);
  for (int k = 0; k <= m; ++k) {
    bases[k] = subsets(m, k);
    for (std::size_t i = 0; i < bases[k].size(); ++i) index[k][bases[k][i]] = static_cast<int>(i);
  }

  // d_k : C^k -> C^{k+1} on cochains; build column by column.
  std::vector<QMatrix> diff(m);
  for (int k = 0; k < m; ++k) {
    const auto& src = bases[k];
    const auto& dst = bases[k + 1];
    QMatrix d(dst.size() * vdim,
              std::vector<Rational>(src.size() * vdim, Rational(0)));
    for (std::size_t ti = 0; ti < dst.size(); ++ti) {
      const std::vector<int>& tuple = dst[ti];
      // Action terms: (d phi)(x_1..x_{k+1}) += (-1)^{i+1} x_i . phi(.. x_i ..)
      for (int i = 0; i <= k; ++i) {
        std::vector<int> rest = tuple;
        rest.erase(rest.begin() + i);
        const int src_set = index[k].at(rest);
        const int term_sign = i % 2 == 0 ? 1 : -1;  // (-1)^{i+1} with 1-based i
        const auto [a, b] = gens[tuple[i]];
        const IMatrix& act = module.action[a][b];
        for (int w = 0; w < vdim; ++w)
          for (int v = 0; v < vdim; ++v)
            if (act[w][v] != 0)
              d[ti * vdim + w][src_set * vdim + v] += Rational(term_sign * act[w][v]);
      }
      // Bracket terms: += (-1)^{i+j} phi([x_i, x_j], ..)
      for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
          const BracketTerm br = bracket(gens, tuple[i], tuple[j]);
          if (br.gen < 0) continue;
          std::vector<int> rest = tuple;
          rest.erase(rest.begin() + j);
          rest.erase(rest.begin() + i);
          if (std::find(rest.begin(), rest.end(), br.gen) != rest.end()) continue;
          const auto [sorted, insert_sign] = insert_sorted(rest, br.gen);
          const int src_set = index[k].at(sorted);
          const int term_sign = ((i + j) % 2 == 0 ? 1 : -1);  // (-1)^{i+j}, 1-based
          const int total = term_sign * insert_sign * br.sign;
          for (int v = 0; v < vdim; ++v)
            d[ti * vdim + v][src_set * vdim + v] += Rational(total);
        }
    }
    diff[k] = std::move(d);
  }

  std::vector<int> ranks(m, 0);
  for (int k = 0; k < m; ++k) ranks[k] = eiscomp::rank(diff[k]);
  std::vector<int> dims(m + 1, 0);
  for (int k = 0; k <= m; ++k) {
    int h = static_cast<int>(bases[k].size()) * vdim;
    if (k < m) h -= ranks[k];
    if (k > 0) h -= ranks[k - 1];
    dims[k] = h;
  }
  return dims;
}

std::vector<int> kostant_dims(const Composition& face, const Weight& lambda) {
  const auto gens = radical_basis(face);
  std::vector<int> dims(gens.size() + 1, 0);
  for (const auto& datum : eiscomp::weyl::kostant_reps(face, lambda)) {
    long long d = 1;
    for (const Weight& block : datum.levi_weight) d *= eiscomp::weyl::weyl_dimension(block);
    dims[datum.length] += static_cast<int>(d);
  }
  return dims;
}

}  // namespace ce_oracle
