#include "eiscomp/linalg.hpp"

#include <cstddef>
#include <stdexcept>

namespace eiscomp {

int rank(QMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  int r = 0;
  for (std::size_t col = 0; col < cols && r < static_cast<int>(rows); ++col) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!m[i][col].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][col].is_zero()) continue;
      Rational factor = m[i][col] / m[r][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return r;
}

Rational determinant(QMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t i = col; i < n; ++i) {
      if (!m[i][col].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[col], m[pivot]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col].is_zero()) continue;
      Rational factor = m[i][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= factor * m[col][j];
    }
  }
  return det;
}

IMatrix identity_matrix(int n) {
  IMatrix m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMatrix mat_mul(const IMatrix& a, const IMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), cols = b.empty() ? 0 : b[0].size();
  IMatrix out(n, std::vector<long long>(cols, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

IMatrix mat_pow(const IMatrix& a, int e) {
  IMatrix acc = identity_matrix(static_cast<int>(a.size()));
  IMatrix base = a;
  while (e > 0) {
    if (e & 1) acc = mat_mul(acc, base);
    e >>= 1;
    if (e) base = mat_mul(base, base);
  }
  return acc;
}

long long mat_trace(const IMatrix& a) {
  long long t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

long long mat_det(const IMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  long long det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    IMatrix minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[i][c]);
      minor.push_back(std::move(row));
    }
    long long term = a[0][j] * mat_det(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

IMatrix block_diag(const std::vector<IMatrix>& blocks) {
  int total = 0;
  for (const auto& b : blocks) total += static_cast<int>(b.size());
  IMatrix out(total, std::vector<long long>(total, 0));
  int off = 0;
  for (const auto& b : blocks) {
    const int s = static_cast<int>(b.size());
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) out[off + i][off + j] = b[i][j];
    off += s;
  }
  return out;
}

}  // namespace eiscomp
