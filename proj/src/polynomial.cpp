#include "eiscomp/polynomial.hpp"

#include <limits>
#include <stdexcept>

namespace eiscomp::exact {

namespace {

void trim(std::vector<long long>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

long long narrow128(__int128 v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw std::overflow_error("polynomial arithmetic overflow");
  return static_cast<long long>(v);
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

IntPolynomial IntPolynomial::constant(long long c) {
  return IntPolynomial(std::vector<long long>{c});
}

IntPolynomial IntPolynomial::monomial(int degree, long long c) {
  std::vector<long long> v(degree + 1, 0);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

long long IntPolynomial::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

long long IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

long long IntPolynomial::eval(long long x) const {
  __int128 acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return narrow128(acc);
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<long long> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<long long> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<__int128> acc(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      acc[i + j] += (__int128)coeffs_[i] * o.coeffs_[j];
  std::vector<long long> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = narrow128(acc[i]);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<long long> rem = coeffs_;
  trim(rem);
  const int dd = divisor.degree();
  const long long lead = divisor.leading();
  std::vector<long long> quot;
  while (static_cast<int>(rem.size()) - 1 >= dd) {
    const int k = static_cast<int>(rem.size()) - 1 - dd;
    if (rem.back() % lead != 0) throw std::domain_error("inexact polynomial division");
    const long long q = rem.back() / lead;
    if (static_cast<int>(quot.size()) < k + 1) quot.resize(k + 1, 0);
    quot[k] = q;
    for (int i = 0; i <= dd; ++i) rem[k + i] -= q * divisor.coeff(i);
    trim(rem);
  }
  if (!rem.empty()) throw std::domain_error("inexact polynomial division");
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const long long c = coeff(i);
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    const long long a = c < 0 ? -c : c;
    if (i == 0) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a) + "*";
      out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return out;
}

IntPolynomial cyclotomic(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
  // Phi_n = (x^n - 1) / prod of Phi_d over proper divisors d of n.
  IntPolynomial num = IntPolynomial::monomial(n) - IntPolynomial::constant(1);
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = num.divide_exact(cyclotomic(d));
  return num;
}

long long resultant(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero())
    throw std::domain_error("resultant of zero polynomial");
  const int m = f.degree(), n = g.degree();
  if (m == 0 && n == 0) return 1;
  // Sylvester matrix, (m+n) x (m+n): n rows of f-coefficients, m rows of g.
  const int size = m + n;
  std::vector<std::vector<__int128>> s(size, std::vector<__int128>(size, 0));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + i] = f.coeff(m - i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = g.coeff(n - i);
  // Bareiss fraction-free elimination keeps everything integral.
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (s[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < size; ++i)
        if (s[i][k] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(s[k], s[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j)
        s[i][j] = (s[i][j] * s[k][k] - s[i][k] * s[k][j]) / prev;
      s[i][k] = 0;
    }
    prev = s[k][k];
  }
  return narrow128(sign * s[size - 1][size - 1]);
}

int FactoredCharPoly::total_degree() const {
  int d = 0;
  for (const auto& [idx, mult] : factors) d += cyclotomic(idx).degree() * mult;
  return d;
}

IntPolynomial FactoredCharPoly::expand() const {
  IntPolynomial out = IntPolynomial::constant(1);
  for (const auto& [idx, mult] : factors)
    for (int i = 0; i < mult; ++i) out = out * cyclotomic(idx);
  return out;
}

std::string FactoredCharPoly::str() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& [idx, mult] : factors) {
    if (!out.empty()) out += " ";
    out += "Phi_" + std::to_string(idx);
    if (mult > 1) out += "^" + std::to_string(mult);
  }
  return out;
}

long long res_of_factored(const FactoredCharPoly& f) {
  std::vector<std::pair<int, int>> fs(f.factors.begin(), f.factors.end());
  __int128 out = 1;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      const long long base = resultant(cyclotomic(fs[i].first), cyclotomic(fs[j].first));
      const int e = fs[i].second * fs[j].second;
      for (int k = 0; k < e; ++k) out *= base;
    }
  return narrow128(out);
}

}  // namespace eiscomp::exact
