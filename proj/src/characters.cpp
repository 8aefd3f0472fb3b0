#include "eiscomp/characters.hpp"

#include <stdexcept>

namespace eiscomp::exact {

Rational schur_value(const Weight& lambda, const IMatrix& a) {
  const int m = static_cast<int>(a.size());
  if (static_cast<int>(lambda.size()) != m)
    throw std::invalid_argument("schur_value: weight size does not match matrix size");
  if (!is_dominant(lambda))
    throw std::invalid_argument("schur_value: weight is not dominant");
  if (m == 0) return Rational(1);

  // Factor out det^c so the remaining partition is nonnegative.
  const int c = lambda.back();
  Weight mu(lambda);
  for (int& x : mu) x -= c;
  const long long det = mat_det(a);
  if (det == 0) throw std::invalid_argument("schur_value: singular matrix");
  const Rational det_power = Rational::pow(Rational(det), c);

  // Power sums p_k = tr(a^k), then h_k via Newton's identities.
  const int hmax = mu.empty() ? 0 : mu[0] + m;
  std::vector<Rational> p(hmax + 1, Rational(0));
  IMatrix power = identity_matrix(m);
  for (int k = 1; k <= hmax; ++k) {
    power = mat_mul(power, a);
    p[k] = Rational(mat_trace(power));
  }
  std::vector<Rational> h(hmax + 1, Rational(0));
  h[0] = Rational(1);
  for (int k = 1; k <= hmax; ++k) {
    Rational acc(0);
    for (int i = 1; i <= k; ++i) acc += h[k - i] * p[i];
    h[k] = acc / Rational(k);
  }

  // Jacobi-Trudi: s_mu = det( h_{mu_i + j - i} ), indices 1..m.
  QMatrix jt(m, std::vector<Rational>(m, Rational(0)));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      const int idx = mu[i - 1] + j - i;
      jt[i - 1][j - 1] = (idx < 0 || idx > hmax) ? Rational(0) : h[idx];
    }
  return det_power * determinant(jt);
}

int cusp_dim(int k) {
  if (k < 12 || k % 2 != 0 || k == 14) return 0;
  if (k % 12 == 2) return k / 12 - 1;
  return k / 12;
}

}  // namespace eiscomp::exact
