#pragma once

#include <map>
#include <string>
#include <vector>

#include "eiscomp/rational.hpp"

namespace eiscomp::exact {

// Univariate polynomial over Z, coefficients stored lowest degree first.
// The zero polynomial has an empty coefficient vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<long long> coeffs);

  static IntPolynomial constant(long long c);
  static IntPolynomial monomial(int degree, long long c = 1);  // c * x^degree

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  long long leading() const;
  long long coeff(int i) const;
  const std::vector<long long>& coeffs() const { return coeffs_; }

  long long eval(long long x) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  // Exact division; throws std::domain_error if the remainder is nonzero.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

  std::string str() const;  // e.g. "x^4 - x^2 + 1"

 private:
  std::vector<long long> coeffs_;
};

// n-th cyclotomic polynomial, monic and irreducible over Q.
IntPolynomial cyclotomic(int n);

// Sylvester resultant, computed fraction-free over 128-bit integers. For
// monic f, g this equals the product over root pairs of (alpha_i - beta_j).
long long resultant(const IntPolynomial& f, const IntPolynomial& g);

// Characteristic polynomial kept in factored form: cyclotomic index -> power.
struct FactoredCharPoly {
  std::map<int, int> factors;

  int total_degree() const;
  IntPolynomial expand() const;
  std::string str() const;  // "Phi_1^2 Phi_2^2"
  bool operator==(const FactoredCharPoly& o) const { return factors == o.factors; }
};

// Pairwise product of resultants of the prime-power factors; Phi_n^k against
// Phi_m^l contributes resultant(Phi_n, Phi_m)^(k*l). Single factor gives 1.
long long res_of_factored(const FactoredCharPoly& f);

}  // namespace eiscomp::exact
