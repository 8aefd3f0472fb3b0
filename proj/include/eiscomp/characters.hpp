#pragma once

#include "eiscomp/linalg.hpp"
#include "eiscomp/rational.hpp"
#include "eiscomp/types.hpp"

namespace eiscomp::exact {

// Character of the irreducible GL_m representation of highest weight lambda,
// evaluated at the integer matrix a. Power sums p_k = tr(a^k) feed Newton's
// identities for the complete homogeneous functions, and the Jacobi-Trudi
// determinant assembles the Schur value. Weights with negative entries are
// reduced by factoring out a power of det first. Exact throughout; no
// cyclotomic-field arithmetic is needed because every character used here is
// symmetric in the eigenvalues.
Rational schur_value(const Weight& lambda, const IMatrix& a);

// Dimension of level-one weight-k cusp forms (classical closed formula):
// 0 for odd k, k < 12 or k = 14; otherwise floor(k/12) - 1 if k = 2 mod 12,
// else floor(k/12).
int cusp_dim(int k);

}  // namespace eiscomp::exact
