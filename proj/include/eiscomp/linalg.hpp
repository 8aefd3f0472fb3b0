#pragma once

#include <vector>

#include "eiscomp/rational.hpp"

namespace eiscomp {

using QMatrix = std::vector<std::vector<Rational>>;
using IMatrix = std::vector<std::vector<long long>>;

// Exact rank via fraction-free style Gaussian elimination over Q.
int rank(QMatrix m);

Rational determinant(QMatrix m);

IMatrix identity_matrix(int n);
IMatrix mat_mul(const IMatrix& a, const IMatrix& b);
IMatrix mat_pow(const IMatrix& a, int e);  // e >= 0
long long mat_trace(const IMatrix& a);
long long mat_det(const IMatrix& a);  // exact, cofactor expansion (small n)

// Block-diagonal assembly of square integer matrices.
IMatrix block_diag(const std::vector<IMatrix>& blocks);

}  // namespace eiscomp
