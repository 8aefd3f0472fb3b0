#pragma once

#include <string>
#include <vector>

#include "eiscomp/linalg.hpp"
#include "eiscomp/polynomial.hpp"
#include "eiscomp/rational.hpp"
#include "eiscomp/types.hpp"

namespace eiscomp::euler {

// Building blocks of the torsion representatives: the scalars +-1, the fixed
// 2x2 matrices of orders 3, 4 and 6, and the 4x4 companion matrices of the
// degree-4 cyclotomic polynomials.
struct TorsionBlock {
  enum class Kind { One, MinusOne, T3, T4, T6, Companion };

  Kind kind;
  int size;
  int cyclo_index;  // block characteristic polynomial is Phi_{cyclo_index}
  IMatrix matrix;

  static TorsionBlock one();
  static TorsionBlock minus_one();
  static TorsionBlock t3();  // [[0,1],[-1,-1]]
  static TorsionBlock t4();  // [[0,1],[-1,0]]
  static TorsionBlock t6();  // [[0,-1],[1,1]]
  static TorsionBlock companion(int cyclo_index);  // 5, 8, 10, 12
};

// Block-diagonal torsion conjugacy class representative.
struct TorsionClass {
  std::vector<TorsionBlock> blocks;  // canonical order

  int n() const;
  IMatrix matrix() const;
  exact::FactoredCharPoly charpoly() const;
  long long det() const;
  std::string str() const;  // "Phi_1^2 Phi_2^2"
};

// All block multisets with sizes summing to n: the scalar blocks at most
// twice, T3/T4/T6 at most once, plus (n = 4) the single-block companion
// classes for Phi_5, Phi_8, Phi_10, Phi_12. Order of blocks is canonical;
// reordering does not give a new class.
std::vector<TorsionClass> enumerate_torsion(int n);

// Symbolic centralizer with its orbifold Euler characteristic; chi values are
// rule data with citations, not derivations.
struct CentralizerDescriptor {
  std::string kind;       // "GL_2(Z) x C_6"
  Rational chi;
  std::string rationale;  // why chi has this value (or vanishes)
};

CentralizerDescriptor centralizer_chi(const TorsionClass& t);

// chi_h(GL_n(Z), V_lambda) = sum over torsion classes of
// Res(f_A) * chi(C(A)) * Tr(A | V_lambda), an exact rational.
Rational euler_characteristic(int n, const Weight& lambda);

struct Table1Row {
  TorsionClass cls;
  CentralizerDescriptor cent;
  long long det;
  long long res;
  Rational product;  // chi(C(A)) * R(f)
};

struct Table1 {
  std::vector<Table1Row> rows;                      // nonzero contributions
  std::vector<std::pair<TorsionClass, CentralizerDescriptor>> zero_rows;
  Rational total_trivial;  // chi_h(GL_4, Q)
  Rational total_det;      // chi_h(GL_4, det)
};

Table1 table1();

std::string render_table1(const Table1& t);

}  // namespace eiscomp::euler
