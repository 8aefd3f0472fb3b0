#pragma once

#include <vector>

#include "eiscomp/linalg.hpp"
#include "eiscomp/weyl.hpp"

// Brute-force Chevalley-Eilenberg cohomology of the nilpotent radical n_P on
// a small gl_n module, used as an independent oracle for the Kostant-formula
// path. Lives in test code only.
namespace ce_oracle {

using eiscomp::IMatrix;
using eiscomp::Weight;
using eiscomp::weyl::Composition;

// A gl_n module given by the action matrices of the elementary matrices
// E_{ab} (0-based indices a, b).
struct GlModule {
  int n;
  int dim;
  // action[a][b] is the dim x dim matrix of E_{ab}.
  std::vector<std::vector<IMatrix>> action;

  static GlModule trivial(int n);
  static GlModule standard(int n);
  static GlModule lambda2_standard(int n);
  // Supports det^c twists of the trivial, standard and Lambda^2 standard
  // modules; the twist itself acts by the trace, which vanishes on n_P.
  static GlModule for_weight(int n, const Weight& lambda);
};

// Dimensions of H^k(n_P, V) for k = 0..dim n_P, via exact rank computations
// on the Chevalley-Eilenberg differentials.
std::vector<int> cohomology_dims(const Composition& face, const GlModule& module);

// The same dimensions predicted by the Kostant formula: sum over minimal
// coset representatives of length k of the blockwise Weyl dimensions.
std::vector<int> kostant_dims(const Composition& face, const Weight& lambda);

}  // namespace ce_oracle
