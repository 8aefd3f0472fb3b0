#pragma once

#include "eiscomp/labels.hpp"
#include "eiscomp/registry.hpp"
#include "eiscomp/types.hpp"

namespace eiscomp::levi {

// H^*(GL_1(Z), V_a): one class in degree 0 iff a is even ({+-1} acts through
// the parity of a).
GradedSum gl1_cohomology(int a);

// H^*(GL_2(Z), V_{a,b}) for a >= b. Zero whenever a+b is odd. For a = b one
// degree-0 class iff a even. For a > b the degree-1 part carries the cuspidal
// line bundle of dimension dim S_{a-b+2}, plus a one-dimensional Eisenstein
// class exactly when a and b are both odd.
GradedSum gl2_cohomology(int a, int b);

// H^*(GL_3(Z), V_mu) from the facts registry, for the blocked weights that
// occur in the GL_4 pipeline: constant weights (and even det twists of the
// two branch-dependent weights (1,1,0), (2,1,1)). The branch selects the
// Hecke-module label of the degree-2 class; it must be set when mu is
// branch-dependent.
GradedSum registry_cohomology(const FactsRegistry& reg, const Weight& mu, Branch branch);

// Dispatch on block size: 1 -> gl1, 2 -> gl2, 3 -> registry.
GradedSum block_cohomology(const FactsRegistry& reg, const Weight& mu, Branch branch);

// The branch-dependent torus labels of the degree-2 GL_3 classes; rule data
// keyed by (weight, branch). In the ghost branch the class also restricts to
// zero on every proper face.
struct BranchLabel {
  Weight torus;
  bool face_restriction_zero;
};
BranchLabel gl3_branch_label(const Weight& mu, Branch branch);

}  // namespace eiscomp::levi
