#pragma once

#include <string>
#include <vector>

#include "eiscomp/spectral.hpp"

namespace eiscomp::ghost {

using levi::Branch;
using levi::FactsRegistry;
using levi::GradedSum;
using levi::ModuleLabel;

// Potentially ghost classes of GL_3(Z): per degree q, the cokernel of
// H^{q-1}(Q_12) + H^{q-1}(Q_23) -> H^{q-1}(Q_0) under torus-label matching
// (= the image of the connecting homomorphism, by exactness). Needs only the
// GL_1/GL_2 base cases.
GradedSum potentially_ghost(const Weight& lambda);

struct PghScanRow {
  Weight lambda;
  GradedSum pgh;
};

std::vector<PghScanRow> pgh_scan(const std::vector<Weight>& weights);

// The two scan families: odd symmetric powers of the standard representation
// twisted by det ((2k+2,1,1) for k = 0..count-1), and their duals normalized
// by an even det twist ((2k+1,2k+1,0)).
std::vector<Weight> scan_family(const std::string& name, int count);

struct BranchReport {
  Weight lambda;
  Branch branch;
  ModuleLabel h2_eis;
  Weight h2_eis_torus;
  ModuleLabel pgh2;           // the degree-2 potentially ghost space
  int pgh2_dim;
  bool pgh_matches_registry;  // pGh^2 is one-dimensional as fact (ii) needs
  bool eis_equals_pgh;        // true exactly on the ghost branch
};

// Both branches of the dichotomy for lambda in {(1,1,0), (2,1,1)}:
// no-ghost forces H^2_Eis onto the maximal-face kernel label, ghost makes it
// the potentially ghost line itself.
std::pair<BranchReport, BranchReport> branch_analysis(const FactsRegistry& reg,
                                                      const Weight& lambda);

struct TranscriptStep {
  int id;
  std::string statement;
  std::vector<std::string> inputs;  // earlier step ids / registry keys
  std::string rule;
  std::string citation;
};

struct Transcript {
  std::vector<TranscriptStep> steps;
  std::string final_result;

  std::string str() const;
};

struct TranscriptError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// End-to-end replay with checks: Euler characteristics, the vector-space
// dimensions of H^*(GL_4, Q) and H^*(GL_4, det), the vanishing of
// H^4_boundary, the no-ghost contradiction, the ghost-branch boundary, and
// the final identification of H^3(GL_4(Z), det). Deterministic; every step
// carries its citation; a failed check throws TranscriptError.
Transcript prove_ghost(const FactsRegistry& reg);

}  // namespace eiscomp::ghost
