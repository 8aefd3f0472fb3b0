#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eiscomp/faces.hpp"
#include "eiscomp/linalg.hpp"

namespace eiscomp::spectral {

using faces::Branch;
using faces::Composition;
using faces::FaceClass;
using faces::FactsRegistry;
using levi::ModuleLabel;

// Display-only label built from a torus character tuple: (0|2|0|2).
ModuleLabel torus_label(const Weight& tuple);

// E_1 of the boundary spectral sequence: column p holds the faces of corank
// p+1 (GL_4: p=0 maximal, p=1 intermediate, p=2 Borel; GL_3: p=0 maximal,
// p=1 Borel; for GL_3 the two-column page is the Mayer-Vietoris complex).
struct E1Page {
  int n;
  Weight lambda;
  Branch branch;
  int num_columns;
  std::map<int, std::map<int, std::vector<FaceClass>>> cells;  // [p][q]

  const std::vector<FaceClass>& at(int p, int q) const;
  int dim_at(int p, int q) const;
};

E1Page build_e1(const FactsRegistry& reg, int n, const Weight& lambda, Branch branch);

// The subcomplex of one torus isotype in one degree q (cuspidal classes form
// singleton complexes with zero differentials).
struct IsotypeComplex {
  std::optional<Weight> torus;
  int q;
  std::vector<std::vector<FaceClass>> columns;  // index p
  std::vector<QMatrix> d1;  // d1[p]: columns[p] -> columns[p+1]

  std::vector<int> column_dims() const;
  std::vector<int> d1_ranks() const;
  std::vector<int> homology_dims() const;
};

struct D1Options {
  // Orientation coefficient for an incident face pair (experimentation hook);
  // default is the Cech sign (-1)^(cuts of the coarser face below the new cut).
  std::function<Rational(const Composition&, const Composition&)> coefficient;
};

std::vector<IsotypeComplex> d1_isotypes(const E1Page& page, const D1Options& opts = {});

struct E2Entry {
  std::optional<Weight> torus;
  ModuleLabel display;  // torus label, or the class label for cuspidal entries
  int dim;
};

struct E2Page {
  int n;
  Weight lambda;
  Branch branch;
  int num_columns;
  std::map<std::pair<int, int>, std::vector<E2Entry>> cells;  // [(p,q)]

  int dim_at(int p, int q) const;
};

E2Page e2(const E1Page& page, const D1Options& opts = {});

// One potential d_2 arrow (p,q) -> (p+2,q-1), split by torus isotype.
// Feasible iff source and target carry Hecke-isomorphic (equal-torus) lines.
struct D2Arrow {
  int p;
  int q;
  std::optional<Weight> torus;
  int source_dim;
  int target_dim;
  bool feasible;
  int forced_rank = 0;
  std::string forcing_citation;
};

std::vector<D2Arrow> d2_feasible(const E2Page& page);

// External assertion on total-degree boundary dimensions, e.g. H^4 = 0.
struct Constraint {
  int total_degree;
  int dim;
  std::string citation;
};

struct ContradictionReport {
  ModuleLabel survivor;
  std::optional<Weight> torus;
  int total_degree;
  Constraint violated;
  std::string detail;
};

struct BoundaryEntry {
  int p;
  int q;
  std::optional<Weight> torus;
  ModuleLabel display;
  int dim;
};

struct BoundaryResult {
  E1Page e1_page;
  E2Page e2_page;
  E2Page e3_page;
  std::vector<D2Arrow> arrows;
  std::map<int, std::vector<BoundaryEntry>> boundary;  // total degree; entries
                                                       // ordered sub (high p)
                                                       // to quotient (low p)
  std::optional<ContradictionReport> contradiction;
  std::vector<std::string> notes;
};

// Fixes feasible d_2 ranks from the constraints (never analytically), then
// reads off E_3 = E_infinity by total degree. A Contradiction outcome is
// data, not failure: it names the class that survives against a constraint.
BoundaryResult boundary_cohomology(const FactsRegistry& reg, int n, const Weight& lambda,
                                   Branch branch, const std::vector<Constraint>& constraints);

std::string render_boundary(const BoundaryResult& r);

}  // namespace eiscomp::spectral
