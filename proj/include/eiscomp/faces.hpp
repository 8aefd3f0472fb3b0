#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eiscomp/labels.hpp"
#include "eiscomp/levi.hpp"
#include "eiscomp/weyl.hpp"

namespace eiscomp::faces {

using levi::Branch;
using levi::FactsRegistry;
using levi::ModuleLabel;
using weyl::Composition;
using weyl::WeylWord;

// One summand of H^q(P, V): a Kostant word w combined with the Levi-block
// base cases sitting in internal degree total_degree = length(w) + levi part.
struct FaceClass {
  Composition face;
  WeylWord origin;
  int levi_degree;
  int total_degree;
  ModuleLabel label;
  bool face_restriction_zero;
};

struct FaceCohomology {
  Composition face;
  std::map<int, std::vector<FaceClass>> by_degree;

  int dim_at(int q) const;
  long long euler_characteristic() const;
};

// Standard parabolic faces of GL_n in display order: maximal first, then
// decreasing block sizes, Borel last.
const std::vector<Composition>& standard_faces(int n);

// Canonical alias: GL_3: Q_12, Q_23, Q_0; GL_4: P_13, P_12,34, P_24, P_12,
// P_23, P_34, B.
std::string face_name(const Composition& c);
// Accepts an alias ("P_12,34", "Q0", "B", case-insensitive, underscore
// optional) or explicit parts ("2,1,1"); n disambiguates "B".
Composition parse_face(const std::string& text, int n);

// H^q(P, V_lambda) assembled from Kostant data and Levi base cases, with the
// Leray-Serre sequence degenerate (tensor assembly).
FaceCohomology face_cohomology(const FactsRegistry& reg, int n, const Weight& lambda,
                               const Composition& face, Branch branch);

struct FacesTableRow {
  WeylWord w;
  int length;
  Weight dot_weight;
  // face index (into standard_faces(n)) -> classes with this origin
  std::map<int, std::vector<FaceClass>> entries;
};

struct FacesTable {
  int n;
  Weight lambda;
  Branch branch;
  std::vector<Composition> faces;
  std::vector<FacesTableRow> rows;
};

FacesTable all_faces_table(const FactsRegistry& reg, int n, const Weight& lambda,
                           Branch branch);

// Aligned text rendering of the Weyl/faces table (one row per word).
std::string render_table(const FacesTable& t);

// The per-face cohomology displays, one block per face.
std::string render_face_displays(const FactsRegistry& reg, int n, const Weight& lambda,
                                 Branch branch);

}  // namespace eiscomp::faces
