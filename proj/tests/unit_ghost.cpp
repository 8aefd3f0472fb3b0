#include <doctest.h>

#include <map>

#include "eiscomp/euler.hpp"
#include "eiscomp/ghost.hpp"

using namespace eiscomp;
using ghost::branch_analysis;
using ghost::potentially_ghost;
using ghost::prove_ghost;
using levi::Branch;
using levi::FactsRegistry;
using levi::GradedSum;

namespace {

const FactsRegistry& reg() {
  static const FactsRegistry r = FactsRegistry::builtin();
  return r;
}

// Independent path: assemble the full d_1 matrix from the maximal faces to
// the Borel face in one block (ignoring the isotype partition) and compute
// the cokernel dimension by exact elimination.
int pgh_dim_by_big_matrix(const Weight& lambda, int q) {
  const auto page = spectral::build_e1(reg(), 3, lambda, Branch::Undetermined);
  const auto& borel = page.at(1, q - 1);
  const auto& maximal = page.at(0, q - 1);
  QMatrix m(borel.size(), std::vector<Rational>(maximal.size(), Rational(0)));
  for (std::size_t j = 0; j < maximal.size(); ++j) {
    const auto tj = levi::torus_restriction(maximal[j].label);
    if (!tj || maximal[j].face_restriction_zero) continue;
    for (std::size_t i = 0; i < borel.size(); ++i) {
      const auto ti = levi::torus_restriction(borel[i].label);
      if (ti && *ti == *tj &&
          weyl::face_incidence(maximal[j].face, borel[i].face))
        m[i][j] = Rational(1);  // rank is sign-independent for this check
    }
  }
  return static_cast<int>(borel.size()) - rank(m);
}

}  // namespace

TEST_CASE("potentially ghost spaces of the two paper weights") {
  const GradedSum a = potentially_ghost({1, 1, 0});
  REQUIRE(a.dim_at(2) == 1);
  CHECK(a.at(2).front().str() == "(0|2|0)");
  const GradedSum b = potentially_ghost({2, 1, 1});
  REQUIRE(b.dim_at(2) == 1);
  CHECK(b.at(2).front().str() == "(2|0|2)");
  const GradedSum c = potentially_ghost({0, 0, 0});
  CHECK(c.dim_at(2) == 0);
  CHECK_THROWS_AS(potentially_ghost({0, 1, 0}), std::invalid_argument);
}

TEST_CASE("pgh dimensions agree with the big-matrix cokernel") {
  const std::vector<Weight> weights = {{1, 1, 0}, {2, 1, 1}, {0, 0, 0}, {2, 2, 0},
                                       {4, 1, 1}, {3, 3, 0}, {2, 2, 2}, {4, 2, 0}};
  for (const Weight& lam : weights) {
    const GradedSum pgh = potentially_ghost(lam);
    for (int q = 1; q <= 4; ++q) {
      CAPTURE(weight_str(lam));
      CAPTURE(q);
      CHECK(pgh.dim_at(q) == pgh_dim_by_big_matrix(lam, q));
    }
  }
}

TEST_CASE("pgh scan over the two families") {
  const auto detfam = ghost::scan_family("odd-sym-det", 3);
  CHECK(detfam == std::vector<Weight>{{2, 1, 1}, {4, 1, 1}, {6, 1, 1}});
  const auto rows = ghost::pgh_scan(detfam);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].pgh.dim_at(2) == 1);
  CHECK(rows[0].pgh.at(2).front().str() == "(2|0|2)");
  CHECK(rows[1].pgh.dim_at(2) == 1);
  CHECK(rows[2].pgh.dim_at(2) == 1);

  const auto dualfam = ghost::scan_family("odd-sym-dual", 2);
  CHECK(dualfam == std::vector<Weight>{{1, 1, 0}, {3, 3, 0}});
  const auto drows = ghost::pgh_scan(dualfam);
  CHECK(drows[0].pgh.at(2).front().str() == "(0|2|0)");
  CHECK(drows[1].pgh.dim_at(2) == 1);

  CHECK_THROWS_AS(ghost::scan_family("bogus", 2), std::invalid_argument);

  // Exploratory weights produce recorded engine output, no claims.
  const auto exp = ghost::pgh_scan({Weight{2, 2, 0}});
  CHECK(exp.size() == 1);
}

TEST_CASE("branch analysis for both weights") {
  const auto [no110, g110] = branch_analysis(reg(), {1, 1, 0});
  CHECK(no110.branch == Branch::NoGhost);
  CHECK(no110.h2_eis_torus == Weight{-2, 2, 2});
  CHECK_FALSE(no110.eis_equals_pgh);
  CHECK(no110.pgh_matches_registry);
  CHECK(g110.branch == Branch::Ghost);
  CHECK(g110.h2_eis_torus == Weight{0, 2, 0});
  CHECK(g110.eis_equals_pgh);
  CHECK(g110.pgh2.str() == "(0|2|0)");

  const auto [no211, g211] = branch_analysis(reg(), {2, 1, 1});
  CHECK(no211.h2_eis_torus == Weight{0, 0, 4});
  CHECK(g211.h2_eis_torus == Weight{2, 0, 2});

  // The two branch labels are never Hecke-isomorphic (the labels cannot be
  // interchanged).
  CHECK_FALSE(levi::hecke_isomorphic(no110.h2_eis, g110.h2_eis));
  CHECK_FALSE(levi::hecke_isomorphic(no211.h2_eis, g211.h2_eis));

  // Duality link: ghost for (1,1,0) iff ghost for (2,1,1) -- both reports
  // carry the same dichotomy structure.
  CHECK(g110.eis_equals_pgh == g211.eis_equals_pgh);
}

TEST_CASE("chi cross-check: concluded cohomology matches the torsion formula") {
  for (const Weight& lam : {Weight{1, 1, 0}, Weight{2, 1, 1}}) {
    // Concluded: one class in degree 2 -> chi = +1.
    const GradedSum pgh = potentially_ghost(lam);
    long long chi = 0;
    for (const auto& [q, labels] : pgh.cells())
      chi += (q % 2 == 0 ? 1 : -1) * pgh.dim_at(q);
    CHECK(Rational(chi) == euler::euler_characteristic(3, lam));
  }
}

TEST_CASE("the transcript replays the full deduction") {
  const ghost::Transcript t = prove_ghost(reg());
  REQUIRE(t.steps.size() == 8);
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    CHECK(t.steps[i].id == static_cast<int>(i) + 1);
    CHECK_FALSE(t.steps[i].statement.empty());
    CHECK_FALSE(t.steps[i].rule.empty());
    CHECK_FALSE(t.steps[i].citation.empty());
  }
  CHECK(t.final_result == "H^3(GL_4(Z), det) = (0|2|0|2)");
  // Step inputs refer only to earlier steps or registry keys.
  for (const auto& s : t.steps)
    for (const auto& in : s.inputs) {
      if (in.rfind("step ", 0) == 0)
        CHECK(std::stoi(in.substr(5)) < s.id);
      else
        CHECK(in.rfind("registry:", 0) == 0);
    }
  CHECK(t.steps[4].statement.find("(0|2|0|2)") != std::string::npos);
  CHECK(t.steps[5].statement.find("(0|2|0)") != std::string::npos);
  CHECK(t.steps[5].statement.find("(2|0|2)") != std::string::npos);
}

TEST_CASE("transcripts are deterministic and idempotent") {
  const std::string a = prove_ghost(reg()).str();
  const std::string b = prove_ghost(reg()).str();
  CHECK(a == b);
  CHECK_FALSE(a.empty());
}

TEST_CASE("a corrupted registry aborts the transcript") {
  // Drop the degree-3 entry of the SL_4 fact: step 2 must fail.
  std::string text = FactsRegistry::builtin_text();
  const std::string needle = "nonzero_degrees = 0, 3";
  text.replace(text.find(needle), needle.size(), "nonzero_degrees = 0");
  const FactsRegistry bad = FactsRegistry::parse(text);
  CHECK_THROWS_AS(prove_ghost(bad), ghost::TranscriptError);
}
