#include "eiscomp/levi.hpp"

#include <stdexcept>

#include "eiscomp/characters.hpp"

namespace eiscomp::levi {

GradedSum gl1_cohomology(int a) {
  GradedSum out;
  if (a % 2 == 0)
    out.add(0, ModuleLabel{{Segment{Segment::Kind::GL1, {a}, 1, Weight{a}, false}}});
  return out;
}

GradedSum gl2_cohomology(int a, int b) {
  if (a < b) throw std::invalid_argument("gl2_cohomology requires a >= b");
  GradedSum out;
  if ((a + b) % 2 != 0) return out;  // -I acts by -1
  if (a == b) {
    if (a % 2 == 0)
      out.add(0, ModuleLabel{{Segment{Segment::Kind::GL2H0, {a, b}, 1, Weight{a, b}, false}}});
    return out;
  }
  const int s = exact::cusp_dim(a - b + 2);
  if (s > 0)
    out.add(1, ModuleLabel{{Segment{Segment::Kind::GL2Interior, {a, b}, s, std::nullopt, false}}});
  if (a % 2 != 0)  // a, b both odd: one-dimensional Eisenstein class
    out.add(1, ModuleLabel{{Segment{Segment::Kind::GL2Eisenstein, {a, b}, 1,
                                    Weight{b - 1, a + 1}, false}}});
  return out;
}

BranchLabel gl3_branch_label(const Weight& mu, Branch branch) {
  if (branch == Branch::Undetermined)
    throw std::invalid_argument("ghost branch must be set for GL_3 weight " + weight_str(mu));
  if (mu == Weight{1, 1, 0})
    return branch == Branch::Ghost ? BranchLabel{{0, 2, 0}, true}
                                   : BranchLabel{{-2, 2, 2}, false};
  if (mu == Weight{2, 1, 1})
    return branch == Branch::Ghost ? BranchLabel{{2, 0, 2}, true}
                                   : BranchLabel{{0, 0, 4}, false};
  throw RegistryMiss("no branch label for GL_3 weight " + weight_str(mu));
}

GradedSum registry_cohomology(const FactsRegistry& reg, const Weight& mu, Branch branch) {
  if (mu.size() != 3 || !is_dominant(mu))
    throw std::invalid_argument("registry_cohomology expects a dominant GL_3 weight");
  GradedSum out;
  if (weight_sum(mu) % 2 != 0) return out;  // -I acts by -1

  // Constant weights: det^c with c even is the trivial GL_3(Z)-module.
  if (mu[0] == mu[1] && mu[1] == mu[2]) {
    if (!reg.gl3_rational_vanishes_above_zero())
      throw RegistryMiss("registry lacks the GL_3 rational-coefficients fact");
    out.add(0, ModuleLabel{{Segment{Segment::Kind::GL3, mu, 1, mu, false}}});
    return out;
  }

  // Even det twists of the two branch-dependent weights.
  for (const Weight& base : {Weight{1, 1, 0}, Weight{2, 1, 1}}) {
    const int c = mu[0] - base[0];
    Weight shifted(base);
    for (int& x : shifted) x += c;
    if (shifted != mu) continue;
    // Parity already forces c even here.
    const int dim = reg.gl3_eis_dim(base, 2);
    BranchLabel bl = gl3_branch_label(base, branch);
    for (int& x : bl.torus) x += c;
    out.add(2, ModuleLabel{{Segment{Segment::Kind::GL3, mu, dim, bl.torus,
                                    bl.face_restriction_zero}}});
    return out;
  }
  throw RegistryMiss("unsupported GL_3 weight " + weight_str(mu));
}

GradedSum block_cohomology(const FactsRegistry& reg, const Weight& mu, Branch branch) {
  switch (mu.size()) {
    case 1:
      return gl1_cohomology(mu[0]);
    case 2:
      return gl2_cohomology(mu[0], mu[1]);
    case 3:
      return registry_cohomology(reg, mu, branch);
    default:
      throw std::invalid_argument("no base case for blocks of size " +
                                  std::to_string(mu.size()));
  }
}

}  // namespace eiscomp::levi
