#include "eiscomp/spectral.hpp"

#include <algorithm>
#include <stdexcept>

namespace eiscomp::spectral {

using levi::Segment;

ModuleLabel torus_label(const Weight& tuple) {
  ModuleLabel l;
  for (int a : tuple)
    l.segments.push_back(Segment{Segment::Kind::GL1, {a}, 1, Weight{a}, false});
  return l;
}

const std::vector<FaceClass>& E1Page::at(int p, int q) const {
  static const std::vector<FaceClass> empty;
  auto pit = cells.find(p);
  if (pit == cells.end()) return empty;
  auto qit = pit->second.find(q);
  return qit == pit->second.end() ? empty : qit->second;
}

int E1Page::dim_at(int p, int q) const {
  int d = 0;
  for (const auto& c : at(p, q)) d += c.label.dim();
  return d;
}

E1Page build_e1(const FactsRegistry& reg, int n, const Weight& lambda, Branch branch) {
  if (n != 3 && n != 4) throw std::invalid_argument("boundary pages exist for n in {3, 4}");
  E1Page page{n, lambda, branch, n - 1, {}};
  for (const Composition& face : faces::standard_faces(n)) {
    const int p = face.num_parts() - 2;
    const auto coh = faces::face_cohomology(reg, n, lambda, face, branch);
    for (const auto& [q, classes] : coh.by_degree) {
      auto& cell = page.cells[p][q];
      cell.insert(cell.end(), classes.begin(), classes.end());
    }
  }
  return page;
}

std::vector<int> IsotypeComplex::column_dims() const {
  std::vector<int> out;
  for (const auto& col : columns) {
    int d = 0;
    for (const auto& c : col) d += c.label.dim();
    out.push_back(d);
  }
  return out;
}

std::vector<int> IsotypeComplex::d1_ranks() const {
  std::vector<int> out;
  for (const auto& m : d1) out.push_back(rank(m));
  return out;
}

std::vector<int> IsotypeComplex::homology_dims() const {
  const std::vector<int> dims = column_dims();
  const std::vector<int> ranks = d1_ranks();
  std::vector<int> out(dims.size());
  for (std::size_t p = 0; p < dims.size(); ++p) {
    int h = dims[p];
    if (p < ranks.size()) h -= ranks[p];
    if (p > 0) h -= ranks[p - 1];
    out[p] = h;
  }
  return out;
}

namespace {

Rational cech_sign(const Composition& coarse, const Composition& fine) {
  const std::vector<int> a = coarse.cuts(), b = fine.cuts();
  // fine has exactly one extra cut; sign counts coarse cuts below it.
  int extra = -1;
  for (int cut : b)
    if (std::find(a.begin(), a.end(), cut) == a.end()) {
      extra = cut;
      break;
    }
  int below = 0;
  for (int cut : a)
    if (cut < extra) ++below;
  return below % 2 == 0 ? Rational(1) : Rational(-1);
}

}  // namespace

std::vector<IsotypeComplex> d1_isotypes(const E1Page& page, const D1Options& opts) {
  // Collect classes per (q, torus) bucket; cuspidal classes become singletons.
  std::map<std::pair<int, Weight>, IsotypeComplex> buckets;
  std::vector<IsotypeComplex> singletons;
  for (const auto& [p, by_q] : page.cells)
    for (const auto& [q, classes] : by_q)
      for (const FaceClass& c : classes) {
        const auto torus = levi::torus_restriction(c.label);
        if (!torus) {
          IsotypeComplex solo{std::nullopt, q, {}, {}};
          solo.columns.resize(page.num_columns);
          solo.columns[p].push_back(c);
          solo.d1.resize(page.num_columns - 1);
          for (int k = 0; k + 1 < page.num_columns; ++k)
            solo.d1[k] = QMatrix(solo.columns[k + 1].size(),
                                 std::vector<Rational>(solo.columns[k].size(), Rational(0)));
          singletons.push_back(std::move(solo));
          continue;
        }
        auto& bucket = buckets[{q, *torus}];
        if (bucket.columns.empty()) {
          bucket.torus = torus;
          bucket.q = q;
          bucket.columns.resize(page.num_columns);
        }
        bucket.columns[p].push_back(c);
      }

  const auto coefficient = opts.coefficient ? opts.coefficient : cech_sign;
  std::vector<IsotypeComplex> out;
  for (auto& [key, complex] : buckets) {
    complex.d1.resize(page.num_columns - 1);
    for (int p = 0; p + 1 < page.num_columns; ++p) {
      const auto& src = complex.columns[p];
      const auto& dst = complex.columns[p + 1];
      QMatrix m(dst.size(), std::vector<Rational>(src.size(), Rational(0)));
      for (std::size_t j = 0; j < src.size(); ++j) {
        if (src[j].face_restriction_zero) continue;
        for (std::size_t i = 0; i < dst.size(); ++i)
          if (weyl::face_incidence(src[j].face, dst[i].face))
            m[i][j] = coefficient(src[j].face, dst[i].face);
      }
      complex.d1[p] = std::move(m);
    }
    out.push_back(std::move(complex));
  }
  out.insert(out.end(), singletons.begin(), singletons.end());
  return out;
}

int E2Page::dim_at(int p, int q) const {
  auto it = cells.find({p, q});
  if (it == cells.end()) return 0;
  int d = 0;
  for (const auto& e : it->second) d += e.dim;
  return d;
}

E2Page e2(const E1Page& page, const D1Options& opts) {
  E2Page out{page.n, page.lambda, page.branch, page.num_columns, {}};
  for (const IsotypeComplex& complex : d1_isotypes(page, opts)) {
    const std::vector<int> h = complex.homology_dims();
    for (std::size_t p = 0; p < h.size(); ++p) {
      if (h[p] == 0) continue;
      const ModuleLabel display = complex.torus ? torus_label(*complex.torus)
                                                : complex.columns[p].front().label;
      out.cells[{static_cast<int>(p), complex.q}].push_back(
          E2Entry{complex.torus, display, h[p]});
    }
  }
  return out;
}

std::vector<D2Arrow> d2_feasible(const E2Page& page) {
  std::vector<D2Arrow> out;
  for (const auto& [pq, entries] : page.cells) {
    const auto [p, q] = pq;
    if (p + 2 >= page.num_columns) continue;
    auto target = page.cells.find({p + 2, q - 1});
    // Split by isotype: an arrow component exists per torus tuple present on
    // either side; it is feasible iff present on both.
    std::map<Weight, std::pair<int, int>> by_torus;
    for (const auto& e : entries)
      if (e.torus) by_torus[*e.torus].first += e.dim;
    if (target != page.cells.end())
      for (const auto& e : target->second)
        if (e.torus) by_torus[*e.torus].second += e.dim;
    for (const auto& [torus, dims] : by_torus)
      out.push_back(D2Arrow{p, q, torus, dims.first, dims.second,
                            dims.first > 0 && dims.second > 0, 0, ""});
  }
  return out;
}

namespace {

struct ForcedKill {
  // dims removed from cell (p,q) per torus tuple
  std::map<std::pair<int, int>, std::map<Weight, int>> removed;

  int removed_at(int p, int q, const std::optional<Weight>& torus) const {
    if (!torus) return 0;
    auto it = removed.find({p, q});
    if (it == removed.end()) return 0;
    auto jt = it->second.find(*torus);
    return jt == it->second.end() ? 0 : jt->second;
  }
};

}  // namespace

BoundaryResult boundary_cohomology(const FactsRegistry& reg, int n, const Weight& lambda,
                                   Branch branch, const std::vector<Constraint>& constraints) {
  BoundaryResult result;
  result.e1_page = build_e1(reg, n, lambda, branch);
  const E1Page& page = result.e1_page;
  result.e2_page = e2(page);
  result.arrows = d2_feasible(result.e2_page);

  ForcedKill kills;
  auto arrow_for = [&result](int q, const Weight& torus) -> D2Arrow* {
    for (auto& a : result.arrows)
      if (a.q == q && a.torus && *a.torus == torus) return &a;
    return nullptr;
  };

  // Constraints fix d_2 ranks; infeasible demands surface as contradictions.
  for (const Constraint& con : constraints) {
    if (result.contradiction) break;
    const int k = con.total_degree;
    // Middle column: no d_2 in or out of p=1 on a three-column page.
    if (result.e2_page.num_columns == 3) {
      auto mid = result.e2_page.cells.find({1, k - 1});
      if (mid != result.e2_page.cells.end() && con.dim == 0 &&
          result.e2_page.dim_at(1, k - 1) > 0) {
        const auto& e = mid->second.front();
        result.contradiction = ContradictionReport{
            e.display, e.torus, k, con,
            "E_2^{1," + std::to_string(k - 1) + "} survives to E_3 untouched by d_2"};
        break;
      }
      // Entries at (2, k-2) must be killed by d_2 from (0, k-1).
      auto bottom = result.e2_page.cells.find({2, k - 2});
      if (bottom != result.e2_page.cells.end() && con.dim == 0) {
        for (const auto& e : bottom->second) {
          const int need = e.dim - kills.removed_at(2, k - 2, e.torus);
          if (need <= 0) continue;
          D2Arrow* arrow = e.torus ? arrow_for(k - 1, *e.torus) : nullptr;
          const int available =
              arrow && arrow->feasible
                  ? arrow->source_dim - kills.removed_at(0, k - 1, e.torus)
                  : 0;
          if (available < need) {
            result.contradiction = ContradictionReport{
                e.display, e.torus, k, con,
                "class in E_2^{2," + std::to_string(k - 2) +
                    "} has no Hecke-isomorphic d_2 source of sufficient dimension"};
            break;
          }
          arrow->forcing_citation = con.citation;
          kills.removed[{2, k - 2}][*e.torus] += need;
          kills.removed[{0, k - 1}][*e.torus] += need;
        }
        if (result.contradiction) break;
      }
      // Entries at (0, k) must die into (2, k-1).
      auto top = result.e2_page.cells.find({0, k});
      if (top != result.e2_page.cells.end() && con.dim == 0) {
        for (const auto& e : top->second) {
          const int need = e.dim - kills.removed_at(0, k, e.torus);
          if (need <= 0) continue;
          D2Arrow* arrow = e.torus ? arrow_for(k, *e.torus) : nullptr;
          const int available =
              arrow && arrow->feasible
                  ? arrow->target_dim - kills.removed_at(2, k - 1, e.torus)
                  : 0;
          if (available < need) {
            result.contradiction = ContradictionReport{
                e.display, e.torus, k, con,
                "class in E_2^{0," + std::to_string(k) +
                    "} has no Hecke-isomorphic d_2 target of sufficient dimension"};
            break;
          }
          arrow->forcing_citation = con.citation;
          kills.removed[{0, k}][*e.torus] += need;
          kills.removed[{2, k - 1}][*e.torus] += need;
        }
        if (result.contradiction) break;
      }
    } else if (con.dim == 0) {
      // Two-column page: E_2 = E_infinity, a constraint is a plain check.
      for (int p = 0; p < 2; ++p) {
        auto it = result.e2_page.cells.find({p, k - p});
        if (it != result.e2_page.cells.end() && !it->second.empty()) {
          const auto& e = it->second.front();
          result.contradiction =
              ContradictionReport{e.display, e.torus, k, con,
                                  "two-column page degenerates at E_2; class survives"};
          break;
        }
      }
      if (result.contradiction) break;
    }
  }

  // The rank of each arrow is exactly what the constraints removed from its
  // source cell.
  for (auto& a : result.arrows)
    if (a.torus) a.forced_rank = kills.removed_at(0, a.q, a.torus);

  // E_3 = E_2 minus the forced kills.
  result.e3_page = E2Page{result.e2_page.n, result.e2_page.lambda,
                          result.e2_page.branch, result.e2_page.num_columns, {}};
  for (const auto& [pq, entries] : result.e2_page.cells) {
    std::map<Weight, int> to_remove;
    auto kit = kills.removed.find(pq);
    if (kit != kills.removed.end()) to_remove = kit->second;
    for (const auto& e : entries) {
      int dim = e.dim;
      if (e.torus) {
        auto rit = to_remove.find(*e.torus);
        if (rit != to_remove.end()) {
          const int take = std::min(dim, rit->second);
          dim -= take;
          rit->second -= take;
        }
      }
      if (dim > 0) result.e3_page.cells[pq].push_back(E2Entry{e.torus, e.display, dim});
    }
  }

  // Assemble total degrees, sub (high p) before quotient (low p).
  std::map<int, std::vector<BoundaryEntry>> boundary;
  for (const auto& [pq, entries] : result.e3_page.cells)
    for (const auto& e : entries)
      boundary[pq.first + pq.second].push_back(
          BoundaryEntry{pq.first, pq.second, e.torus, e.display, e.dim});
  for (auto& [k, entries] : boundary)
    std::stable_sort(entries.begin(), entries.end(),
                     [](const BoundaryEntry& a, const BoundaryEntry& b) { return a.p > b.p; });
  result.boundary = std::move(boundary);

  if (n == 4) {
    result.notes.push_back(
        "E_1^{0,3} carries one class per Kostant summand of each maximal face "
        "(six classes for det); tallies here count all of them.");
    result.notes.push_back(
        "the Borel class of internal degree 6 appears in the boundary at total "
        "degree 8 = 2 + 6.");
  }
  return result;
}

namespace {

std::string entry_str(const E2Entry& e) {
  std::string out = e.display.str();
  if (e.dim > 1) out += "^" + std::to_string(e.dim);
  return out;
}

}  // namespace

std::string render_boundary(const BoundaryResult& r) {
  std::string out;
  auto page_block = [&out](const char* name, const E2Page& page) {
    out += std::string(name) + ":\n";
    if (page.cells.empty()) out += "  0\n";
    for (const auto& [pq, entries] : page.cells) {
      out += "  (p=" + std::to_string(pq.first) + ", q=" + std::to_string(pq.second) + "): ";
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += " + ";
        out += entry_str(entries[i]);
      }
      out += "\n";
    }
  };
  out += "E_1:\n";
  for (const auto& [p, by_q] : r.e1_page.cells)
    for (const auto& [q, classes] : by_q) {
      if (classes.empty()) continue;
      out += "  (p=" + std::to_string(p) + ", q=" + std::to_string(q) + "): ";
      for (std::size_t i = 0; i < classes.size(); ++i) {
        if (i) out += " + ";
        out += classes[i].label.str();
        if (classes[i].label.dim() > 1)
          out += "^" + std::to_string(classes[i].label.dim());
      }
      out += "\n";
    }
  page_block("E_2", r.e2_page);
  out += "d_2 arrows (p,q) -> (p+2,q-1):\n";
  bool any = false;
  for (const auto& a : r.arrows) {
    if (!a.torus) continue;
    any = true;
    out += "  q=" + std::to_string(a.q) + " isotype " + torus_label(*a.torus).str() +
           ": source dim " + std::to_string(a.source_dim) + ", target dim " +
           std::to_string(a.target_dim) + ", " + (a.feasible ? "feasible" : "infeasible");
    if (a.forced_rank > 0)
      out += ", rank " + std::to_string(a.forced_rank) + " forced by [" +
             a.forcing_citation + "]";
    else if (a.feasible)
      out += ", rank not forced by any constraint";
    out += "\n";
  }
  if (!any) out += "  none\n";
  page_block("E_3 = E_infinity", r.e3_page);
  if (r.contradiction) {
    const auto& c = *r.contradiction;
    out += "CONTRADICTION: class " + c.survivor.str() + " survives at total degree " +
           std::to_string(c.total_degree) + " against the constraint H^" +
           std::to_string(c.violated.total_degree) + "_boundary = " +
           std::to_string(c.violated.dim) + " [" + c.violated.citation + "]\n";
    out += "  " + c.detail + "\n";
  } else {
    out += "H^q_boundary:\n";
    if (r.boundary.empty()) out += "  0\n";
    for (const auto& [k, entries] : r.boundary) {
      out += "  q=" + std::to_string(k) + ": ";
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += " + ";
        out += entry_str(E2Entry{entries[i].torus, entries[i].display, entries[i].dim});
      }
      if (entries.size() > 1) {
        out += "   (extension order: sub";
        for (std::size_t i = 1; i < entries.size(); ++i) out += " -> quotient";
        out += ", columns p=";
        for (std::size_t i = 0; i < entries.size(); ++i) {
          if (i) out += ",";
          out += std::to_string(entries[i].p);
        }
        out += ")";
      }
      out += "\n";
    }
  }
  for (const auto& note : r.notes) out += "note: " + note + "\n";
  return out;
}

}  // namespace eiscomp::spectral
