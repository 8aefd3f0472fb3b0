#include "eiscomp/euler.hpp"

#include <algorithm>
#include <stdexcept>

#include "eiscomp/characters.hpp"

namespace eiscomp::euler {

TorsionBlock TorsionBlock::one() { return {Kind::One, 1, 1, {{1}}}; }
TorsionBlock TorsionBlock::minus_one() { return {Kind::MinusOne, 1, 2, {{-1}}}; }
TorsionBlock TorsionBlock::t3() { return {Kind::T3, 2, 3, {{0, 1}, {-1, -1}}}; }
TorsionBlock TorsionBlock::t4() { return {Kind::T4, 2, 4, {{0, 1}, {-1, 0}}}; }
TorsionBlock TorsionBlock::t6() { return {Kind::T6, 2, 6, {{0, -1}, {1, 1}}}; }

TorsionBlock TorsionBlock::companion(int cyclo_index) {
  const exact::IntPolynomial phi = exact::cyclotomic(cyclo_index);
  const int d = phi.degree();
  IMatrix m(d, std::vector<long long>(d, 0));
  for (int i = 1; i < d; ++i) m[i][i - 1] = 1;
  for (int i = 0; i < d; ++i) m[i][d - 1] = -phi.coeff(i);
  return {Kind::Companion, d, cyclo_index, std::move(m)};
}

int TorsionClass::n() const {
  int total = 0;
  for (const auto& b : blocks) total += b.size;
  return total;
}

IMatrix TorsionClass::matrix() const {
  std::vector<IMatrix> ms;
  for (const auto& b : blocks) ms.push_back(b.matrix);
  return block_diag(ms);
}

exact::FactoredCharPoly TorsionClass::charpoly() const {
  exact::FactoredCharPoly f;
  for (const auto& b : blocks) ++f.factors[b.cyclo_index];
  return f;
}

long long TorsionClass::det() const {
  long long d = 1;
  for (const auto& b : blocks) d *= mat_det(b.matrix);
  return d;
}

std::string TorsionClass::str() const { return charpoly().str(); }

std::vector<TorsionClass> enumerate_torsion(int n) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("torsion enumeration is tabulated for 1 <= n <= 4");
  std::vector<TorsionClass> out;
  // Multiplicities: ones, minus-ones in 0..2; each T-block in 0..1.
  for (int c1 = 0; c1 <= 2; ++c1)
    for (int c2 = 0; c2 <= 2; ++c2)
      for (int t3 = 0; t3 <= 1; ++t3)
        for (int t4 = 0; t4 <= 1; ++t4)
          for (int t6 = 0; t6 <= 1; ++t6) {
            if (c1 + c2 + 2 * (t3 + t4 + t6) != n) continue;
            TorsionClass cls;
            for (int i = 0; i < c1; ++i) cls.blocks.push_back(TorsionBlock::one());
            for (int i = 0; i < c2; ++i) cls.blocks.push_back(TorsionBlock::minus_one());
            if (t3) cls.blocks.push_back(TorsionBlock::t3());
            if (t4) cls.blocks.push_back(TorsionBlock::t4());
            if (t6) cls.blocks.push_back(TorsionBlock::t6());
            out.push_back(std::move(cls));
          }
  if (n == 4)
    for (int idx : {5, 8, 10, 12})
      out.push_back(TorsionClass{{TorsionBlock::companion(idx)}});
  // Canonical order: descending lexicographic exponent vectors over
  // Phi_1, Phi_2, Phi_3, Phi_4, Phi_6, then the companion indices.
  auto key = [](const TorsionClass& t) {
    static const int order[] = {1, 2, 3, 4, 6, 5, 8, 10, 12};
    const auto f = t.charpoly().factors;
    std::vector<int> k;
    for (int idx : order) {
      auto it = f.find(idx);
      k.push_back(it == f.end() ? 0 : it->second);
    }
    return k;
  };
  std::sort(out.begin(), out.end(),
            [&key](const TorsionClass& a, const TorsionClass& b) { return key(a) > key(b); });
  return out;
}

CentralizerDescriptor centralizer_chi(const TorsionClass& t) {
  const exact::FactoredCharPoly f = t.charpoly();

  // Vanishing rules first.
  for (const auto& [idx, mult] : f.factors) {
    if ((idx == 1 || idx == 2) && mult >= 3)
      return {"GL_" + std::to_string(mult) + "(Z) factor", Rational(0),
              "centralizer commensurable to GL_" + std::to_string(mult) +
                  "(Z), whose orbifold Euler characteristic is 0"};
    if ((idx == 3 || idx == 4 || idx == 6) && mult >= 2)
      return {"GL_2(Z[zeta_" + std::to_string(idx) + "])", Rational(0),
              "centralizer commensurable to GL_2 over a cyclotomic ring; chi = 0"};
    if (idx == 5 || idx == 8 || idx == 10 || idx == 12)
      return {"units of Z[zeta_" + std::to_string(idx) + "]", Rational(0),
              "unit group has a free Z factor (Dirichlet), so chi = 0"};
  }

  // Otherwise multiply per-factor unit-group values.
  std::string kind;
  Rational chi(1);
  auto append = [&kind](const std::string& s) {
    if (!kind.empty()) kind += " x ";
    kind += s;
  };
  for (const auto& [idx, mult] : f.factors) {
    if (idx == 1 || idx == 2) {
      if (mult == 2) {
        append("GL_2(Z)");
        chi *= Rational(-1, 24);
      } else {
        append("C_2");
        chi *= Rational(1, 2);
      }
    } else if (idx == 3 || idx == 6) {
      append("C_6");
      chi *= Rational(1, 6);
    } else if (idx == 4) {
      append("C_4");
      chi *= Rational(1, 4);
    }
  }
  return {kind, chi, "product of per-factor unit groups"};
}

Rational euler_characteristic(int n, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != n)
    throw std::invalid_argument("euler_characteristic: weight size mismatch");
  Rational total(0);
  for (const TorsionClass& cls : enumerate_torsion(n)) {
    const CentralizerDescriptor cent = centralizer_chi(cls);
    if (cent.chi.is_zero()) continue;
    const long long res = exact::res_of_factored(cls.charpoly());
    total += Rational(res) * cent.chi * exact::schur_value(lambda, cls.matrix());
  }
  return total;
}

Table1 table1() {
  Table1 t;
  t.total_trivial = Rational(0);
  t.total_det = Rational(0);
  for (const TorsionClass& cls : enumerate_torsion(4)) {
    CentralizerDescriptor cent = centralizer_chi(cls);
    if (cent.chi.is_zero()) {
      t.zero_rows.emplace_back(cls, std::move(cent));
      continue;
    }
    const long long res = exact::res_of_factored(cls.charpoly());
    const Rational product = Rational(res) * cent.chi;
    t.total_trivial += product;
    t.total_det += Rational(cls.det()) * product;
    t.rows.push_back(Table1Row{cls, std::move(cent), cls.det(), res, product});
  }
  return t;
}

namespace {

std::string pad(std::string s, std::size_t w) {
  while (s.size() < w) s += ' ';
  return s;
}

long long lcm_ll(long long a, long long b) {
  long long g = a, y = b;
  while (y) {
    long long r = g % y;
    g = y;
    y = r;
  }
  return a / g * b;
}

}  // namespace

std::string render_table1(const Table1& t) {
  long long common = 1;
  for (const auto& row : t.rows) common = lcm_ll(common, row.cent.chi.den());
  std::vector<std::vector<std::string>> grid;
  grid.push_back({"polynomial", "centralizer C(A)", "det", "chi(C(A))", "R(f)",
                  "chi(C(A))R(f)", "over " + std::to_string(common)});
  for (const auto& row : t.rows) {
    const long long scaled = row.product.num() * (common / row.product.den());
    grid.push_back({row.cls.str(), row.cent.kind, std::to_string(row.det),
                    row.cent.chi.str(), std::to_string(row.res), row.product.str(),
                    std::to_string(scaled) + "/" + std::to_string(common)});
  }
  std::vector<std::size_t> widths(grid[0].size(), 0);
  for (const auto& row : grid)
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  std::string out;
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += pad(row[i], widths[i]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  out += "\nzero-contribution classes:\n";
  for (const auto& [cls, cent] : t.zero_rows)
    out += "  " + cls.str() + ": " + cent.rationale + "\n";
  auto both = [common](const Rational& r) {
    const long long scaled = r.num() * (common / r.den());
    return r.str() + " = " + std::to_string(scaled) + "/" + std::to_string(common);
  };
  out += "\nchi_h(GL_4(Z), Q)   = " + both(t.total_trivial) + "\n";
  out += "chi_h(GL_4(Z), det) = " + both(t.total_det) + "\n";
  out += "chi_h(SL_4(Z), Q)   = " + both(t.total_trivial + t.total_det) + "\n";
  return out;
}

}  // namespace eiscomp::euler
