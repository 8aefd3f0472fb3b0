#include "eiscomp/faces.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace eiscomp::faces {

int FaceCohomology::dim_at(int q) const {
  auto it = by_degree.find(q);
  if (it == by_degree.end()) return 0;
  int d = 0;
  for (const auto& c : it->second) d += c.label.dim();
  return d;
}

long long FaceCohomology::euler_characteristic() const {
  long long chi = 0;
  for (const auto& [q, classes] : by_degree)
    for (const auto& c : classes) chi += (q % 2 == 0 ? 1 : -1) * c.label.dim();
  return chi;
}

const std::vector<Composition>& standard_faces(int n) {
  static const std::vector<Composition> gl3 = {
      Composition({2, 1}), Composition({1, 2}), Composition({1, 1, 1})};
  static const std::vector<Composition> gl4 = {
      Composition({3, 1}),    Composition({2, 2}),    Composition({1, 3}),
      Composition({2, 1, 1}), Composition({1, 2, 1}), Composition({1, 1, 2}),
      Composition({1, 1, 1, 1})};
  if (n == 3) return gl3;
  if (n == 4) return gl4;
  throw std::invalid_argument("standard faces are defined for n in {3, 4}");
}

std::string face_name(const Composition& c) {
  const int n = c.n();
  if (c.num_parts() == 1) return "G";
  if (n == 3) {
    if (c == Composition({2, 1})) return "Q_12";
    if (c == Composition({1, 2})) return "Q_23";
    if (c == Composition({1, 1, 1})) return "Q_0";
  }
  if (n == 4) {
    if (c == Composition({3, 1})) return "P_13";
    if (c == Composition({2, 2})) return "P_12,34";
    if (c == Composition({1, 3})) return "P_24";
    if (c == Composition({2, 1, 1})) return "P_12";
    if (c == Composition({1, 2, 1})) return "P_23";
    if (c == Composition({1, 1, 2})) return "P_34";
    if (c == Composition({1, 1, 1, 1})) return "B";
  }
  return "(" + c.str() + ")";
}

Composition parse_face(const std::string& text, int n) {
  auto normalize = [](const std::string& s) {
    std::string out;
    for (char ch : s)
      if (ch != '_' && ch != ',')
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return out;
  };
  const std::string key = normalize(text);
  for (const Composition& c : standard_faces(n))
    if (key == normalize(face_name(c))) return c;
  // Fall back to explicit parts "2,1,1".
  std::vector<int> parts;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ','))
    try {
      parts.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument("unknown face '" + text + "'");
    }
  if (parts.empty()) throw std::invalid_argument("unknown face '" + text + "'");
  Composition c(parts);
  if (c.n() != n) throw std::invalid_argument("face '" + text + "' does not fit GL_" + std::to_string(n));
  return c;
}

FaceCohomology face_cohomology(const FactsRegistry& reg, int n, const Weight& lambda,
                               const Composition& face, Branch branch) {
  if (static_cast<int>(lambda.size()) != n || face.n() != n)
    throw std::invalid_argument("face_cohomology: size mismatch");
  FaceCohomology out{face, {}};
  for (const auto& datum : weyl::kostant_reps(face, lambda)) {
    std::vector<levi::GradedSum> parts;
    parts.reserve(datum.levi_weight.size());
    for (const Weight& mu : datum.levi_weight)
      parts.push_back(levi::block_cohomology(reg, mu, branch));
    const levi::GradedSum product = levi::kunneth(parts);
    for (const auto& [j, labels] : product.cells())
      for (const ModuleLabel& label : labels) {
        bool zero_on_faces = false;
        for (const auto& seg : label.segments)
          if (seg.face_restriction_zero) zero_on_faces = true;
        out.by_degree[datum.length + j].push_back(FaceClass{
            face, datum.w, j, datum.length + j, label, zero_on_faces});
      }
  }
  return out;
}

FacesTable all_faces_table(const FactsRegistry& reg, int n, const Weight& lambda,
                           Branch branch) {
  FacesTable t{n, lambda, branch, standard_faces(n), {}};
  for (const WeylWord& w : WeylWord::all(n))
    t.rows.push_back(FacesTableRow{w, w.length(), weyl::dot_action(w, lambda), {}});
  for (std::size_t f = 0; f < t.faces.size(); ++f) {
    const FaceCohomology coh = face_cohomology(reg, n, lambda, t.faces[f], branch);
    for (const auto& [q, classes] : coh.by_degree)
      for (const FaceClass& c : classes)
        for (auto& row : t.rows)
          if (row.w == c.origin) row.entries[static_cast<int>(f)].push_back(c);
  }
  return t;
}

namespace {

std::string cell_str(const std::vector<FaceClass>& classes) {
  if (classes.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) out += "+";
    out += classes[i].label.str();
  }
  return out;
}

std::string pad(std::string s, std::size_t w) {
  while (s.size() < w) s += ' ';
  return s;
}

}  // namespace

std::string render_table(const FacesTable& t) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head = {"w", "l", "w.lambda"};
  for (const auto& f : t.faces) head.push_back(face_name(f));
  grid.push_back(head);
  for (const auto& row : t.rows) {
    std::vector<std::string> cells = {row.w.str(), std::to_string(row.length),
                                      weight_str(row.dot_weight)};
    for (std::size_t f = 0; f < t.faces.size(); ++f) {
      auto it = row.entries.find(static_cast<int>(f));
      cells.push_back(it == row.entries.end() ? "-" : cell_str(it->second));
    }
    grid.push_back(std::move(cells));
  }
  std::vector<std::size_t> widths(head.size(), 0);
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
  return out;
}

std::string render_face_displays(const FactsRegistry& reg, int n, const Weight& lambda,
                                 Branch branch) {
  std::string out;
  for (const Composition& face : standard_faces(n)) {
    const FaceCohomology coh = face_cohomology(reg, n, lambda, face, branch);
    out += "H^q(" + face_name(face) + ", V_" + weight_str(lambda) + "):\n";
    if (coh.by_degree.empty()) out += "  0\n";
    for (const auto& [q, classes] : coh.by_degree) {
      std::string labels;
      for (std::size_t i = 0; i < classes.size(); ++i) {
        if (i) labels += " + ";
        labels += classes[i].label.str();
        if (classes[i].label.dim() > 1)
          labels += " (dim " + std::to_string(classes[i].label.dim()) + ")";
      }
      out += "  q=" + std::to_string(q) + ": " + labels + "\n";
    }
  }
  return out;
}

}  // namespace eiscomp::faces
