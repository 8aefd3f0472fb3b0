#include "eiscomp/labels.hpp"

#include <stdexcept>

namespace eiscomp::levi {

namespace {

std::string join_ints(const Weight& w, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(w[i]);
  }
  return out;
}

bool constant_weight(const Weight& w) {
  for (int x : w)
    if (x != w[0]) return false;
  return true;
}

}  // namespace

std::string Segment::str() const {
  switch (kind) {
    case Kind::GL1:
      return std::to_string(weight[0]);
    case Kind::GL2H0:
      return std::to_string(weight[0]) + "|" + std::to_string(weight[1]);
    case Kind::GL2Eisenstein:
      return join_ints(weight, ",");
    case Kind::GL2Interior:
      return "~" + join_ints(weight, ",");
    case Kind::GL3:
      if (constant_weight(weight)) return join_ints(weight, "|");
      return join_ints(weight, ",");
  }
  return "?";
}

int ModuleLabel::dim() const {
  int d = 1;
  for (const auto& s : segments) d *= s.dim;
  return d;
}

std::string ModuleLabel::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i) out += "|";
    out += segments[i].str();
  }
  return out + ")";
}

bool ModuleLabel::operator==(const ModuleLabel& o) const {
  if (segments.size() != o.segments.size()) return false;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment& a = segments[i];
    const Segment& b = o.segments[i];
    if (a.kind != b.kind || a.weight != b.weight || a.dim != b.dim) return false;
  }
  return true;
}

std::optional<Weight> torus_restriction(const ModuleLabel& l) {
  Weight out;
  for (const auto& s : l.segments) {
    switch (s.kind) {
      case Segment::Kind::GL1:
        out.push_back(s.weight[0]);
        break;
      case Segment::Kind::GL2H0:
        out.push_back(s.weight[0]);
        out.push_back(s.weight[1]);
        break;
      case Segment::Kind::GL2Eisenstein:
        // (a,b) restricts to (b-1 | a+1).
        out.push_back(s.weight[1] - 1);
        out.push_back(s.weight[0] + 1);
        break;
      case Segment::Kind::GL2Interior:
        return std::nullopt;
      case Segment::Kind::GL3:
        if (!s.torus) return std::nullopt;
        out.insert(out.end(), s.torus->begin(), s.torus->end());
        break;
    }
  }
  return out;
}

bool hecke_isomorphic(const ModuleLabel& a, const ModuleLabel& b) {
  if (a.dim() != 1 || b.dim() != 1)
    throw std::invalid_argument("hecke_isomorphic requires one-dimensional labels");
  const auto ta = torus_restriction(a);
  const auto tb = torus_restriction(b);
  return ta && tb && *ta == *tb;
}

void GradedSum::add(int degree, ModuleLabel label) {
  if (label.dim() == 0) return;
  by_degree_[degree].push_back(std::move(label));
}

std::vector<int> GradedSum::degrees() const {
  std::vector<int> out;
  for (const auto& [q, v] : by_degree_) out.push_back(q);
  return out;
}

const std::vector<ModuleLabel>& GradedSum::at(int degree) const {
  static const std::vector<ModuleLabel> empty;
  auto it = by_degree_.find(degree);
  return it == by_degree_.end() ? empty : it->second;
}

int GradedSum::total_dim() const {
  int d = 0;
  for (const auto& [q, v] : by_degree_)
    for (const auto& l : v) d += l.dim();
  return d;
}

int GradedSum::dim_at(int degree) const {
  int d = 0;
  for (const auto& l : at(degree)) d += l.dim();
  return d;
}

long long GradedSum::euler_characteristic() const {
  long long chi = 0;
  for (const auto& [q, v] : by_degree_)
    for (const auto& l : v) chi += (q % 2 == 0 ? 1 : -1) * l.dim();
  return chi;
}

GradedSum kunneth(const std::vector<GradedSum>& parts) {
  GradedSum acc;
  acc.add(0, ModuleLabel{});
  for (const auto& part : parts) {
    GradedSum next;
    for (const auto& [qa, la] : acc.cells())
      for (const auto& a : la)
        for (const auto& [qb, lb] : part.cells())
          for (const auto& b : lb) {
            ModuleLabel combined = a;
            combined.segments.insert(combined.segments.end(), b.segments.begin(),
                                     b.segments.end());
            next.add(qa + qb, std::move(combined));
          }
    acc = std::move(next);
    if (acc.empty()) return acc;  // zero factor annihilates
  }
  return acc;
}

}  // namespace eiscomp::levi
