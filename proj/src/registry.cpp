#include "eiscomp/registry.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace eiscomp::levi {

std::string branch_str(Branch b) {
  switch (b) {
    case Branch::Ghost: return "ghost";
    case Branch::NoGhost: return "no-ghost";
    case Branch::Undetermined: return "undetermined";
  }
  return "?";
}

const std::string& FactEntry::field(const std::string& name) const {
  auto it = fields.find(name);
  if (it == fields.end())
    throw RegistryMiss("registry entry '" + key + "' lacks field '" + name + "'");
  return it->second;
}

std::vector<int> FactEntry::int_list_field(const std::string& name) const {
  std::vector<int> out;
  std::istringstream in(field(name));
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

int FactEntry::int_field(const std::string& name) const {
  return std::stoi(field(name));
}

std::string FactsRegistry::builtin_text() {
  return R"(# eiscomp facts registry
# External inputs assumed by the engine; every entry carries its citation.
format = eiscomp-registry-1

# Default branch for the ghost-class dichotomy in H^2(GL_3(Z), V_{1,1,0})
# and its dual. "undetermined" makes commands that depend on the branch ask
# for an explicit choice; the ghost-prove pipeline derives the answer.
ghost_branch = undetermined

[fact sl4_rational]
statement = H^i(SL_4(Z), Q) = Q for i in {0, 3} and vanishes otherwise
nonzero_degrees = 0, 3
citation = Elbaz-Vincent, Gangl, Soule - Perfect forms, K-theory and the cohomology of modular groups

[fact gl3_eis_dim_110]
statement = dim H^2_Eis(GL_3(Z), V_{1,1,0}) = 1, and H^q_Eis vanishes for q != 2
weight = 1, 1, 0
degree = 2
dim = 1
citation = Bajpai, Harder, Horozov, Moya Giusti (Eisenstein cohomology of SL_3(Z) and GL_3(Z))

[fact gl3_eis_dim_211]
statement = dim H^2_Eis(GL_3(Z), V_{2,1,1}) = 1, and H^q_Eis vanishes for q != 2
weight = 2, 1, 1
degree = 2
dim = 1
citation = Bajpai, Harder, Horozov, Moya Giusti (Eisenstein cohomology of SL_3(Z) and GL_3(Z))

[fact gl3_rational]
statement = H^i(GL_3(Z), Q) = 0 for i > 0 (and H^0 = Q)
citation = Soule - The cohomology of SL_3(Z)

[fact gl3_interior_off]
statement = the cuspidal (interior) cohomology of GL_3(Z) vanishes for the weights V_{1,1,0} and V_{2,1,1}, so H^2 = H^2_Eis there
citation = Bajpai, Harder, Horozov, Moya Giusti (Eisenstein cohomology of SL_3(Z) and GL_3(Z))

[fact gl4_interior_range]
statement = the interior cohomology of GL_4(Z) is concentrated in degrees 4 and 5, so group cohomology equals Eisenstein cohomology away from those degrees
degrees = 4, 5
citation = cuspidal range of the symmetric space of SL_4(R) (standard)
)";
}

FactsRegistry FactsRegistry::builtin() { return parse(builtin_text()); }

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

FactsRegistry FactsRegistry::parse(const std::string& text) {
  FactsRegistry reg;
  std::istringstream in(text);
  std::string line;
  FactEntry* current = nullptr;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    if (s.front() == '[') {
      if (s.back() != ']')
        throw std::runtime_error("registry line " + std::to_string(lineno) + ": unterminated section");
      std::istringstream head(s.substr(1, s.size() - 2));
      std::string tag, key;
      head >> tag >> key;
      if (tag != "fact" || key.empty())
        throw std::runtime_error("registry line " + std::to_string(lineno) + ": expected [fact <key>]");
      current = &reg.entries_[key];
      current->key = key;
      continue;
    }
    const std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("registry line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = strip(s.substr(0, eq));
    const std::string value = strip(s.substr(eq + 1));
    if (!current) {
      if (key == "format") {
        if (value != "eiscomp-registry-1")
          throw std::runtime_error("unsupported registry format '" + value + "'");
      } else if (key == "ghost_branch") {
        if (value == "ghost") reg.default_branch_ = Branch::Ghost;
        else if (value == "no-ghost") reg.default_branch_ = Branch::NoGhost;
        else if (value == "undetermined") reg.default_branch_ = Branch::Undetermined;
        else throw std::runtime_error("bad ghost_branch value '" + value + "'");
      } else {
        throw std::runtime_error("registry line " + std::to_string(lineno) + ": unknown top-level key '" + key + "'");
      }
      continue;
    }
    if (key == "statement") current->statement = value;
    else if (key == "citation") current->citation = value;
    else current->fields[key] = value;
  }
  for (const auto& [k, e] : reg.entries_)
    if (e.statement.empty() || e.citation.empty())
      throw std::runtime_error("registry entry '" + k + "' needs statement and citation");
  return reg;
}

FactsRegistry FactsRegistry::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open registry file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

FactsRegistry FactsRegistry::load_default() {
  if (const char* env = std::getenv("EISCOMP_REGISTRY"); env && *env)
    return load_file(env);
  return builtin();
}

const FactEntry& FactsRegistry::at(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) throw RegistryMiss("no registry entry '" + key + "'");
  return it->second;
}

std::vector<std::string> FactsRegistry::keys() const {
  std::vector<std::string> out;
  for (const auto& [k, e] : entries_) out.push_back(k);
  return out;
}

std::vector<int> FactsRegistry::sl4_rational_degrees() const {
  return at("sl4_rational").int_list_field("nonzero_degrees");
}

int FactsRegistry::gl3_eis_dim(const Weight& mu, int degree) const {
  const char* key = nullptr;
  if (mu == Weight{1, 1, 0}) key = "gl3_eis_dim_110";
  else if (mu == Weight{2, 1, 1}) key = "gl3_eis_dim_211";
  else throw RegistryMiss("no Eisenstein dimension fact for weight " + weight_str(mu));
  const FactEntry& e = at(key);
  if (e.int_list_field("weight") != std::vector<int>(mu.begin(), mu.end()))
    throw RegistryMiss("registry entry '" + std::string(key) + "' weight mismatch");
  return degree == e.int_field("degree") ? e.int_field("dim") : 0;
}

bool FactsRegistry::gl3_rational_vanishes_above_zero() const {
  return has("gl3_rational");
}

}  // namespace eiscomp::levi
