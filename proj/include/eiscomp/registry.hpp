#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "eiscomp/types.hpp"

namespace eiscomp::levi {

enum class Branch { Ghost, NoGhost, Undetermined };

std::string branch_str(Branch b);

struct RegistryMiss : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One imported external result; fields are free-form key/value pairs plus the
// mandatory statement and citation.
struct FactEntry {
  std::string key;
  std::string statement;
  std::string citation;
  std::map<std::string, std::string> fields;

  const std::string& field(const std::string& name) const;
  std::vector<int> int_list_field(const std::string& name) const;
  int int_field(const std::string& name) const;
};

// Immutable store of the external facts the engine is allowed to assume.
// Shipped as a structured text file; a built-in copy of the same content
// backs the engine when no file is given.
class FactsRegistry {
 public:
  static FactsRegistry builtin();
  static FactsRegistry parse(const std::string& text);
  static FactsRegistry load_file(const std::string& path);
  // EISCOMP_REGISTRY env var if set, otherwise the built-in facts.
  static FactsRegistry load_default();

  bool has(const std::string& key) const { return entries_.count(key) > 0; }
  const FactEntry& at(const std::string& key) const;
  std::vector<std::string> keys() const;

  Branch default_branch() const { return default_branch_; }

  // Convenience accessors over the flagship entries (validated on use).
  std::vector<int> sl4_rational_degrees() const;          // {0, 3}
  int gl3_eis_dim(const Weight& mu, int degree) const;    // 1 at degree 2
  bool gl3_rational_vanishes_above_zero() const;

  static std::string builtin_text();

 private:
  std::map<std::string, FactEntry> entries_;
  Branch default_branch_ = Branch::Undetermined;
};

}  // namespace eiscomp::levi
