#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace gdep {

// An attribute (column) name. Two variables are equal iff their names are.
struct Variable {
  std::string name;

  Variable() = default;
  Variable(std::string name) : name(std::move(name)) {}
  Variable(const char* name) : name(name) {}

  auto operator<=>(const Variable&) const = default;
};

// Valid variable names are nonempty tokens without whitespace or the
// reserved punctuation `; ( ) ,`.
bool valid_variable_name(std::string_view name);

// A finite set of variables, kept sorted by name. Iteration and printing
// are always in lexicographic order.
class VarSet {
 public:
  VarSet() = default;
  VarSet(std::initializer_list<Variable> init);
  explicit VarSet(std::vector<Variable> vars);

  bool empty() const { return vars_.empty(); }
  std::size_t size() const { return vars_.size(); }
  bool contains(const Variable& v) const;
  bool subset_of(const VarSet& other) const;

  void insert(const Variable& v);
  VarSet operator|(const VarSet& other) const;  // union
  VarSet operator-(const VarSet& other) const;  // difference
  VarSet operator&(const VarSet& other) const;  // intersection
  VarSet without(const Variable& v) const;

  const std::vector<Variable>& items() const { return vars_; }
  auto begin() const { return vars_.begin(); }
  auto end() const { return vars_.end(); }

  // Space-separated names, e.g. "x0 x1 y".
  std::string str() const;

  auto operator<=>(const VarSet&) const = default;

 private:
  std::vector<Variable> vars_;  // sorted, unique
};

}  // namespace gdep
