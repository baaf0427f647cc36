#include "gdep/variables.hpp"

#include <algorithm>
#include <cctype>

namespace gdep {

bool valid_variable_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    if (c == ';' || c == '(' || c == ')' || c == ',') return false;
  }
  return true;
}

VarSet::VarSet(std::initializer_list<Variable> init) : vars_(init) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

VarSet::VarSet(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

bool VarSet::contains(const Variable& v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

bool VarSet::subset_of(const VarSet& other) const {
  return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end());
}

void VarSet::insert(const Variable& v) {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v) vars_.insert(it, v);
}

VarSet VarSet::operator|(const VarSet& other) const {
  std::vector<Variable> out;
  out.reserve(vars_.size() + other.vars_.size());
  std::set_union(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(),
                 std::back_inserter(out));
  VarSet result;
  result.vars_ = std::move(out);
  return result;
}

VarSet VarSet::operator-(const VarSet& other) const {
  std::vector<Variable> out;
  std::set_difference(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(),
                      std::back_inserter(out));
  VarSet result;
  result.vars_ = std::move(out);
  return result;
}

VarSet VarSet::operator&(const VarSet& other) const {
  std::vector<Variable> out;
  std::set_intersection(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(),
                        std::back_inserter(out));
  VarSet result;
  result.vars_ = std::move(out);
  return result;
}

VarSet VarSet::without(const Variable& v) const {
  VarSet result = *this;
  auto it = std::lower_bound(result.vars_.begin(), result.vars_.end(), v);
  if (it != result.vars_.end() && *it == v) result.vars_.erase(it);
  return result;
}

std::string VarSet::str() const {
  std::string out;
  for (const Variable& v : vars_) {
    if (!out.empty()) out += ' ';
    out += v.name;
  }
  return out;
}

}  // namespace gdep
