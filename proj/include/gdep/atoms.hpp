#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gdep/variables.hpp"

namespace gdep {

// G-dependence atom gdep(lhs ; rhs): two rows differing in exactly one
// variable of lhs must differ somewhere in rhs.
struct GAtom {
  VarSet lhs;
  VarSet rhs;

  auto operator<=>(const GAtom&) const = default;
  std::string str() const;  // canonical text, e.g. "gdep(a b ; c)"
};

// Functional-dependence atom dep(lhs ; rhs): rows agreeing on lhs agree
// on rhs.
struct FAtom {
  VarSet lhs;
  VarSet rhs;

  auto operator<=>(const FAtom&) const = default;
  std::string str() const;
};

// A premise set of G-dependence atoms, deduplicated and kept in canonical
// order.
class AtomSet {
 public:
  AtomSet() = default;
  AtomSet(std::initializer_list<GAtom> init);
  explicit AtomSet(std::vector<GAtom> atoms);

  bool empty() const { return atoms_.empty(); }
  std::size_t size() const { return atoms_.size(); }
  bool contains(const GAtom& atom) const;
  void insert(const GAtom& atom);
  void merge(const AtomSet& other);

  const std::vector<GAtom>& items() const { return atoms_; }
  auto begin() const { return atoms_.begin(); }
  auto end() const { return atoms_.end(); }

  // All variables mentioned by any member atom.
  VarSet variables() const;

  auto operator<=>(const AtomSet&) const = default;

 private:
  std::vector<GAtom> atoms_;  // sorted, unique
};

using ParsedAtom = std::variant<GAtom, FAtom>;

// Parses `("gdep"|"dep") "(" var* ";" var* ")"` with whitespace-separated
// variable names. Repeated names within one side collapse to one.
// Throws SyntaxError on malformed input.
ParsedAtom parse_atom(std::string_view text);

// As parse_atom but requires a gdep atom.
GAtom parse_gatom(std::string_view text);

std::string atom_str(const ParsedAtom& atom);

// Rewrites an atom to single-antecedent form:
//   gdep(x0..xn-1 ; y)  ->  { gdep(xi ; (x - xi) y) : i < n }.
// An empty-antecedent atom is universally valid and normalizes to the
// empty set. The conjunction of the result is team-equivalent to `atom`.
AtomSet normalize(const GAtom& atom);

// Union of normalize over all members.
AtomSet normalize_set(const AtomSet& atoms);

// Atom-set files: UTF-8 text, one atom per line, `#` starts a comment
// line, blank lines ignored. All atoms must be gdep atoms.
AtomSet load_gatoms(std::istream& in);
AtomSet load_gatoms_file(const std::string& path);

}  // namespace gdep
