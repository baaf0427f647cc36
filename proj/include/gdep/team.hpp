#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gdep/atoms.hpp"
#include "gdep/variables.hpp"

namespace gdep {

// A cell value. Values are opaque tokens compared by exact string
// equality; "01" and "1" are distinct.
using Value = std::string;

bool valid_value_token(std::string_view token);

// A table of assignments: a fixed variable domain plus an ordered list of
// rows, duplicates allowed. Row indices are positional (0..n-1); columns
// are stored in the domain's canonical (lexicographic) order.
class Team {
 public:
  Team() = default;
  explicit Team(VarSet domain) : domain_(std::move(domain)) {}

  const VarSet& domain() const { return domain_; }
  std::size_t width() const { return domain_.size(); }
  std::size_t row_count() const { return rows_.size(); }

  // Column position of `v` in canonical order; DomainError if absent.
  std::size_t column_index(const Variable& v) const;
  std::vector<std::size_t> column_indices(const VarSet& vars) const;

  const Value& cell(std::size_t row, std::size_t col) const { return rows_[row][col]; }
  const Value& value(std::size_t row, const Variable& v) const;
  const std::vector<Value>& row(std::size_t index) const { return rows_[index]; }

  // `values` must follow the domain's canonical column order.
  void add_row(std::vector<Value> values);

  Team subteam(const std::vector<std::size_t>& row_indices) const;

  bool operator==(const Team&) const = default;

 private:
  VarSet domain_;
  std::vector<std::vector<Value>> rows_;
};

// CSV ingestion/emission. Dialect: comma separator, no quoting; the first
// record is a header of distinct variable names; every cell is a bare
// token (nonempty, no whitespace). A header-only file is the empty team.
Team load_team(std::istream& in);
Team load_team_file(const std::string& path);
void emit_team(const Team& team, std::ostream& out);
std::string team_to_csv(const Team& team);

// True iff whenever two rows differ in exactly one variable of x, they
// differ in at least one variable of y.
bool check_gdep(const Team& team, const VarSet& x, const VarSet& y);
bool check_gdep(const Team& team, const GAtom& atom);

// True iff any two rows agreeing on all of x agree on all of y.
bool check_fdep(const Team& team, const VarSet& x, const VarSet& y);
bool check_fdep(const Team& team, const FAtom& atom);

// All G-dependence atoms gdep(x ; y) holding in `team` with
// 1 <= |x| <= antecedent_bound, x and y disjoint, and y inclusion-minimal
// for its antecedent. Sorted canonically.
std::vector<GAtom> mine_gdeps(const Team& team, std::size_t antecedent_bound);

}  // namespace gdep
