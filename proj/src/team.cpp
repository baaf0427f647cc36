#include "gdep/team.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "gdep/errors.hpp"

namespace gdep {

bool valid_value_token(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    if (c == ',') return false;
  }
  return true;
}

std::size_t Team::column_index(const Variable& v) const {
  const auto& items = domain_.items();
  auto it = std::lower_bound(items.begin(), items.end(), v);
  if (it == items.end() || *it != v) {
    throw DomainError("variable not in team domain: " + v.name);
  }
  return static_cast<std::size_t>(it - items.begin());
}

std::vector<std::size_t> Team::column_indices(const VarSet& vars) const {
  std::vector<std::size_t> out;
  out.reserve(vars.size());
  for (const Variable& v : vars) out.push_back(column_index(v));
  return out;
}

const Value& Team::value(std::size_t row, const Variable& v) const {
  return rows_[row][column_index(v)];
}

void Team::add_row(std::vector<Value> values) {
  if (values.size() != domain_.size()) {
    throw ContractError("row width " + std::to_string(values.size()) +
                        " does not match domain size " + std::to_string(domain_.size()));
  }
  rows_.push_back(std::move(values));
}

Team Team::subteam(const std::vector<std::size_t>& row_indices) const {
  Team out(domain_);
  for (std::size_t i : row_indices) out.rows_.push_back(rows_[i]);
  return out;
}

namespace {

std::vector<std::string> split_csv_record(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

}  // namespace

Team load_team(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty input: a CSV header is required");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  const std::vector<std::string> header = split_csv_record(line);
  if (header.empty()) throw FormatError("empty input: a CSV header is required");
  std::vector<Variable> header_vars;
  header_vars.reserve(header.size());
  for (const std::string& name : header) {
    if (!valid_variable_name(name)) {
      throw FormatError("invalid variable name in header: '" + name + "'");
    }
    header_vars.push_back(Variable{name});
  }
  VarSet domain(header_vars);
  if (domain.size() != header_vars.size()) {
    throw FormatError("duplicate variable name in header");
  }

  // Map header positions to canonical column positions.
  Team team(domain);
  std::vector<std::size_t> slot(header_vars.size());
  for (std::size_t i = 0; i < header_vars.size(); ++i) {
    slot[i] = team.column_index(header_vars[i]);
  }

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string> cells = split_csv_record(line);
    if (cells.size() != header_vars.size()) {
      throw FormatError("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(header_vars.size()) + " cells, got " +
                        std::to_string(cells.size()));
    }
    std::vector<Value> row(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (!valid_value_token(cells[i])) {
        throw FormatError("line " + std::to_string(line_no) + ": invalid value token '" +
                          cells[i] + "'");
      }
      row[slot[i]] = cells[i];
    }
    team.add_row(std::move(row));
  }
  return team;
}

Team load_team_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open team file: " + path);
  return load_team(in);
}

void emit_team(const Team& team, std::ostream& out) {
  const auto& vars = team.domain().items();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out << ',';
    out << vars[i].name;
  }
  out << '\n';
  for (std::size_t r = 0; r < team.row_count(); ++r) {
    for (std::size_t c = 0; c < team.width(); ++c) {
      if (c) out << ',';
      out << team.cell(r, c);
    }
    out << '\n';
  }
}

std::string team_to_csv(const Team& team) {
  std::ostringstream out;
  emit_team(team, out);
  return out.str();
}

bool check_gdep(const Team& team, const VarSet& x, const VarSet& y) {
  const std::vector<std::size_t> xi = team.column_indices(x);
  const std::vector<std::size_t> yi = team.column_indices(y);
  const std::size_t n = team.row_count();
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      std::size_t differing = 0;
      for (std::size_t c : xi) {
        if (team.cell(s, c) != team.cell(t, c) && ++differing > 1) break;
      }
      if (differing != 1) continue;
      bool witnessed = false;
      for (std::size_t c : yi) {
        if (team.cell(s, c) != team.cell(t, c)) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) return false;
    }
  }
  return true;
}

bool check_gdep(const Team& team, const GAtom& atom) {
  return check_gdep(team, atom.lhs, atom.rhs);
}

bool check_fdep(const Team& team, const VarSet& x, const VarSet& y) {
  const std::vector<std::size_t> xi = team.column_indices(x);
  const std::vector<std::size_t> yi = team.column_indices(y);
  const std::size_t n = team.row_count();
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      bool agree = true;
      for (std::size_t c : xi) {
        if (team.cell(s, c) != team.cell(t, c)) {
          agree = false;
          break;
        }
      }
      if (!agree) continue;
      for (std::size_t c : yi) {
        if (team.cell(s, c) != team.cell(t, c)) return false;
      }
    }
  }
  return true;
}

bool check_fdep(const Team& team, const FAtom& atom) {
  return check_fdep(team, atom.lhs, atom.rhs);
}

namespace {

// Subsets of `pool` of exactly `size` elements, in lexicographic
// combination order.
void for_each_subset_of_size(const std::vector<Variable>& pool, std::size_t size,
                             const std::function<void(const VarSet&)>& body) {
  if (size > pool.size()) return;
  std::vector<std::size_t> pick(size);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<Variable> chosen;
    chosen.reserve(size);
    for (std::size_t i : pick) chosen.push_back(pool[i]);
    body(VarSet(std::move(chosen)));
    // advance the combination
    std::size_t i = size;
    while (i > 0) {
      --i;
      if (pick[i] + (size - i) < pool.size()) {
        ++pick[i];
        for (std::size_t j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
    if (size == 0) return;
  }
}

}  // namespace

std::vector<GAtom> mine_gdeps(const Team& team, std::size_t antecedent_bound) {
  if (antecedent_bound < 1) throw ContractError("antecedent bound must be at least 1");
  const std::vector<Variable>& all = team.domain().items();
  std::vector<GAtom> found;
  for (std::size_t lhs_size = 1; lhs_size <= antecedent_bound && lhs_size <= all.size();
       ++lhs_size) {
    for_each_subset_of_size(all, lhs_size, [&](const VarSet& lhs) {
      const VarSet rest = team.domain() - lhs;
      std::vector<VarSet> minimal;
      for (std::size_t rhs_size = 0; rhs_size <= rest.size(); ++rhs_size) {
        for_each_subset_of_size(rest.items(), rhs_size, [&](const VarSet& rhs) {
          for (const VarSet& m : minimal) {
            if (m.subset_of(rhs)) return;  // a smaller witness already covers it
          }
          if (check_gdep(team, lhs, rhs)) minimal.push_back(rhs);
        });
      }
      for (VarSet& rhs : minimal) found.push_back(GAtom{lhs, std::move(rhs)});
    });
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace gdep
