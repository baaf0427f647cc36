#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gdep/atoms.hpp"
#include "gdep/team.hpp"
#include "gdep/variables.hpp"

namespace gdep::test {

inline VarSet vars(std::string_view names) {
  std::vector<Variable> out;
  std::istringstream ss{std::string(names)};
  std::string name;
  while (ss >> name) out.emplace_back(name);
  return VarSet(std::move(out));
}

inline Team team_from_csv(std::string_view csv) {
  std::istringstream in{std::string(csv)};
  return load_team(in);
}

inline Team fig2_team() {
  return team_from_csv("x0,x1,y0,y1\n0,0,0,0\n1,0,1,0\n0,0,0,0\n0,0,0,0\n");
}

inline Team salary_team() {
  return team_from_csv(
      "Name,Title,YearsOfExperience,Salary\n"
      "John,PhD,1,2200\n"
      "Marie,PhD,10,2200\n"
      "Paolo,Professor,5,3500\n"
      "Sara,Professor,7,3500\n");
}

// Two rows over {0,1}: bit i of a mask is the value of the i-th domain
// variable in that row.
inline Team binary_two_row_team(const VarSet& domain, std::uint32_t row0_mask,
                                std::uint32_t row1_mask) {
  Team team(domain);
  std::vector<Value> r0, r1;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    r0.push_back((row0_mask >> i) & 1u ? "1" : "0");
    r1.push_back((row1_mask >> i) & 1u ? "1" : "0");
  }
  team.add_row(std::move(r0));
  team.add_row(std::move(r1));
  return team;
}

// mt19937 driven directly so sequences are identical across platforms.
struct Rng {
  std::mt19937 engine;
  explicit Rng(std::uint32_t seed) : engine(seed) {}
  std::size_t below(std::size_t n) { return n == 0 ? 0 : engine() % n; }
  bool flip() { return (engine() & 1u) != 0; }
};

inline VarSet random_subset(Rng& rng, const VarSet& pool) {
  std::vector<Variable> out;
  for (const Variable& v : pool) {
    if (rng.flip()) out.push_back(v);
  }
  return VarSet(std::move(out));
}

inline Team random_team(Rng& rng, const VarSet& domain, std::size_t max_rows,
                        std::size_t alphabet) {
  Team team(domain);
  const std::size_t rows = rng.below(max_rows + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<Value> row;
    row.reserve(domain.size());
    for (std::size_t c = 0; c < domain.size(); ++c) {
      row.push_back(std::to_string(rng.below(alphabet)));
    }
    team.add_row(std::move(row));
  }
  return team;
}

inline GAtom random_single_antecedent_atom(Rng& rng, const VarSet& pool) {
  const std::vector<Variable>& items = pool.items();
  const Variable head = items[rng.below(items.size())];
  return GAtom{VarSet{head}, random_subset(rng, pool)};
}

inline AtomSet random_premises(Rng& rng, const VarSet& pool, std::size_t max_atoms) {
  AtomSet out;
  const std::size_t count = rng.below(max_atoms + 1);
  for (std::size_t i = 0; i < count; ++i) {
    out.insert(random_single_antecedent_atom(rng, pool));
  }
  return out;
}

// Projection to a sub-domain, preserving rows.
inline Team project(const Team& team, const VarSet& keep) {
  Team out(keep);
  const std::vector<std::size_t> cols = team.column_indices(keep);
  for (std::size_t r = 0; r < team.row_count(); ++r) {
    std::vector<Value> row;
    row.reserve(cols.size());
    for (std::size_t c : cols) row.push_back(team.cell(r, c));
    out.add_row(std::move(row));
  }
  return out;
}

}  // namespace gdep::test
