#include "gdep/armstrong.hpp"

#include <algorithm>
#include <string>

#include "gdep/calculus.hpp"
#include "gdep/errors.hpp"

namespace gdep {

namespace {

// All subsets of `universe` in a fixed enumeration order.
std::vector<VarSet> all_subsets(const VarSet& universe) {
  const std::vector<Variable>& vars = universe.items();
  std::vector<VarSet> out;
  const std::size_t count = std::size_t{1} << vars.size();
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    VarSet set;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (mask & (std::size_t{1} << i)) set.insert(vars[i]);
    }
    out.push_back(std::move(set));
  }
  return out;
}

}  // namespace

Team build_armstrong(const ArmstrongSpec& spec) {
  if (!spec.sigma.variables().subset_of(spec.universe)) {
    throw DomainError("premise set mentions variables outside the declared universe");
  }
  if (spec.universe.size() > spec.bound) {
    throw SizeError("universe size " + std::to_string(spec.universe.size()) +
                    " exceeds the bound " + std::to_string(spec.bound));
  }
  Team team(spec.universe);
  if (spec.universe.empty()) return team;  // no atoms to separate

  const AtomSet sigma1 = normalize_set(spec.sigma);
  const VarSet constants = reach_set(sigma1, VarSet{}, spec.universe);

  // Every non-derivable single-antecedent atom gets its own refuting
  // block, in canonical atom order.
  std::vector<std::pair<GAtom, VarSet>> blocks;  // atom, differing columns
  for (const VarSet& w : all_subsets(spec.universe)) {
    const VarSet reached = reach_set(sigma1, w, spec.universe);
    for (const Variable& v : spec.universe) {
      if (!reached.contains(v)) blocks.emplace_back(GAtom{VarSet{v}, w}, spec.universe - reached);
    }
  }
  std::sort(blocks.begin(), blocks.end());

  if (blocks.empty()) {
    // Everything is derivable; a single constant row realizes exactly that.
    team.add_row(std::vector<Value>(spec.universe.size(), "0"));
    return team;
  }

  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const VarSet& differing = blocks[k].second;
    const Value low = std::to_string(2 * k);
    const Value high = std::to_string(2 * k + 1);
    std::vector<Value> row_a, row_b;
    row_a.reserve(spec.universe.size());
    row_b.reserve(spec.universe.size());
    for (const Variable& v : spec.universe) {
      if (constants.contains(v)) {
        row_a.push_back("0");
        row_b.push_back("0");
      } else {
        row_a.push_back(low);
        row_b.push_back(differing.contains(v) ? high : low);
      }
    }
    team.add_row(std::move(row_a));
    team.add_row(std::move(row_b));
  }
  return team;
}

std::string ArmstrongViolation::str() const {
  const auto name = [](bool b) { return b ? "true" : "false"; };
  return atom.str() + ": expected " + name(expected) + ", got " + name(actual);
}

std::vector<ArmstrongViolation> verify_armstrong(const Team& team, const AtomSet& sigma,
                                                 std::size_t bound, bool all_atoms) {
  if (team.domain().size() > bound) {
    throw SizeError("team domain size " + std::to_string(team.domain().size()) +
                    " exceeds the bound " + std::to_string(bound));
  }
  std::vector<GAtom> atoms;
  const std::vector<VarSet> subsets = all_subsets(team.domain());
  if (all_atoms) {
    for (const VarSet& lhs : subsets) {
      for (const VarSet& rhs : subsets) atoms.push_back(GAtom{lhs, rhs});
    }
  } else {
    for (const Variable& v : team.domain()) {
      for (const VarSet& rhs : subsets) atoms.push_back(GAtom{VarSet{v}, rhs});
    }
  }
  std::sort(atoms.begin(), atoms.end());

  std::vector<ArmstrongViolation> violations;
  for (const GAtom& atom : atoms) {
    const bool expected = entails(sigma, atom).derivable;
    const bool actual = check_gdep(team, atom);
    if (expected != actual) violations.push_back({atom, expected, actual});
  }
  return violations;
}

}  // namespace gdep
