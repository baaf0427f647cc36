#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gdep/atoms.hpp"
#include "gdep/team.hpp"
#include "gdep/variables.hpp"

namespace gdep {

// Request for an Armstrong relation: a single team over `universe` that
// satisfies exactly the atoms derivable from `sigma`.
struct ArmstrongSpec {
  AtomSet sigma;
  VarSet universe;
  std::size_t bound = 12;  // maximum universe size
};

// Builds the Armstrong relation by concatenating, for every
// non-derivable single-antecedent atom, a two-row block refuting it.
// Block k draws fresh values 2k/2k+1 on its differing columns so distinct
// blocks cannot interact; derivably-constant columns are 0 throughout.
// With a nonempty universe and nothing to refute the result is a single
// all-zero row; an empty universe yields the empty team.
// Throws DomainError if sigma mentions variables outside the universe and
// SizeError if |universe| exceeds the bound.
Team build_armstrong(const ArmstrongSpec& spec);

// One failed instance of the biconditional "team satisfies the atom iff
// sigma derives it".
struct ArmstrongViolation {
  GAtom atom;
  bool expected;  // entailment verdict
  bool actual;    // team check verdict
  std::string str() const;  // "atom: expected X, got Y"
};

// Checks the biconditional over dom(team). By default only
// single-antecedent atoms are checked (sufficient: a compound atom holds
// iff all its single-antecedent components do); `all_atoms` extends the
// sweep to every lhs/rhs pair, which is exponential in the domain size.
std::vector<ArmstrongViolation> verify_armstrong(const Team& team, const AtomSet& sigma,
                                                 std::size_t bound = 12,
                                                 bool all_atoms = false);

}  // namespace gdep
