#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gdep/atoms.hpp"
#include "gdep/team.hpp"
#include "gdep/variables.hpp"

namespace gdep {

// The six-rule deductive system for G-dependence atoms, plus Premise for
// leaves drawn from the declared premise set.
enum class Rule { kPremise, kA0, kA1, kR0, kR0Prime, kR1, kR2 };

const char* rule_name(Rule rule);  // "Premise", "A0", ..., "R0'", ...

// A derivation tree. Each node concludes `conclusion` by `rule` from the
// conclusions of `premises` (empty for Premise/A0/A1 leaves).
struct Derivation {
  GAtom conclusion;
  Rule rule = Rule::kPremise;
  std::vector<Derivation> premises;
};

// Indented text form: one node per line as "rule: atom", children
// indented two spaces below their parent.
std::string derivation_to_text(const Derivation& derivation);

// A two-row team over values {0,1} refuting an entailment: row 0 is
// all-zero and row 1 is 1 exactly on `differing`.
struct CounterModel {
  Team team;
  VarSet differing;
};

struct EntailmentResult {
  bool derivable = false;
  std::optional<Derivation> derivation;     // present iff derivable
  std::optional<CounterModel> counter_model;  // present iff not derivable
};

// Least S with W <= S that is closed under the premises: whenever
// gdep(u ; Z) is in `premises` and Z <= S, also u is in S. Every premise
// must be single-antecedent (ContractError otherwise); all variables are
// restricted to `universe`. Membership characterizes derivability:
// sigma |- gdep(v ; W) iff v is in the result.
VarSet reach_set(const AtomSet& premises, const VarSet& w, const VarSet& universe);

// Decides sigma |- goal in the six-rule calculus. Positive verdicts carry
// a machine-checkable Derivation; negative verdicts carry a two-row
// binary CounterModel over the variables of sigma and goal.
EntailmentResult entails(const AtomSet& sigma, const GAtom& goal);

// Validates a derivation tree: every node must instantiate its rule
// template and every Premise leaf must belong to `sigma`.
bool check_derivation(const AtomSet& sigma, const Derivation& derivation);

// As check_derivation, but reports the first offending node ("root/1/0"
// style path) and why it fails.
struct DerivationIssue {
  std::string path;
  std::string message;
};
std::optional<DerivationIssue> find_derivation_issue(const AtomSet& sigma,
                                                     const Derivation& derivation);

// Brute-force semantic entailment over all two-row binary teams on the
// variables of sigma and goal. Exact for atom entailment: a refutable
// atom is always refutable by such a team. Guard: at most `max_variables`
// variables (SizeError otherwise).
bool semantic_oracle(const AtomSet& sigma, const GAtom& goal,
                     std::size_t max_variables = 20);

// All derivable single-antecedent atoms gdep(v ; W) with v in `universe`
// and W a subset of `universe`. SizeError when |universe| > max_universe.
AtomSet deductive_closure(const AtomSet& sigma, const VarSet& universe,
                          std::size_t max_universe = 12);

}  // namespace gdep
