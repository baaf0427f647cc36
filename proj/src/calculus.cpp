#include "gdep/calculus.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gdep/errors.hpp"

namespace gdep {

const char* rule_name(Rule rule) {
  switch (rule) {
    case Rule::kPremise: return "Premise";
    case Rule::kA0: return "A0";
    case Rule::kA1: return "A1";
    case Rule::kR0: return "R0";
    case Rule::kR0Prime: return "R0'";
    case Rule::kR1: return "R1";
    case Rule::kR2: return "R2";
  }
  return "?";
}

namespace {

void write_node(const Derivation& d, std::size_t depth, std::ostream& out) {
  for (std::size_t i = 0; i < depth * 2; ++i) out << ' ';
  out << rule_name(d.rule) << ": " << d.conclusion.str() << '\n';
  for (const Derivation& p : d.premises) write_node(p, depth + 1, out);
}

}  // namespace

std::string derivation_to_text(const Derivation& derivation) {
  std::ostringstream out;
  write_node(derivation, 0, out);
  return out.str();
}

namespace {

struct ReachTrace {
  VarSet reached;
  std::map<Variable, GAtom> fired;  // closure step that first added the key
};

ReachTrace reach_trace(const AtomSet& premises, const VarSet& w, const VarSet& universe) {
  for (const GAtom& atom : premises) {
    if (atom.lhs.size() != 1) {
      throw ContractError("reach_set requires single-antecedent premises, got " + atom.str());
    }
    if (!(atom.lhs | atom.rhs).subset_of(universe)) {
      throw ContractError("premise mentions a variable outside the universe: " + atom.str());
    }
  }
  if (!w.subset_of(universe)) {
    throw ContractError("target set is not contained in the universe");
  }

  ReachTrace trace;
  trace.reached = w;
  std::vector<bool> done(premises.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    std::size_t index = 0;
    for (const GAtom& atom : premises) {
      const std::size_t i = index++;
      if (done[i]) continue;
      const Variable& head = atom.lhs.items().front();
      if (trace.reached.contains(head)) {
        done[i] = true;
        continue;
      }
      if (atom.rhs.subset_of(trace.reached)) {
        trace.reached.insert(head);
        trace.fired.emplace(head, atom);
        done[i] = true;
        changed = true;
      }
    }
  }
  return trace;
}

// Derivation of a normalized premise atom: either directly from sigma or
// by one R0 step from the multi-antecedent premise it came from.
Derivation premise_derivation(const GAtom& normalized, const GAtom& origin) {
  Derivation leaf{origin, Rule::kPremise, {}};
  if (origin == normalized) return leaf;
  return Derivation{normalized, Rule::kR0, {std::move(leaf)}};
}

class ComponentProver {
 public:
  ComponentProver(const VarSet& target_rhs, const ReachTrace& trace,
                  const std::map<GAtom, GAtom>& origins)
      : w_(target_rhs), trace_(trace), origins_(origins) {}

  // Derivation of gdep(v ; W) for any v in the reach set.
  Derivation prove(const Variable& v) {
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
    Derivation d = build(v);
    memo_.emplace(v, d);
    return d;
  }

 private:
  Derivation build(const Variable& v) {
    const GAtom target{VarSet{v}, w_};
    if (w_.contains(v)) {
      Derivation axiom{GAtom{VarSet{v}, VarSet{v}}, Rule::kA1, {}};
      if (w_ == VarSet{v}) return axiom;
      return Derivation{target, Rule::kR1, {std::move(axiom)}};
    }
    const GAtom& atom = trace_.fired.at(v);  // gdep(v ; Z)
    Derivation from_sigma = premise_derivation(atom, origins_.at(atom));
    if (atom.rhs == w_) return from_sigma;
    if (atom.rhs.empty()) {
      // constancy of v widens to any right side
      return Derivation{target, Rule::kR1, {std::move(from_sigma)}};
    }
    std::vector<Derivation> premises;
    premises.reserve(atom.rhs.size() + 1);
    for (const Variable& z : atom.rhs) premises.push_back(prove(z));
    premises.push_back(std::move(from_sigma));
    return Derivation{target, Rule::kR2, std::move(premises)};
  }

  const VarSet& w_;
  const ReachTrace& trace_;
  const std::map<GAtom, GAtom>& origins_;
  std::map<Variable, Derivation> memo_;
};

Team two_row_team(const VarSet& domain, const VarSet& differing) {
  Team team(domain);
  std::vector<Value> row0(domain.size(), "0");
  std::vector<Value> row1;
  row1.reserve(domain.size());
  for (const Variable& v : domain) row1.push_back(differing.contains(v) ? "1" : "0");
  team.add_row(std::move(row0));
  team.add_row(std::move(row1));
  return team;
}

}  // namespace

VarSet reach_set(const AtomSet& premises, const VarSet& w, const VarSet& universe) {
  return reach_trace(premises, w, universe).reached;
}

EntailmentResult entails(const AtomSet& sigma, const GAtom& goal) {
  EntailmentResult result;
  if (goal.lhs.empty()) {
    result.derivable = true;
    result.derivation = Derivation{goal, Rule::kA0, {}};
    return result;
  }

  const VarSet universe = sigma.variables() | goal.lhs | goal.rhs;
  const AtomSet sigma1 = normalize_set(sigma);
  std::map<GAtom, GAtom> origins;
  for (const GAtom& premise : sigma) {
    for (const GAtom& part : normalize(premise)) origins.emplace(part, premise);
  }

  // One component gdep(xi ; (x - xi) y) per antecedent variable, checked
  // in lexicographic order of xi.
  std::vector<Derivation> parts;
  for (const Variable& xi : goal.lhs) {
    const VarSet w = goal.lhs.without(xi) | goal.rhs;
    const ReachTrace trace = reach_trace(sigma1, w, universe);
    if (!trace.reached.contains(xi)) {
      result.derivable = false;
      const VarSet differing = universe - trace.reached;
      result.counter_model = CounterModel{two_row_team(universe, differing), differing};
      return result;
    }
    ComponentProver prover(w, trace, origins);
    parts.push_back(prover.prove(xi));
  }

  result.derivable = true;
  if (parts.size() == 1) {
    result.derivation = std::move(parts.front());
  } else {
    result.derivation = Derivation{goal, Rule::kR0Prime, std::move(parts)};
  }
  return result;
}

namespace {

std::optional<DerivationIssue> issue_at(const AtomSet& sigma, const Derivation& d,
                                        const std::string& path) {
  const auto fail = [&](const std::string& message) {
    return DerivationIssue{path, message};
  };
  const GAtom& c = d.conclusion;
  switch (d.rule) {
    case Rule::kPremise:
      if (!d.premises.empty()) return fail("Premise node must be a leaf");
      if (!sigma.contains(c)) return fail("premise not in the declared set: " + c.str());
      break;
    case Rule::kA0:
      if (!d.premises.empty()) return fail("A0 node must be a leaf");
      if (!c.lhs.empty()) return fail("A0 concludes an empty-antecedent atom");
      break;
    case Rule::kA1:
      if (!d.premises.empty()) return fail("A1 node must be a leaf");
      if (c.lhs != c.rhs) return fail("A1 concludes gdep(x ; x)");
      break;
    case Rule::kR0: {
      if (d.premises.size() != 1) return fail("R0 takes exactly one premise");
      const GAtom& p = d.premises.front().conclusion;
      if (c.lhs.size() != 1) return fail("R0 concludes a single-antecedent atom");
      const Variable& xi = c.lhs.items().front();
      if (!p.lhs.contains(xi)) return fail("R0 antecedent must come from the premise");
      if (c.rhs != (p.lhs.without(xi) | p.rhs)) {
        return fail("R0 conclusion right side must be (x - xi) y");
      }
      break;
    }
    case Rule::kR0Prime: {
      if (d.premises.empty()) return fail("R0' takes at least one premise");
      if (d.premises.size() != c.lhs.size()) {
        return fail("R0' needs one premise per antecedent variable");
      }
      VarSet seen;
      for (const Derivation& child : d.premises) {
        const GAtom& p = child.conclusion;
        if (p.lhs.size() != 1) return fail("R0' premises must be single-antecedent");
        const Variable& xi = p.lhs.items().front();
        if (!c.lhs.contains(xi)) return fail("R0' premise antecedent outside the conclusion");
        if (p.rhs != (c.lhs.without(xi) | c.rhs)) {
          return fail("R0' premise right side must be (x - xi) y");
        }
        seen.insert(xi);
      }
      if (seen != c.lhs) return fail("R0' premises must cover every antecedent variable");
      break;
    }
    case Rule::kR1: {
      if (d.premises.size() != 1) return fail("R1 takes exactly one premise");
      const GAtom& p = d.premises.front().conclusion;
      if (c.lhs != p.lhs) return fail("R1 keeps the antecedent");
      if (!p.rhs.subset_of(c.rhs)) return fail("R1 only widens the right side");
      break;
    }
    case Rule::kR2: {
      if (d.premises.empty()) return fail("R2 takes at least one premise");
      if (c.lhs.size() != 1) return fail("R2 concludes a single-antecedent atom");
      const GAtom& connector = d.premises.back().conclusion;
      if (connector.lhs != c.lhs) return fail("R2 connector premise keeps the antecedent");
      const VarSet& z = connector.rhs;
      if (d.premises.size() != z.size() + 1) {
        return fail("R2 needs one premise per connector variable");
      }
      VarSet seen;
      for (std::size_t i = 0; i + 1 < d.premises.size(); ++i) {
        const GAtom& p = d.premises[i].conclusion;
        if (p.lhs.size() != 1) return fail("R2 side premises must be single-antecedent");
        const Variable& zi = p.lhs.items().front();
        if (!z.contains(zi)) return fail("R2 side premise antecedent outside the connector");
        if (p.rhs != c.rhs) return fail("R2 side premises share the conclusion right side");
        seen.insert(zi);
      }
      if (seen != z) return fail("R2 side premises must cover the connector right side");
      break;
    }
  }
  for (std::size_t i = 0; i < d.premises.size(); ++i) {
    if (auto issue = issue_at(sigma, d.premises[i], path + "/" + std::to_string(i))) {
      return issue;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<DerivationIssue> find_derivation_issue(const AtomSet& sigma,
                                                     const Derivation& derivation) {
  return issue_at(sigma, derivation, "root");
}

bool check_derivation(const AtomSet& sigma, const Derivation& derivation) {
  return !find_derivation_issue(sigma, derivation).has_value();
}

bool semantic_oracle(const AtomSet& sigma, const GAtom& goal, std::size_t max_variables) {
  const VarSet universe = sigma.variables() | goal.lhs | goal.rhs;
  if (universe.size() > max_variables) {
    throw SizeError("semantic oracle limited to " + std::to_string(max_variables) +
                    " variables, got " + std::to_string(universe.size()));
  }
  const std::vector<Variable>& vars = universe.items();
  const std::size_t count = std::size_t{1} << vars.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    VarSet differing;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (mask & (std::size_t{1} << i)) differing.insert(vars[i]);
    }
    const Team team = two_row_team(universe, differing);
    bool satisfies_sigma = true;
    for (const GAtom& atom : sigma) {
      if (!check_gdep(team, atom)) {
        satisfies_sigma = false;
        break;
      }
    }
    if (satisfies_sigma && !check_gdep(team, goal)) return false;
  }
  return true;
}

AtomSet deductive_closure(const AtomSet& sigma, const VarSet& universe,
                          std::size_t max_universe) {
  if (universe.size() > max_universe) {
    throw SizeError("deductive closure limited to " + std::to_string(max_universe) +
                    " variables, got " + std::to_string(universe.size()));
  }
  const AtomSet sigma1 = normalize_set(sigma);
  const VarSet reach_universe = universe | sigma.variables();
  const std::vector<Variable>& vars = universe.items();
  AtomSet out;
  const std::size_t count = std::size_t{1} << vars.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    VarSet w;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (mask & (std::size_t{1} << i)) w.insert(vars[i]);
    }
    const VarSet reached = reach_set(sigma1, w, reach_universe);
    for (const Variable& v : reached) {
      if (universe.contains(v)) out.insert(GAtom{VarSet{v}, w});
    }
  }
  return out;
}

}  // namespace gdep
