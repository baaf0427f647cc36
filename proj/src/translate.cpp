#include "gdep/translate.hpp"

#include <algorithm>
#include <optional>

#include "visit.hpp"

namespace gdep {

AtomSet fdep_to_gdeps(const FAtom& atom) {
  AtomSet out;
  for (const Variable& y : atom.rhs) out.insert(GAtom{VarSet{y}, atom.lhs});
  return out;
}

std::vector<FAtom> gdep_to_fdeps(const GAtom& atom) {
  std::vector<FAtom> out;
  out.reserve(atom.lhs.size());
  for (const Variable& x : atom.lhs) {
    out.push_back(FAtom{atom.lhs.without(x) | atom.rhs, VarSet{x}});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// nullopt stands for the empty conjunction (always true); `vars` are the
// variables of the atom it came from, usable for an identity literal.
struct Rewritten {
  std::optional<Formula> formula;
  VarSet vars;
};

Formula materialize(const Rewritten& r, const VarSet& scope, RewriteDirection direction) {
  if (r.formula) return *r.formula;
  const VarSet& pool = r.vars.empty() ? scope : r.vars;
  if (!pool.empty()) {
    const Variable& v = pool.items().front();
    return Formula::eq(true, v, v);
  }
  // No variable anywhere in scope: fall back to the empty atom of the
  // target kind, which is universally true.
  if (direction == RewriteDirection::kToGdep) return Formula::gatom(GAtom{});
  return Formula::fatom(FAtom{});
}

Formula conjunction_of(std::vector<Formula> parts) {
  Formula out = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out = Formula::conj(std::move(out), std::move(parts[i]));
  }
  return out;
}

Rewritten rewrite(const Formula& f, RewriteDirection direction, const VarSet& scope) {
  return std::visit(
      detail::overloaded{
          [&](const RelLiteral&) { return Rewritten{f, {}}; },
          [&](const EqLiteral&) { return Rewritten{f, {}}; },
          [&](const GAtom& atom) {
            if (direction != RewriteDirection::kToFdep) return Rewritten{f, {}};
            const std::vector<FAtom> parts = gdep_to_fdeps(atom);
            if (parts.empty()) return Rewritten{std::nullopt, atom.lhs | atom.rhs};
            std::vector<Formula> formulas;
            formulas.reserve(parts.size());
            for (const FAtom& part : parts) formulas.push_back(Formula::fatom(part));
            return Rewritten{conjunction_of(std::move(formulas)), {}};
          },
          [&](const FAtom& atom) {
            if (direction != RewriteDirection::kToGdep) return Rewritten{f, {}};
            const AtomSet parts = fdep_to_gdeps(atom);
            if (parts.empty()) return Rewritten{std::nullopt, atom.lhs | atom.rhs};
            std::vector<Formula> formulas;
            formulas.reserve(parts.size());
            for (const GAtom& part : parts) formulas.push_back(Formula::gatom(part));
            return Rewritten{conjunction_of(std::move(formulas)), {}};
          },
          [&](const And& node) {
            Rewritten left = rewrite(node.left, direction, scope);
            Rewritten right = rewrite(node.right, direction, scope);
            if (!left.formula && !right.formula) {
              return Rewritten{std::nullopt, left.vars | right.vars};
            }
            if (!left.formula) return right;
            if (!right.formula) return left;
            return Rewritten{Formula::conj(std::move(*left.formula), std::move(*right.formula)),
                             {}};
          },
          [&](const Or& node) {
            Formula left = materialize(rewrite(node.left, direction, scope), scope, direction);
            Formula right = materialize(rewrite(node.right, direction, scope), scope, direction);
            return Rewritten{Formula::disj(std::move(left), std::move(right)), {}};
          },
          [&](const Exists& node) {
            VarSet inner = scope | VarSet{node.var};
            Formula body = materialize(rewrite(node.body, direction, inner), inner, direction);
            return Rewritten{Formula::exists(node.var, std::move(body)), {}};
          },
          [&](const Forall& node) {
            VarSet inner = scope | VarSet{node.var};
            Formula body = materialize(rewrite(node.body, direction, inner), inner, direction);
            return Rewritten{Formula::forall(node.var, std::move(body)), {}};
          },
      },
      static_cast<const FormulaNode::variant&>(f.node()));
}

}  // namespace

Formula rewrite_formula(const Formula& formula, RewriteDirection direction) {
  const VarSet scope = formula.free_variables();
  return materialize(rewrite(formula, direction, scope), scope, direction);
}

}  // namespace gdep
