#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gdep/atoms.hpp"
#include "gdep/team.hpp"
#include "gdep/variables.hpp"

namespace gdep {

// Relation names with their arities.
struct Vocabulary {
  std::map<std::string, std::size_t> arities;
};

// A finite relational structure: a nonempty universe of element tokens
// plus an interpretation for each relation name.
class Structure {
 public:
  Structure() = default;
  explicit Structure(std::vector<Value> universe);

  const std::vector<Value>& universe() const { return universe_; }
  bool in_universe(const Value& element) const;

  void add_relation(const std::string& name, std::size_t arity);
  void add_tuple(const std::string& name, std::vector<Value> tuple);

  bool has_relation(const std::string& name) const;
  std::size_t arity(const std::string& name) const;
  bool holds(const std::string& name, const std::vector<Value>& tuple) const;

  Vocabulary vocabulary() const;

 private:
  std::vector<Value> universe_;  // file order, distinct
  std::set<Value> element_index_;
  std::map<std::string, std::size_t> arities_;
  std::map<std::string, std::set<std::vector<Value>>> tuples_;
};

// Structure file format, UTF-8 lines with `#` comments:
//   universe: tok tok ...
//   relation NAME/ARITY: (t,...) (t,...) ...
Structure load_structure(std::istream& in);
Structure load_structure_file(const std::string& path);

// --- Formula AST ------------------------------------------------------
//
// Negation appears only on relational and equality literals; the
// connectives are conjunction, disjunction and the two quantifiers.

struct RelLiteral {
  bool positive = true;
  std::string name;
  std::vector<Variable> args;
};

struct EqLiteral {
  bool positive = true;
  Variable left;
  Variable right;
};

struct FormulaNode;

class Formula {
 public:
  static Formula rel(bool positive, std::string name, std::vector<Variable> args);
  static Formula eq(bool positive, Variable left, Variable right);
  static Formula gatom(GAtom atom);
  static Formula fatom(FAtom atom);
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);
  static Formula exists(Variable var, Formula body);
  static Formula forall(Variable var, Formula body);

  const FormulaNode& node() const { return *node_; }

  VarSet free_variables() const;
  bool has_dependence_atom() const;
  std::string str() const;

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const FormulaNode> node_;
};

struct And {
  Formula left, right;
};
struct Or {
  Formula left, right;
};
struct Exists {
  Variable var;
  Formula body;
};
struct Forall {
  Variable var;
  Formula body;
};

struct FormulaNode
    : std::variant<RelLiteral, EqLiteral, GAtom, FAtom, And, Or, Exists, Forall> {
  using variant::variant;
};

// Grammar (loosest to tightest): `|`, `&`, then quantifiers/atoms.
//   formula := disj
//   disj    := conj ("|" conj)*
//   conj    := unit ("&" unit)*
//   unit    := "E" var "." unit | "A" var "." unit | "(" formula ")" | atom
//   atom    := "~"? name "(" var ("," var)* ")" | "~"? var ("="|"!=") var
//            | "gdep(" var* ";" var* ")" | "dep(" var* ";" var* ")"
// `~` is rejected on anything but relational/equality atoms.
Formula parse_formula(std::string_view text);

// --- Team-semantics evaluation ----------------------------------------

struct EvalGuards {
  std::size_t max_or_rows = 10;                // team size cap at a split
  std::size_t max_exists_choices = 1'000'000;  // |M|^|I| cap at an exists
  std::size_t max_team_rows = 100'000;         // cap on forall expansion
};

struct EvalContext {
  const Structure* structure = nullptr;
  Team team;
  EvalGuards guards;
};

// Team-semantics satisfaction: dependence atoms check the whole team,
// literals must hold row-by-row, `|` searches covers J u K = I (overlap
// allowed), `E x` searches per-row choice functions I -> M, and `A x`
// expands the team to I x M. Deterministic backtracking, first witness
// wins. Throws DomainError on free variables outside the team domain or
// team values outside the universe, SizeError on guard blow-up.
bool eval(const EvalContext& ctx, const Formula& formula);

// Row-by-row first-order evaluation; defined only for formulas without
// dependence atoms (ContractError otherwise). Serves as the flatness
// oracle for eval.
bool eval_first_order_oracle(const EvalContext& ctx, const Formula& formula);

// The single-empty-assignment team used to evaluate sentences.
Team unit_team();

}  // namespace gdep
