#include "gdep/logic.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>

#include "gdep/errors.hpp"
#include "lexer.hpp"
#include "visit.hpp"

namespace gdep {

// --- Structure ----------------------------------------------------------

namespace {

bool valid_element_token(std::string_view token) {
  if (!valid_value_token(token)) return false;
  return token.find('(') == std::string_view::npos &&
         token.find(')') == std::string_view::npos;
}

}  // namespace

Structure::Structure(std::vector<Value> universe) : universe_(std::move(universe)) {
  if (universe_.empty()) throw FormatError("structure universe must be nonempty");
  for (const Value& element : universe_) {
    if (!valid_element_token(element)) {
      throw FormatError("invalid universe element token: '" + element + "'");
    }
    if (!element_index_.insert(element).second) {
      throw FormatError("duplicate universe element: '" + element + "'");
    }
  }
}

bool Structure::in_universe(const Value& element) const {
  return element_index_.count(element) > 0;
}

void Structure::add_relation(const std::string& name, std::size_t arity) {
  if (name.empty()) throw FormatError("relation name must be nonempty");
  if (!arities_.emplace(name, arity).second) {
    throw FormatError("duplicate relation: '" + name + "'");
  }
  tuples_[name];
}

void Structure::add_tuple(const std::string& name, std::vector<Value> tuple) {
  auto it = arities_.find(name);
  if (it == arities_.end()) throw DomainError("unknown relation: '" + name + "'");
  if (tuple.size() != it->second) {
    throw FormatError("relation '" + name + "' has arity " + std::to_string(it->second) +
                      ", got a tuple of " + std::to_string(tuple.size()));
  }
  for (const Value& element : tuple) {
    if (!in_universe(element)) {
      throw FormatError("tuple element '" + element + "' is outside the universe");
    }
  }
  tuples_[name].insert(std::move(tuple));
}

bool Structure::has_relation(const std::string& name) const {
  return arities_.count(name) > 0;
}

std::size_t Structure::arity(const std::string& name) const {
  auto it = arities_.find(name);
  if (it == arities_.end()) throw DomainError("unknown relation: '" + name + "'");
  return it->second;
}

bool Structure::holds(const std::string& name, const std::vector<Value>& tuple) const {
  auto it = tuples_.find(name);
  if (it == tuples_.end()) throw DomainError("unknown relation: '" + name + "'");
  return it->second.count(tuple) > 0;
}

Vocabulary Structure::vocabulary() const { return Vocabulary{arities_}; }

namespace {

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Tuples like `(a,b) (c,d)`; elements may be padded with spaces.
void parse_tuples(Structure& st, const std::string& relation, std::string_view text,
                  std::size_t line_no) {
  const auto fail = [&](const std::string& message) {
    return FormatError("line " + std::to_string(line_no) + ": " + message);
  };
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw fail("expected '(' to start a tuple");
    ++i;
    std::vector<Value> tuple;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
    } else {
      while (true) {
        std::size_t start = i;
        while (i < text.size() && text[i] != ',' && text[i] != ')') ++i;
        if (i >= text.size()) throw fail("unterminated tuple");
        const std::string element{trimmed(text.substr(start, i - start))};
        if (element.empty()) throw fail("empty tuple element");
        tuple.push_back(element);
        if (text[i] == ')') {
          ++i;
          break;
        }
        ++i;  // consume ','
      }
    }
    st.add_tuple(relation, std::move(tuple));
    skip_ws();
  }
}

}  // namespace

Structure load_structure(std::istream& in) {
  std::optional<Structure> st;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view content = trimmed(line);
    if (content.empty() || content.front() == '#') continue;
    const auto fail = [&](const std::string& message) {
      return FormatError("line " + std::to_string(line_no) + ": " + message);
    };
    std::istringstream ss{std::string(content)};
    std::string head;
    ss >> head;
    if (!st) {
      if (head != "universe:") throw fail("expected 'universe: tok tok ...' first");
      std::vector<Value> elements;
      std::string token;
      while (ss >> token) elements.push_back(token);
      try {
        st.emplace(std::move(elements));
      } catch (const FormatError& e) {
        throw fail(e.what());
      }
      continue;
    }
    if (head != "relation") throw fail("expected 'relation NAME/ARITY: (t,...) ...'");
    std::string decl;
    ss >> decl;
    if (decl.empty() || decl.back() != ':') throw fail("expected ':' after the relation arity");
    decl.pop_back();
    const std::size_t slash = decl.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == decl.size()) {
      throw fail("expected NAME/ARITY");
    }
    const std::string name = decl.substr(0, slash);
    const std::string arity_text = decl.substr(slash + 1);
    if (arity_text.find_first_not_of("0123456789") != std::string::npos) {
      throw fail("arity must be a non-negative integer");
    }
    try {
      st->add_relation(name, static_cast<std::size_t>(std::stoul(arity_text)));
      std::string rest;
      std::getline(ss, rest);
      parse_tuples(*st, name, rest, line_no);
    } catch (const FormatError& e) {
      const std::string what = e.what();
      if (what.rfind("line ", 0) == 0) throw;
      throw fail(what);
    }
  }
  if (!st) throw FormatError("empty structure file: a 'universe:' line is required");
  return *st;
}

Structure load_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open structure file: " + path);
  return load_structure(in);
}

// --- Formula ------------------------------------------------------------

Formula Formula::rel(bool positive, std::string name, std::vector<Variable> args) {
  return Formula(std::make_shared<const FormulaNode>(
      RelLiteral{positive, std::move(name), std::move(args)}));
}
Formula Formula::eq(bool positive, Variable left, Variable right) {
  return Formula(std::make_shared<const FormulaNode>(
      EqLiteral{positive, std::move(left), std::move(right)}));
}
Formula Formula::gatom(GAtom atom) {
  return Formula(std::make_shared<const FormulaNode>(std::move(atom)));
}
Formula Formula::fatom(FAtom atom) {
  return Formula(std::make_shared<const FormulaNode>(std::move(atom)));
}
Formula Formula::conj(Formula left, Formula right) {
  return Formula(std::make_shared<const FormulaNode>(And{std::move(left), std::move(right)}));
}
Formula Formula::disj(Formula left, Formula right) {
  return Formula(std::make_shared<const FormulaNode>(Or{std::move(left), std::move(right)}));
}
Formula Formula::exists(Variable var, Formula body) {
  return Formula(std::make_shared<const FormulaNode>(Exists{std::move(var), std::move(body)}));
}
Formula Formula::forall(Variable var, Formula body) {
  return Formula(std::make_shared<const FormulaNode>(Forall{std::move(var), std::move(body)}));
}

VarSet Formula::free_variables() const {
  return std::visit(
      detail::overloaded{
          [](const RelLiteral& lit) { return VarSet(lit.args); },
          [](const EqLiteral& lit) { return VarSet{lit.left, lit.right}; },
          [](const GAtom& atom) { return atom.lhs | atom.rhs; },
          [](const FAtom& atom) { return atom.lhs | atom.rhs; },
          [](const And& node) { return node.left.free_variables() | node.right.free_variables(); },
          [](const Or& node) { return node.left.free_variables() | node.right.free_variables(); },
          [](const Exists& node) { return node.body.free_variables().without(node.var); },
          [](const Forall& node) { return node.body.free_variables().without(node.var); },
      },
      static_cast<const FormulaNode::variant&>(node()));
}

bool Formula::has_dependence_atom() const {
  return std::visit(
      detail::overloaded{
          [](const RelLiteral&) { return false; },
          [](const EqLiteral&) { return false; },
          [](const GAtom&) { return true; },
          [](const FAtom&) { return true; },
          [](const And& node) {
            return node.left.has_dependence_atom() || node.right.has_dependence_atom();
          },
          [](const Or& node) {
            return node.left.has_dependence_atom() || node.right.has_dependence_atom();
          },
          [](const Exists& node) { return node.body.has_dependence_atom(); },
          [](const Forall& node) { return node.body.has_dependence_atom(); },
      },
      static_cast<const FormulaNode::variant&>(node()));
}

namespace {

// Precedence levels: `|` is 0, `&` is 1, quantifiers and atoms are 2.
int formula_level(const Formula& f) {
  return std::visit(detail::overloaded{
                        [](const Or&) { return 0; },
                        [](const And&) { return 1; },
                        [](const auto&) { return 2; },
                    },
                    static_cast<const FormulaNode::variant&>(f.node()));
}

std::string print_formula(const Formula& f, int min_level) {
  std::string raw = std::visit(
      detail::overloaded{
          [](const RelLiteral& lit) {
            std::string out = lit.positive ? "" : "~";
            out += lit.name;
            out += '(';
            for (std::size_t i = 0; i < lit.args.size(); ++i) {
              if (i) out += ',';
              out += lit.args[i].name;
            }
            out += ')';
            return out;
          },
          [](const EqLiteral& lit) {
            return lit.left.name + (lit.positive ? " = " : " != ") + lit.right.name;
          },
          [](const GAtom& atom) { return atom.str(); },
          [](const FAtom& atom) { return atom.str(); },
          [](const And& node) {
            return print_formula(node.left, 1) + " & " + print_formula(node.right, 1);
          },
          [](const Or& node) {
            return print_formula(node.left, 0) + " | " + print_formula(node.right, 0);
          },
          [](const Exists& node) {
            return "E " + node.var.name + ". " + print_formula(node.body, 2);
          },
          [](const Forall& node) {
            return "A " + node.var.name + ". " + print_formula(node.body, 2);
          },
      },
      static_cast<const FormulaNode::variant&>(f.node()));
  if (formula_level(f) < min_level) return "(" + raw + ")";
  return raw;
}

}  // namespace

std::string Formula::str() const { return print_formula(*this, 0); }

// --- Formula parser -----------------------------------------------------

namespace {

using detail::Lexer;
using detail::Tok;

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : lex_(text) {}

  Formula parse() {
    Formula f = disjunction();
    if (lex_.peek().kind != Tok::kEnd) {
      throw SyntaxError("trailing input after formula", lex_.peek().pos);
    }
    return f;
  }

 private:
  Formula disjunction() {
    Formula f = conjunction();
    while (lex_.peek().kind == Tok::kPipe) {
      lex_.next();
      f = Formula::disj(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unit();
    while (lex_.peek().kind == Tok::kAmp) {
      lex_.next();
      f = Formula::conj(std::move(f), unit());
    }
    return f;
  }

  Formula unit() {
    const detail::Token& t = lex_.peek();
    if (t.kind == Tok::kIdent && (t.text == "E" || t.text == "A") &&
        lex_.peek(1).kind == Tok::kIdent) {
      const bool existential = t.text == "E";
      lex_.next();
      Variable var{lex_.next().text};
      expect(Tok::kDot, "expected '.' after the quantified variable");
      Formula body = unit();
      return existential ? Formula::exists(std::move(var), std::move(body))
                         : Formula::forall(std::move(var), std::move(body));
    }
    if (t.kind == Tok::kLParen) {
      lex_.next();
      Formula f = disjunction();
      expect(Tok::kRParen, "expected ')'");
      return f;
    }
    return atom();
  }

  Formula atom() {
    const detail::Token t = lex_.peek();
    if (t.kind == Tok::kTilde) {
      lex_.next();
      const detail::Token& n = lex_.peek();
      const bool dependence =
          n.kind == Tok::kIdent && (n.text == "gdep" || n.text == "dep") &&
          lex_.peek(1).kind == Tok::kLParen;
      if (n.kind != Tok::kIdent || dependence || lex_.peek(1).kind != Tok::kLParen) {
        throw SyntaxError("negation only on literals", t.pos);
      }
      return relation(false);
    }
    if (t.kind != Tok::kIdent) {
      throw SyntaxError("expected a formula", t.pos);
    }
    if ((t.text == "gdep" || t.text == "dep") && lex_.peek(1).kind == Tok::kLParen) {
      return dependence_atom();
    }
    if (lex_.peek(1).kind == Tok::kLParen) return relation(true);
    if (lex_.peek(1).kind == Tok::kEq || lex_.peek(1).kind == Tok::kNeq) {
      Variable left{lex_.next().text};
      const bool positive = lex_.next().kind == Tok::kEq;
      const detail::Token right = lex_.next();
      if (right.kind != Tok::kIdent) {
        throw SyntaxError("expected a variable after the equality operator", right.pos);
      }
      return Formula::eq(positive, std::move(left), Variable{right.text});
    }
    throw SyntaxError("expected a formula", t.pos);
  }

  Formula relation(bool positive) {
    std::string name = lex_.next().text;
    expect(Tok::kLParen, "expected '(' after the relation name");
    std::vector<Variable> args;
    while (true) {
      const detail::Token arg = lex_.next();
      if (arg.kind != Tok::kIdent) {
        throw SyntaxError("expected a variable in the argument list", arg.pos);
      }
      args.push_back(Variable{arg.text});
      if (lex_.peek().kind == Tok::kComma) {
        lex_.next();
        continue;
      }
      break;
    }
    expect(Tok::kRParen, "expected ')'");
    return Formula::rel(positive, std::move(name), std::move(args));
  }

  Formula dependence_atom() {
    const bool gdep_kind = lex_.next().text == "gdep";
    expect(Tok::kLParen, "expected '('");
    VarSet lhs = var_list();
    expect(Tok::kSemi, "expected ';' between atom sides");
    VarSet rhs = var_list();
    expect(Tok::kRParen, "expected ')'");
    if (gdep_kind) return Formula::gatom(GAtom{std::move(lhs), std::move(rhs)});
    return Formula::fatom(FAtom{std::move(lhs), std::move(rhs)});
  }

  VarSet var_list() {
    std::vector<Variable> vars;
    while (lex_.peek().kind == Tok::kIdent) vars.push_back(Variable{lex_.next().text});
    return VarSet(std::move(vars));
  }

  void expect(Tok kind, const char* message) {
    if (lex_.peek().kind != kind) throw SyntaxError(message, lex_.peek().pos);
    lex_.next();
  }

  Lexer lex_;
};

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

// --- Evaluation ---------------------------------------------------------

namespace {

// Copy of `team` with column `x` set to `values[row]`, added if absent.
Team with_column(const Team& team, const Variable& x, const std::vector<Value>& values) {
  if (team.domain().contains(x)) {
    Team out(team.domain());
    const std::size_t cx = team.column_index(x);
    for (std::size_t r = 0; r < team.row_count(); ++r) {
      std::vector<Value> row = team.row(r);
      row[cx] = values[r];
      out.add_row(std::move(row));
    }
    return out;
  }
  Team out(team.domain() | VarSet{x});
  const std::size_t cx = out.column_index(x);
  for (std::size_t r = 0; r < team.row_count(); ++r) {
    const std::vector<Value>& old = team.row(r);
    std::vector<Value> row;
    row.reserve(old.size() + 1);
    row.insert(row.end(), old.begin(), old.begin() + static_cast<std::ptrdiff_t>(cx));
    row.push_back(values[r]);
    row.insert(row.end(), old.begin() + static_cast<std::ptrdiff_t>(cx), old.end());
    out.add_row(std::move(row));
  }
  return out;
}

class Evaluator {
 public:
  Evaluator(const Structure& structure, const EvalGuards& guards)
      : structure_(structure), guards_(guards) {}

  bool eval(const Team& team, const Formula& f) {
    return std::visit(
        detail::overloaded{
            [&](const RelLiteral& lit) { return rel_literal(team, lit); },
            [&](const EqLiteral& lit) { return eq_literal(team, lit); },
            [&](const GAtom& atom) { return check_gdep(team, atom); },
            [&](const FAtom& atom) { return check_fdep(team, atom); },
            [&](const And& node) {
              return eval(team, node.left) && eval(team, node.right);
            },
            [&](const Or& node) { return split(team, node); },
            [&](const Exists& node) { return exists(team, node); },
            [&](const Forall& node) { return forall(team, node); },
        },
        static_cast<const FormulaNode::variant&>(f.node()));
  }

 private:
  bool rel_literal(const Team& team, const RelLiteral& lit) {
    if (!structure_.has_relation(lit.name)) {
      throw DomainError("unknown relation: '" + lit.name + "'");
    }
    if (structure_.arity(lit.name) != lit.args.size()) {
      throw DomainError("relation '" + lit.name + "' has arity " +
                        std::to_string(structure_.arity(lit.name)) + ", used with " +
                        std::to_string(lit.args.size()) + " arguments");
    }
    std::vector<std::size_t> arg_cols;
    arg_cols.reserve(lit.args.size());
    for (const Variable& v : lit.args) arg_cols.push_back(team.column_index(v));
    std::vector<Value> tuple(lit.args.size());
    for (std::size_t r = 0; r < team.row_count(); ++r) {
      for (std::size_t i = 0; i < arg_cols.size(); ++i) tuple[i] = team.cell(r, arg_cols[i]);
      if (structure_.holds(lit.name, tuple) != lit.positive) return false;
    }
    return true;
  }

  bool eq_literal(const Team& team, const EqLiteral& lit) {
    const std::size_t cl = team.column_index(lit.left);
    const std::size_t cr = team.column_index(lit.right);
    for (std::size_t r = 0; r < team.row_count(); ++r) {
      if ((team.cell(r, cl) == team.cell(r, cr)) != lit.positive) return false;
    }
    return true;
  }

  // J u K = I with overlap allowed: each row goes left, right, or both.
  bool split(const Team& team, const Or& node) {
    const std::size_t n = team.row_count();
    if (n > guards_.max_or_rows) {
      throw SizeError("'|' split on a team of " + std::to_string(n) +
                      " rows exceeds the guard (" + std::to_string(guards_.max_or_rows) + ")");
    }
    std::vector<int> side(n, 0);
    while (true) {
      std::vector<std::size_t> left, right;
      for (std::size_t r = 0; r < n; ++r) {
        if (side[r] != 1) left.push_back(r);
        if (side[r] != 0) right.push_back(r);
      }
      if (eval(team.subteam(left), node.left) && eval(team.subteam(right), node.right)) {
        return true;
      }
      std::size_t r = 0;
      while (r < n && side[r] == 2) side[r++] = 0;
      if (r == n) return false;
      ++side[r];
    }
  }

  bool exists(const Team& team, const Exists& node) {
    const std::size_t n = team.row_count();
    const std::vector<Value>& universe = structure_.universe();
    std::size_t choices = 1;
    for (std::size_t r = 0; r < n; ++r) {
      if (choices > guards_.max_exists_choices / universe.size()) {
        throw SizeError("'E' search over " + std::to_string(universe.size()) + "^" +
                        std::to_string(n) + " choice functions exceeds the guard (" +
                        std::to_string(guards_.max_exists_choices) + ")");
      }
      choices *= universe.size();
    }
    std::vector<std::size_t> pick(n, 0);
    std::vector<Value> values(n);
    while (true) {
      for (std::size_t r = 0; r < n; ++r) values[r] = universe[pick[r]];
      if (eval(with_column(team, node.var, values), node.body)) return true;
      std::size_t r = 0;
      while (r < n && pick[r] + 1 == universe.size()) pick[r++] = 0;
      if (r == n) return false;
      ++pick[r];
    }
  }

  bool forall(const Team& team, const Forall& node) {
    const std::vector<Value>& universe = structure_.universe();
    const std::size_t rows = team.row_count() * universe.size();
    if (rows > guards_.max_team_rows) {
      throw SizeError("'A' expansion to " + std::to_string(rows) +
                      " rows exceeds the guard (" + std::to_string(guards_.max_team_rows) +
                      ")");
    }
    const VarSet new_domain = team.domain() | VarSet{node.var};
    Team expanded(new_domain);
    const bool existing = team.domain().contains(node.var);
    const std::size_t cx =
        existing ? team.column_index(node.var) : Team(new_domain).column_index(node.var);
    for (std::size_t r = 0; r < team.row_count(); ++r) {
      const std::vector<Value>& old = team.row(r);
      for (const Value& a : universe) {
        std::vector<Value> row;
        if (existing) {
          row = old;
          row[cx] = a;
        } else {
          row.reserve(old.size() + 1);
          row.insert(row.end(), old.begin(), old.begin() + static_cast<std::ptrdiff_t>(cx));
          row.push_back(a);
          row.insert(row.end(), old.begin() + static_cast<std::ptrdiff_t>(cx), old.end());
        }
        expanded.add_row(std::move(row));
      }
    }
    return eval(expanded, node.body);
  }

  const Structure& structure_;
  const EvalGuards& guards_;
};

void check_context(const EvalContext& ctx, const Formula& formula) {
  if (!ctx.structure) throw ContractError("evaluation requires a structure");
  const VarSet free = formula.free_variables();
  if (!free.subset_of(ctx.team.domain())) {
    const VarSet missing = free - ctx.team.domain();
    throw DomainError("free variables outside the team domain: " + missing.str());
  }
  for (std::size_t r = 0; r < ctx.team.row_count(); ++r) {
    for (std::size_t c = 0; c < ctx.team.width(); ++c) {
      if (!ctx.structure->in_universe(ctx.team.cell(r, c))) {
        throw DomainError("team value '" + ctx.team.cell(r, c) +
                          "' is outside the structure universe");
      }
    }
  }
}

}  // namespace

bool eval(const EvalContext& ctx, const Formula& formula) {
  check_context(ctx, formula);
  Evaluator evaluator(*ctx.structure, ctx.guards);
  return evaluator.eval(ctx.team, formula);
}

namespace {

using Env = std::map<Variable, Value>;

bool fo_eval(const Structure& structure, const Env& env, const Formula& f) {
  return std::visit(
      detail::overloaded{
          [&](const RelLiteral& lit) {
            if (!structure.has_relation(lit.name)) {
              throw DomainError("unknown relation: '" + lit.name + "'");
            }
            if (structure.arity(lit.name) != lit.args.size()) {
              throw DomainError("relation '" + lit.name + "' arity mismatch");
            }
            std::vector<Value> tuple;
            tuple.reserve(lit.args.size());
            for (const Variable& v : lit.args) tuple.push_back(env.at(v));
            return structure.holds(lit.name, tuple) == lit.positive;
          },
          [&](const EqLiteral& lit) {
            return (env.at(lit.left) == env.at(lit.right)) == lit.positive;
          },
          [&](const GAtom&) -> bool {
            throw ContractError("first-order oracle does not accept dependence atoms");
          },
          [&](const FAtom&) -> bool {
            throw ContractError("first-order oracle does not accept dependence atoms");
          },
          [&](const And& node) {
            return fo_eval(structure, env, node.left) && fo_eval(structure, env, node.right);
          },
          [&](const Or& node) {
            return fo_eval(structure, env, node.left) || fo_eval(structure, env, node.right);
          },
          [&](const Exists& node) {
            for (const Value& a : structure.universe()) {
              Env extended = env;
              extended[node.var] = a;
              if (fo_eval(structure, extended, node.body)) return true;
            }
            return false;
          },
          [&](const Forall& node) {
            for (const Value& a : structure.universe()) {
              Env extended = env;
              extended[node.var] = a;
              if (!fo_eval(structure, extended, node.body)) return false;
            }
            return true;
          },
      },
      static_cast<const FormulaNode::variant&>(f.node()));
}

}  // namespace

bool eval_first_order_oracle(const EvalContext& ctx, const Formula& formula) {
  if (formula.has_dependence_atom()) {
    throw ContractError("first-order oracle does not accept dependence atoms");
  }
  check_context(ctx, formula);
  const auto& vars = ctx.team.domain().items();
  for (std::size_t r = 0; r < ctx.team.row_count(); ++r) {
    Env env;
    for (std::size_t c = 0; c < vars.size(); ++c) env[vars[c]] = ctx.team.cell(r, c);
    if (!fo_eval(*ctx.structure, env, formula)) return false;
  }
  return true;
}

Team unit_team() {
  Team team;
  team.add_row({});
  return team;
}

}  // namespace gdep
