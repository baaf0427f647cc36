#include "gdep/atoms.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "gdep/errors.hpp"
#include "lexer.hpp"

namespace gdep {

namespace {

std::string sides_str(const char* kind, const VarSet& lhs, const VarSet& rhs) {
  std::string out = kind;
  out += '(';
  out += lhs.str();
  out += " ; ";
  out += rhs.str();
  out += ')';
  return out;
}

}  // namespace

std::string GAtom::str() const { return sides_str("gdep", lhs, rhs); }

std::string FAtom::str() const { return sides_str("dep", lhs, rhs); }

AtomSet::AtomSet(std::initializer_list<GAtom> init) : atoms_(init) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

AtomSet::AtomSet(std::vector<GAtom> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

bool AtomSet::contains(const GAtom& atom) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), atom);
}

void AtomSet::insert(const GAtom& atom) {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
  if (it == atoms_.end() || *it != atom) atoms_.insert(it, atom);
}

void AtomSet::merge(const AtomSet& other) {
  for (const GAtom& atom : other) insert(atom);
}

VarSet AtomSet::variables() const {
  VarSet all;
  for (const GAtom& atom : atoms_) all = all | atom.lhs | atom.rhs;
  return all;
}

namespace {

VarSet parse_var_list(detail::Lexer& lex) {
  std::vector<Variable> names;
  while (lex.peek().kind == detail::Tok::kIdent) names.push_back(Variable{lex.next().text});
  return VarSet(std::move(names));
}

}  // namespace

ParsedAtom parse_atom(std::string_view text) {
  detail::Lexer lex(text);
  const detail::Token kind = lex.next();
  if (kind.kind != detail::Tok::kIdent || (kind.text != "gdep" && kind.text != "dep")) {
    throw SyntaxError("expected 'gdep' or 'dep'", kind.pos);
  }
  if (lex.peek().kind != detail::Tok::kLParen) {
    throw SyntaxError("expected '(' after '" + kind.text + "'", lex.peek().pos);
  }
  lex.next();
  VarSet lhs = parse_var_list(lex);
  if (lex.peek().kind != detail::Tok::kSemi) {
    throw SyntaxError("expected ';' between atom sides", lex.peek().pos);
  }
  lex.next();
  VarSet rhs = parse_var_list(lex);
  if (lex.peek().kind != detail::Tok::kRParen) {
    throw SyntaxError("expected ')'", lex.peek().pos);
  }
  lex.next();
  if (lex.peek().kind != detail::Tok::kEnd) {
    throw SyntaxError("trailing input after atom", lex.peek().pos);
  }
  if (kind.text == "gdep") return GAtom{std::move(lhs), std::move(rhs)};
  return FAtom{std::move(lhs), std::move(rhs)};
}

GAtom parse_gatom(std::string_view text) {
  ParsedAtom atom = parse_atom(text);
  if (const GAtom* g = std::get_if<GAtom>(&atom)) return *g;
  throw SyntaxError("expected a gdep atom", 1);
}

std::string atom_str(const ParsedAtom& atom) {
  return std::visit([](const auto& a) { return a.str(); }, atom);
}

AtomSet normalize(const GAtom& atom) {
  AtomSet out;
  for (const Variable& v : atom.lhs) {
    out.insert(GAtom{VarSet{v}, atom.lhs.without(v) | atom.rhs});
  }
  return out;  // empty antecedent: universally valid, nothing to keep
}

AtomSet normalize_set(const AtomSet& atoms) {
  AtomSet out;
  for (const GAtom& atom : atoms) out.merge(normalize(atom));
  return out;
}

AtomSet load_gatoms(std::istream& in) {
  AtomSet out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      ParsedAtom atom = parse_atom(line);
      if (const GAtom* g = std::get_if<GAtom>(&atom)) {
        out.insert(*g);
      } else {
        throw FormatError("line " + std::to_string(line_no) +
                          ": expected a gdep atom, got a dep atom");
      }
    } catch (const SyntaxError& e) {
      throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

AtomSet load_gatoms_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open atom file: " + path);
  return load_gatoms(in);
}

}  // namespace gdep
