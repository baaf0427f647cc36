// Command-line surface for the G-dependence toolkit.
//
// Exit codes: 0 = success / property holds, 1 = property fails,
// 2 = usage or input error, 3 = guard/size error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gdep/armstrong.hpp"
#include "gdep/atoms.hpp"
#include "gdep/calculus.hpp"
#include "gdep/errors.hpp"
#include "gdep/logic.hpp"
#include "gdep/team.hpp"
#include "gdep/translate.hpp"

namespace {

using namespace gdep;

int run_check(const std::string& team_path, const std::string& atom_text) {
  const Team team = load_team_file(team_path);
  const ParsedAtom atom = parse_atom(atom_text);
  const bool verdict = std::holds_alternative<GAtom>(atom)
                           ? check_gdep(team, std::get<GAtom>(atom))
                           : check_fdep(team, std::get<FAtom>(atom));
  std::cout << (verdict ? "true" : "false") << '\n';
  return verdict ? 0 : 1;
}

int run_entail(const std::string& sigma_path, const std::string& goal_text,
               const std::string& witness_path) {
  const AtomSet sigma = load_gatoms_file(sigma_path);
  const GAtom goal = parse_gatom(goal_text);
  const EntailmentResult result = entails(sigma, goal);
  std::cout << (result.derivable ? "derivable" : "not derivable") << '\n';
  if (!witness_path.empty()) {
    std::ofstream out(witness_path);
    if (!out) throw FormatError("cannot open witness file: " + witness_path);
    if (result.derivable) {
      out << derivation_to_text(*result.derivation);
    } else {
      emit_team(result.counter_model->team, out);
    }
  }
  return result.derivable ? 0 : 1;
}

VarSet parse_var_csv(const std::string& csv) {
  std::vector<Variable> vars;
  std::stringstream ss(csv);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (!valid_variable_name(name)) {
      throw FormatError("invalid variable name in --vars: '" + name + "'");
    }
    vars.emplace_back(name);
  }
  return VarSet(std::move(vars));
}

int run_armstrong(const std::string& sigma_path, const std::string& vars_csv,
                  const std::string& out_path, std::size_t bound) {
  ArmstrongSpec spec;
  spec.sigma = load_gatoms_file(sigma_path);
  spec.universe = vars_csv.empty() ? spec.sigma.variables() : parse_var_csv(vars_csv);
  spec.bound = bound;
  if (spec.universe.empty()) {
    throw FormatError("empty universe: pass --vars or a premise set with variables");
  }
  const Team team = build_armstrong(spec);
  if (out_path.empty()) {
    emit_team(team, std::cout);
  } else {
    std::ofstream out(out_path);
    if (!out) throw FormatError("cannot open output file: " + out_path);
    emit_team(team, out);
  }
  return 0;
}

int run_translate(const std::string& text, const std::string& to) {
  const RewriteDirection direction =
      to == "gdep" ? RewriteDirection::kToGdep : RewriteDirection::kToFdep;
  // A bare atom prints as an atom list; anything else is treated as a
  // formula.
  try {
    const ParsedAtom atom = parse_atom(text);
    if (const GAtom* g = std::get_if<GAtom>(&atom)) {
      if (direction == RewriteDirection::kToGdep) {
        std::cout << g->str() << '\n';
      } else {
        for (const FAtom& part : gdep_to_fdeps(*g)) std::cout << part.str() << '\n';
      }
    } else {
      const FAtom& f = std::get<FAtom>(atom);
      if (direction == RewriteDirection::kToFdep) {
        std::cout << f.str() << '\n';
      } else {
        for (const GAtom& part : fdep_to_gdeps(f)) std::cout << part.str() << '\n';
      }
    }
    return 0;
  } catch (const SyntaxError&) {
    // fall through to formula syntax
  }
  const Formula formula = parse_formula(text);
  std::cout << rewrite_formula(formula, direction).str() << '\n';
  return 0;
}

int run_eval(const std::string& structure_path, const std::string& formula_text,
             const std::string& team_path) {
  const Structure structure = load_structure_file(structure_path);
  const Formula formula = parse_formula(formula_text);
  EvalContext ctx;
  ctx.structure = &structure;
  ctx.team = team_path.empty() ? unit_team() : load_team_file(team_path);
  const bool verdict = eval(ctx, formula);
  std::cout << (verdict ? "true" : "false") << '\n';
  return verdict ? 0 : 1;
}

int run_mine(const std::string& team_path, long long max_lhs) {
  if (max_lhs < 1) throw FormatError("--max-lhs must be at least 1");
  const Team team = load_team_file(team_path);
  for (const GAtom& atom : mine_gdeps(team, static_cast<std::size_t>(max_lhs))) {
    std::cout << atom.str() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"G-dependence toolkit: atom checking, entailment, Armstrong relations,\n"
               "dependence translation, and team-semantics evaluation."};
  app.require_subcommand(1);

  std::string team_path, atom_text;
  auto* check = app.add_subcommand("check", "Check a gdep/dep atom on a CSV team");
  check->add_option("team", team_path, "CSV team file")->required();
  check->add_option("atom", atom_text, "atom, e.g. \"gdep(x0 ; y0)\"")->required();

  std::string sigma_path, goal_text, witness_path;
  auto* entail = app.add_subcommand("entail", "Decide whether premises derive a gdep atom");
  entail->add_option("sigma", sigma_path, "premise atom file (one gdep atom per line)")
      ->required();
  entail->add_option("goal", goal_text, "goal atom")->required();
  entail->add_option("--witness", witness_path,
                     "write the derivation (positive) or counter-model CSV (negative) here");

  std::string vars_csv, out_path;
  std::size_t bound = 12;
  auto* armstrong =
      app.add_subcommand("armstrong", "Build an Armstrong relation for a premise set");
  armstrong->add_option("sigma", sigma_path, "premise atom file")->required();
  armstrong->add_option("--vars", vars_csv,
                        "comma-separated universe (default: the premise variables)");
  armstrong->add_option("-o,--output", out_path, "output CSV file (default: stdout)");
  armstrong->add_option("--bound", bound, "maximum universe size");

  std::string translate_text, translate_to;
  auto* translate =
      app.add_subcommand("translate", "Rewrite atoms or formulas between gdep and dep");
  translate->add_option("input", translate_text, "atom or formula")->required();
  translate->add_option("--to", translate_to, "target atom kind")
      ->required()
      ->check(CLI::IsMember({"gdep", "fdep"}));

  std::string structure_path, formula_text, eval_team_path;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula over a finite structure");
  eval_cmd->add_option("structure", structure_path, "structure file")->required();
  eval_cmd->add_option("formula", formula_text, "formula text")->required();
  eval_cmd->add_option("--team", eval_team_path,
                       "CSV team (default: the one-row sentence team)");

  std::string mine_team_path;
  long long max_lhs = 1;
  auto* mine = app.add_subcommand("mine", "List minimal gdep atoms holding in a team");
  mine->add_option("team", mine_team_path, "CSV team file")->required();
  mine->add_option("--max-lhs", max_lhs, "maximum antecedent size (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(check)) return run_check(team_path, atom_text);
    if (app.got_subcommand(entail)) return run_entail(sigma_path, goal_text, witness_path);
    if (app.got_subcommand(armstrong)) {
      return run_armstrong(sigma_path, vars_csv, out_path, bound);
    }
    if (app.got_subcommand(translate)) return run_translate(translate_text, translate_to);
    if (app.got_subcommand(eval_cmd)) {
      return run_eval(structure_path, formula_text, eval_team_path);
    }
    if (app.got_subcommand(mine)) return run_mine(mine_team_path, max_lhs);
  } catch (const gdep::SizeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
