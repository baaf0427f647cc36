#include <sstream>

#include "doctest.h"
#include "gdep/atoms.hpp"
#include "gdep/errors.hpp"
#include "gdep/team.hpp"
#include "helpers.hpp"

using namespace gdep;
using namespace gdep::test;

TEST_CASE("parse_atom accepts both kinds and canonicalizes") {
  CHECK(std::get<GAtom>(parse_atom("gdep(x0 x1 ; y0)")) == GAtom{vars("x0 x1"), vars("y0")});
  CHECK(std::get<GAtom>(parse_atom("gdep( ; y)")) == GAtom{{}, vars("y")});
  CHECK(std::get<FAtom>(parse_atom("dep(Title ; Salary)")) ==
        FAtom{vars("Title"), vars("Salary")});
  CHECK(std::get<GAtom>(parse_atom("gdep( ; )")) == GAtom{{}, {}});

  // repeated names collapse, order is irrelevant
  CHECK(std::get<GAtom>(parse_atom("gdep(b a a ; c)")) == GAtom{vars("a b"), vars("c")});
}

TEST_CASE("parse_atom rejects malformed input with a position") {
  CHECK_THROWS_AS(parse_atom("gdep(x y)"), SyntaxError);
  CHECK_THROWS_AS(parse_atom("gdep(x ; y"), SyntaxError);
  CHECK_THROWS_AS(parse_atom("dp(x ; y)"), SyntaxError);
  CHECK_THROWS_AS(parse_atom("gdep(x ; y) extra"), SyntaxError);
  try {
    parse_atom("gdep(x , y)");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position == 8);
  }
  CHECK_THROWS_AS(parse_gatom("dep(x ; y)"), SyntaxError);
}

TEST_CASE("printing is canonical and parse round-trips") {
  CHECK(GAtom{vars("x0 x1"), vars("y0")}.str() == "gdep(x0 x1 ; y0)");
  CHECK(GAtom{{}, vars("y")}.str() == "gdep( ; y)");
  CHECK(GAtom{{}, {}}.str() == "gdep( ; )");
  CHECK(FAtom{vars("b a"), vars("c")}.str() == "dep(a b ; c)");

  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const GAtom atom{random_subset(rng, vars("a b c d")), random_subset(rng, vars("c d e"))};
    CHECK(std::get<GAtom>(parse_atom(atom.str())) == atom);
  }
}

TEST_CASE("normalize produces the single-antecedent components") {
  CHECK(normalize(GAtom{vars("x0 x1"), vars("y")}) ==
        AtomSet{GAtom{vars("x0"), vars("x1 y")}, GAtom{vars("x1"), vars("x0 y")}});
  CHECK(normalize(GAtom{vars("x0"), vars("y")}) == AtomSet{GAtom{vars("x0"), vars("y")}});
  CHECK(normalize(GAtom{{}, vars("y")}) == AtomSet{});

  SUBCASE("normalize_set unions the results") {
    CHECK(normalize_set(AtomSet{GAtom{vars("a b"), vars("c")}}) ==
          AtomSet{GAtom{vars("a"), vars("b c")}, GAtom{vars("b"), vars("a c")}});
    CHECK(normalize_set(AtomSet{}) == AtomSet{});
    CHECK(normalize_set(AtomSet{GAtom{vars("a"), {}}}) == AtomSet{GAtom{vars("a"), {}}});
  }

  SUBCASE("idempotent on single-antecedent atoms") {
    Rng rng(17);
    for (int i = 0; i < 50; ++i) {
      const AtomSet once = normalize(random_single_antecedent_atom(rng, vars("a b c d")));
      CHECK(normalize_set(once) == once);
    }
  }
}

TEST_CASE("normalization preserves team satisfaction") {
  // exhaustively over every two-row binary team on up to 5 variables
  const VarSet pool = vars("a b c d e");
  Rng rng(23);
  for (std::size_t n = 0; n <= 5; ++n) {
    std::vector<Variable> prefix(pool.items().begin(),
                                 pool.items().begin() + static_cast<std::ptrdiff_t>(n));
    const VarSet domain(std::move(prefix));
    const std::uint32_t masks = 1u << n;
    for (std::uint32_t m0 = 0; m0 < masks; ++m0) {
      for (std::uint32_t m1 = 0; m1 < masks; ++m1) {
        const Team team = binary_two_row_team(domain, m0, m1);
        const GAtom atom{random_subset(rng, domain), random_subset(rng, domain)};
        bool parts = true;
        for (const GAtom& part : normalize(atom)) {
          if (!check_gdep(team, part)) parts = false;
        }
        CHECK(check_gdep(team, atom) == parts);
      }
    }
  }
  // and on random larger teams
  for (int i = 0; i < 200; ++i) {
    const Team team = random_team(rng, vars("a b c d e"), 7, 3);
    const GAtom atom{random_subset(rng, team.domain()), random_subset(rng, team.domain())};
    bool parts = true;
    for (const GAtom& part : normalize(atom)) {
      if (!check_gdep(team, part)) parts = false;
    }
    CHECK(check_gdep(team, atom) == parts);
  }
}

TEST_CASE("atom files: one atom per line with comments") {
  std::istringstream in(
      "# premises\n"
      "\n"
      "gdep(a ; b)\n"
      "  gdep(b a ; c)\n"
      "gdep(a ; b)\n");
  const AtomSet atoms = load_gatoms(in);
  CHECK(atoms == AtomSet{GAtom{vars("a"), vars("b")}, GAtom{vars("a b"), vars("c")}});

  std::istringstream bad_kind("dep(a ; b)\n");
  CHECK_THROWS_AS(load_gatoms(bad_kind), FormatError);
  std::istringstream bad_syntax("gdep(a ; b) junk\n");
  CHECK_THROWS_WITH_AS(load_gatoms(bad_syntax),
                       doctest::Contains("line 1"), FormatError);
}
