#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "gdep/errors.hpp"
#include "gdep/team.hpp"
#include "helpers.hpp"

using namespace gdep;
using namespace gdep::test;

TEST_CASE("load_team reads the four-row example table") {
  const Team team = fig2_team();
  CHECK(team.domain() == vars("x0 x1 y0 y1"));
  CHECK(team.row_count() == 4);
  CHECK(team.value(0, "x0") == "0");
  CHECK(team.value(3, "x1") == "0");
  CHECK(team.value(1, "y0") == "1");
  CHECK(team.row(0) == team.row(2));
}

TEST_CASE("load_team edge cases") {
  SUBCASE("header-only file is the empty team") {
    const Team team = team_from_csv("a\n");
    CHECK(team.domain() == vars("a"));
    CHECK(team.row_count() == 0);
  }
  SUBCASE("missing header") { CHECK_THROWS_AS(team_from_csv(""), FormatError); }
  SUBCASE("duplicate header names") { CHECK_THROWS_AS(team_from_csv("a,a\n1,2\n"), FormatError); }
  SUBCASE("ragged rows") { CHECK_THROWS_AS(team_from_csv("a,b\n1\n"), FormatError); }
  SUBCASE("whitespace around a cell") {
    CHECK_THROWS_AS(team_from_csv("a,b\n1, 2\n"), FormatError);
  }
  SUBCASE("empty cell") { CHECK_THROWS_AS(team_from_csv("a,b\n1,\n"), FormatError); }
  SUBCASE("invalid header name") { CHECK_THROWS_AS(team_from_csv("a;b\n"), FormatError); }
  SUBCASE("crlf input is accepted") {
    const Team team = team_from_csv("a,b\r\n1,2\r\n");
    CHECK(team.row_count() == 1);
    CHECK(team.value(0, "b") == "2");
  }
}

TEST_CASE("emit then load round-trips exactly") {
  Rng rng(2024);
  for (int i = 0; i < 30; ++i) {
    const Team team = random_team(rng, vars("a b c zz"), 6, 4);
    std::istringstream back{team_to_csv(team)};
    CHECK(load_team(back) == team);
  }
  // header order is canonicalized on load, so values stay addressable by
  // name even when the header was unsorted
  const Team team = team_from_csv("b,a\n1,2\n");
  CHECK(team.value(0, "a") == "2");
  CHECK(team_to_csv(team) == "a,b\n2,1\n");
}

TEST_CASE("check_gdep on the example teams") {
  const Team fig2 = fig2_team();
  CHECK(check_gdep(fig2, vars("x0"), vars("y0")));
  CHECK(check_gdep(fig2, vars("x0 x1"), vars("y0")));
  CHECK(check_gdep(fig2, vars("x0 y0"), vars("y1")));
  CHECK_FALSE(check_gdep(fig2, vars("x0 x1"), vars("y1")));

  // empty antecedent is vacuously true
  CHECK(check_gdep(fig2, VarSet{}, vars("y1")));
  CHECK(check_gdep(fig2, VarSet{}, VarSet{}));

  const Team salary = salary_team();
  CHECK_FALSE(check_gdep(salary, vars("Title YearsOfExperience"), vars("Salary")));
  CHECK(check_gdep(salary, vars("Salary"), vars("Title")));

  CHECK_THROWS_AS(check_gdep(fig2, vars("w"), vars("y0")), DomainError);
  CHECK_THROWS_AS(check_gdep(fig2, vars("x0"), vars("w")), DomainError);
}

TEST_CASE("check_fdep on the example teams") {
  const Team salary = salary_team();
  CHECK(check_fdep(salary, vars("Title"), vars("Salary")));
  CHECK(check_fdep(salary, vars("Title YearsOfExperience"), vars("Salary")));
  CHECK_FALSE(check_fdep(salary, vars("Salary"), vars("Title YearsOfExperience")));

  CHECK(check_fdep(fig2_team(), vars("x0"), vars("y0")));

  // x = empty means the right side must be constant
  CHECK_FALSE(check_fdep(salary, VarSet{}, vars("Salary")));
  CHECK(check_fdep(team_from_csv("a,b\n1,2\n1,2\n"), VarSet{}, vars("a b")));

  CHECK_THROWS_AS(check_fdep(salary, vars("w"), vars("Salary")), DomainError);
}

TEST_CASE("reflexivity and constancy") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const Team team = random_team(rng, vars("a b c d"), 6, 3);
    const VarSet x = random_subset(rng, team.domain());
    CHECK(check_fdep(team, x, x));
    // gdep(v ; ) holds iff the column is constant
    for (const Variable& v : team.domain()) {
      bool constant = true;
      for (std::size_t r = 1; r < team.row_count(); ++r) {
        if (team.value(r, v) != team.value(0, v)) constant = false;
      }
      CHECK(check_gdep(team, VarSet{v}, VarSet{}) == constant);
    }
  }
}

TEST_CASE("atom checks are local, order-insensitive and duplication-stable") {
  Rng rng(11);
  for (int i = 0; i < 80; ++i) {
    const Team team = random_team(rng, vars("a b c d e f"), 7, 3);
    const VarSet x = random_subset(rng, vars("a b c"));
    const VarSet y = random_subset(rng, vars("b c d"));
    const bool g = check_gdep(team, x, y);
    const bool f = check_fdep(team, x, y);

    // locality: columns outside x and y do not matter
    if (!(x | y).empty()) {
      const Team projected = project(team, x | y);
      CHECK(check_gdep(projected, x, y) == g);
      CHECK(check_fdep(projected, x, y) == f);
    }

    // downward closure: deleting rows cannot break a holding atom
    if (g || f) {
      std::vector<std::size_t> keep;
      for (std::size_t r = 0; r < team.row_count(); ++r) {
        if (rng.flip()) keep.push_back(r);
      }
      const Team sub = team.subteam(keep);
      if (g) CHECK(check_gdep(sub, x, y));
      if (f) CHECK(check_fdep(sub, x, y));
    }

    // duplicating a row changes nothing
    if (team.row_count() > 0) {
      std::vector<std::size_t> indices(team.row_count());
      for (std::size_t r = 0; r < team.row_count(); ++r) indices[r] = r;
      indices.push_back(rng.below(team.row_count()));
      const Team dup = team.subteam(indices);
      CHECK(check_gdep(dup, x, y) == g);
      CHECK(check_fdep(dup, x, y) == f);
    }

    // permuting rows changes nothing
    {
      std::vector<std::size_t> indices(team.row_count());
      for (std::size_t r = 0; r < team.row_count(); ++r) indices[r] = r;
      std::shuffle(indices.begin(), indices.end(), rng.engine);
      const Team shuffled = team.subteam(indices);
      CHECK(check_gdep(shuffled, x, y) == g);
      CHECK(check_fdep(shuffled, x, y) == f);
    }
  }
}

TEST_CASE("single-antecedent split and right-side monotonicity") {
  Rng rng(13);
  for (int i = 0; i < 80; ++i) {
    const Team team = random_team(rng, vars("a b c d"), 6, 2);
    const VarSet x = random_subset(rng, team.domain());
    const VarSet y = random_subset(rng, team.domain());
    const bool whole = check_gdep(team, x, y);

    bool all_parts = true;
    for (const Variable& xi : x) {
      if (!check_gdep(team, VarSet{xi}, x.without(xi) | y)) all_parts = false;
    }
    CHECK(whole == all_parts);

    if (whole) {
      const VarSet z = random_subset(rng, team.domain());
      CHECK(check_gdep(team, x, y | z));
    }
  }
}

TEST_CASE("mine_gdeps lists minimal holding atoms") {
  SUBCASE("four-row example, antecedents of size one") {
    const Team fig2 = fig2_team();
    const std::vector<GAtom> atoms = mine_gdeps(fig2, 1);
    const auto has = [&](const GAtom& a) {
      return std::find(atoms.begin(), atoms.end(), a) != atoms.end();
    };
    CHECK(has(GAtom{vars("x0"), vars("y0")}));
    CHECK_FALSE(has(GAtom{vars("x0"), VarSet{}}));

    for (const GAtom& atom : atoms) {
      CHECK(atom.lhs.size() == 1);
      CHECK((atom.lhs & atom.rhs).empty());
      CHECK(check_gdep(fig2, atom.lhs, atom.rhs));
      // minimality: no proper subset of the right side works
      for (const Variable& v : atom.rhs) {
        CHECK_FALSE(check_gdep(fig2, atom.lhs, atom.rhs.without(v)));
      }
    }
  }
  SUBCASE("salary table highlights the asymmetry") {
    const std::vector<GAtom> atoms = mine_gdeps(salary_team(), 1);
    const auto has = [&](const GAtom& a) {
      return std::find(atoms.begin(), atoms.end(), a) != atoms.end();
    };
    CHECK(has(GAtom{vars("Salary"), vars("Title")}));
    CHECK_FALSE(has(GAtom{vars("YearsOfExperience"), vars("Salary")}));
  }
  SUBCASE("empty and single-row teams make every antecedent constant") {
    for (const char* csv : {"a,b\n", "a,b\n1,2\n"}) {
      const std::vector<GAtom> atoms = mine_gdeps(team_from_csv(csv), 2);
      const std::vector<GAtom> expected = {
          {vars("a"), {}}, {vars("a b"), {}}, {vars("b"), {}}};
      CHECK(atoms == expected);
    }
  }
  SUBCASE("bound below one is rejected") {
    CHECK_THROWS_AS(mine_gdeps(fig2_team(), 0), ContractError);
  }
}
