/******************************************
Copyright (C) 2026 The cdpcount authors

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in
all copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
THE SOFTWARE.
***********************************************/

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cdp/formula.hpp"
#include "cdp/generator.hpp"

using namespace cdp;

namespace {
Formula f3() { return Formula(3, {Clause{pos(1), pos(2)}, Clause{neg(1), pos(3)}}); }
} // namespace

TEST_CASE("literal encoding", "[formula]") {
  const Literal l = Literal::from_dimacs(-7);
  CHECK(l.var() == 7);
  CHECK(l.negated());
  CHECK(~~l == l);
  CHECK((~l).to_dimacs() == 7);
  CHECK_THROWS_AS(Literal::from_dimacs(0), std::invalid_argument);
}

TEST_CASE("clause is a set of literals", "[formula]") {
  const Clause c{pos(2), pos(1), pos(2)};
  CHECK(c.size() == 2);
  CHECK_FALSE(c.is_tautology());
  CHECK(Clause{pos(1), neg(1), pos(2)}.is_tautology());
  CHECK(Clause{}.empty());
  CHECK(Clause{pos(1), pos(2)} == Clause{pos(2), pos(1)});
}

TEST_CASE("formula rejects variables beyond num_vars", "[formula]") {
  Formula f(2);
  CHECK_THROWS_AS(f.add_clause(Clause{pos(3)}), std::invalid_argument);
  f.add_clause(Clause{pos(1)});
  f.add_clause(Clause{pos(1)});
  CHECK(f.num_clauses() == 2); // duplicates kept
}

TEST_CASE("assign", "[formula]") {
  CHECK(assign(f3(), pos(1)) == Formula(3, {Clause{pos(3)}}));
  CHECK(assign(f3(), neg(1)) == Formula(3, {Clause{pos(2)}}));

  const Formula taut(2, {Clause{pos(1), neg(1), pos(2)}});
  CHECK(assign(taut, pos(1)).empty());
  CHECK(assign(taut, neg(1)).empty());
}

TEST_CASE("find_unit takes the first unit clause", "[formula]") {
  CHECK(find_unit(Formula(2, {Clause{pos(1)}, Clause{pos(1), pos(2)}})) == pos(1));
  CHECK_FALSE(find_unit(Formula(2, {Clause{pos(1), pos(2)}})).has_value());
  CHECK(find_unit(Formula(2, {Clause{neg(2)}, Clause{pos(1)}})) == neg(2));
}

TEST_CASE("occurrence_counts", "[formula]") {
  const Formula f(3, {Clause{pos(1), pos(2)}, Clause{neg(1), pos(3)}, Clause{neg(1), neg(2)}});
  const auto occ = occurrence_counts(f);
  CHECK(occ.pos(1) == 1);
  CHECK(occ.neg(1) == 2);
  CHECK(occ.pos(2) == 1);
  CHECK(occ.neg(2) == 1);
  CHECK(occ.pos(3) == 1);
  CHECK(occ.neg(3) == 0);

  const auto none = occurrence_counts(Formula(3));
  for (Var v = 1; v <= 3; ++v) CHECK(none.total(v) == 0);

  const auto taut = occurrence_counts(Formula(1, {Clause{pos(1), neg(1)}}));
  CHECK(taut.pos(1) == 1);
  CHECK(taut.neg(1) == 1);
}

TEST_CASE("assign properties on random formulas", "[formula][property]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Var n = 1 + rng() % 10;
    const auto m = static_cast<std::uint32_t>(rng() % 25);
    const Formula f = gen_indep({n, m, 0.2, 0.2, rng()});
    const auto occ = occurrence_counts(f);
    for (Var x = 1; x <= n; ++x) {
      if (occ.total(x) == 0) continue;
      const Formula f1 = assign(f, pos(x));
      const Formula f2 = assign(f, neg(x));
      // Clause counts follow from the occurrence table, tautologies included.
      REQUIRE(f1.num_clauses() == m - occ.pos(x));
      REQUIRE(f2.num_clauses() == m - occ.neg(x));
      // x no longer occurs; assigning again is a no-op.
      REQUIRE(occurrence_counts(f1).total(x) == 0);
      REQUIRE(assign(f1, pos(x)) == f1);
      for (const Clause& c : f1) {
        const auto lits = c.literals();
        REQUIRE(std::adjacent_find(lits.begin(), lits.end()) == lits.end());
      }
    }
  }
}

TEST_CASE("negate complements every literal", "[formula]") {
  const Formula dnf(3, {Clause{pos(1), neg(2)}, Clause{}});
  const Formula cnf = negate(dnf);
  CHECK(cnf[0] == Clause{neg(1), pos(2)});
  CHECK(cnf[1].empty());
  CHECK(negate(cnf) == dnf);
}
