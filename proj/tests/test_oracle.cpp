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

#include "cdp/oracle.hpp"
#include "test_support.hpp"

using namespace cdp;

TEST_CASE("brute_force_count", "[oracle]") {
  CHECK(brute_force_count(Formula(4), 4) == 16);
  CHECK(brute_force_count(Formula(1, {Clause{pos(1)}, Clause{neg(1)}}), 1) == 0);
  // (x1 or x2) and (not x1 or x3): x1=0 needs x2 (x3 free): 2; x1=1 needs x3 (x2 free): 2.
  CHECK(brute_force_count(Formula(3, {Clause{pos(1), pos(2)}, Clause{neg(1), pos(3)}}), 3) == 4);
  CHECK(brute_force_count(Formula(0), 0) == 1);
  CHECK(brute_force_count(Formula(0, {Clause{}}), 0) == 0);
}

TEST_CASE("brute_force_count_dnf", "[oracle]") {
  CHECK(brute_force_count_dnf(DnfFormula(2, {Clause{pos(1)}}), 2) == 2);
  CHECK(brute_force_count_dnf(DnfFormula(3), 3) == 0);
  // x1 and not x2 covers (1,0); x2 covers (0,1), (1,1).
  CHECK(brute_force_count_dnf(DnfFormula(2, {Clause{pos(1), neg(2)}, Clause{pos(2)}}), 2) == 3);
  CHECK(brute_force_count_dnf(DnfFormula(2, {Clause{}}), 2) == 4);
}

TEST_CASE("oracle refuses large formulas", "[oracle]") {
  CHECK_THROWS_AS(brute_force_count(Formula(31), 31), OracleLimitExceeded);
  CHECK_THROWS_AS(brute_force_count_dnf(Formula(12), 12, OracleLimit{10}), OracleLimitExceeded);
}

TEST_CASE("De Morgan duality between the two oracles", "[oracle][property]") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 300; ++i) {
    const Formula f = testing::random_formula(rng, 16, 40);
    const Var n = f.num_vars();
    REQUIRE(brute_force_count(f, n) + brute_force_count_dnf(negate(f), n) == (ModelCount(1) << n));
  }
}
