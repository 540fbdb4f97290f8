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

#include "cdp/formula.hpp"

#include <algorithm>
#include <cstdlib>

namespace cdp {

Literal Literal::from_dimacs(int value) {
  if (value == 0) throw std::invalid_argument("0 is not a literal");
  return Literal(static_cast<Var>(std::abs(value)), value < 0);
}

int Literal::to_dimacs() const {
  const int v = static_cast<int>(var());
  return negated() ? -v : v;
}

Clause::Clause(std::initializer_list<Literal> lits) : Clause(std::vector<Literal>(lits)) {}

Clause::Clause(std::vector<Literal> lits) : lits_(std::move(lits)) {
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

bool Clause::contains(Literal l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

bool Clause::is_tautology() const {
  // Complementary literals are adjacent after sorting.
  for (std::size_t i = 1; i < lits_.size(); ++i)
    if (lits_[i].var() == lits_[i - 1].var()) return true;
  return false;
}

Formula::Formula(Var num_vars, std::vector<Clause> clauses) : num_vars_(num_vars) {
  clauses_.reserve(clauses.size());
  for (auto& c : clauses) add_clause(std::move(c));
}

void Formula::add_clause(Clause c) {
  if (c.max_var() > num_vars_)
    throw std::invalid_argument("clause mentions variable " + std::to_string(c.max_var()) +
                                " but formula has only " + std::to_string(num_vars_));
  if (!c.empty() && c.literals().front().var() == 0)
    throw std::invalid_argument("variable index 0 is not allowed");
  clauses_.push_back(std::move(c));
}

bool Formula::has_empty_clause() const {
  return std::any_of(clauses_.begin(), clauses_.end(), [](const Clause& c) { return c.empty(); });
}

Formula assign(const Formula& f, Literal l) {
  Formula out(f.num_vars());
  const Literal falsified = ~l;
  for (const Clause& c : f) {
    if (c.contains(l)) continue;
    if (!c.contains(falsified)) {
      out.add_clause(c);
      continue;
    }
    std::vector<Literal> rest;
    rest.reserve(c.size() - 1);
    for (Literal x : c)
      if (x != falsified) rest.push_back(x);
    out.add_clause(Clause(std::move(rest)));
  }
  return out;
}

std::optional<Literal> find_unit(const Formula& f) {
  for (const Clause& c : f)
    if (c.size() == 1) return c.literals().front();
  return std::nullopt;
}

OccurrenceTable occurrence_counts(const Formula& f) {
  OccurrenceTable table(f.num_vars());
  for (const Clause& c : f)
    for (Literal l : c) table.add(l);
  return table;
}

Formula negate(const Formula& f) {
  Formula out(f.num_vars());
  for (const Clause& term : f) {
    std::vector<Literal> lits;
    lits.reserve(term.size());
    for (Literal l : term) lits.push_back(~l);
    out.add_clause(Clause(std::move(lits)));
  }
  return out;
}

} // namespace cdp
