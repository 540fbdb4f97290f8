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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>

#include <gmpxx.h>

#include "cdp/formula.hpp"

namespace cdp {

using ModelCount = mpz_class;
using Probability = mpq_class;

enum class Heuristic {
  max_occurrence_then_minmax, // max pos+neg, ties by max min(pos,neg)
  max_occurrence_only,        // max pos+neg
  first_variable,             // smallest occurring index
};

std::string_view to_string(Heuristic h);
Heuristic heuristic_from_string(std::string_view name);

struct EngineConfig {
  // Formulas with fewer clauses than this go to inclusion-exclusion.
  std::uint32_t fallback_threshold = 6;
  Heuristic heuristic = Heuristic::max_occurrence_then_minmax;
  bool fallback_enabled = true;
  bool unit_rule = true;
};

struct CountStats {
  std::uint64_t recursive_calls = 0;
  std::uint64_t splits = 0;
  std::uint64_t unit_propagations = 0;
  std::uint64_t fallback_invocations = 0;
  // Max over time of the summed clause counts of all non-terminal formulas
  // on the recursion stack.
  std::uint64_t peak_stored_clauses = 0;
  std::uint64_t peak_depth = 0;
};

struct CountResult {
  ModelCount count;
  CountStats stats;
};

// Raised when a formula mentions more live variables than the budget allows.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class InconsistentKnowledgeBase : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Exact number of models of the CNF `f` over `n` variables. Every variable
// of `f` must be <= n; variables that never occur are free.
CountResult count_models(const Formula& f, Var n, const EngineConfig& cfg = {});
inline CountResult count_models(const Formula& f, const EngineConfig& cfg = {}) {
  return count_models(f, f.num_vars(), cfg);
}

// Split variable under `h`; depends only on the occurrence table. Throws
// InvariantError if no variable occurs.
Var choose_split_variable(const Formula& f, Heuristic h = Heuristic::max_occurrence_then_minmax);
Var choose_split_variable(const OccurrenceTable& occ, Heuristic h);

// Number of assignments over n variables falsifying every clause of `clauses`.
ModelCount falsifying_count(std::span<const Clause> clauses, Var n);

// Model count by inclusion-exclusion over the falsifier sets of the clauses.
// Exponential in the number of distinct non-tautological clauses.
ModelCount count_small_ie(const Formula& f, Var n);

CountResult count_models_dnf(const DnfFormula& f, Var n, const EngineConfig& cfg = {});

// mu(kb + s) / mu(kb). Throws InconsistentKnowledgeBase when mu(kb) = 0 and
// std::invalid_argument when the variable universes differ.
Probability degree_of_belief(const Formula& kb, const Formula& s, const EngineConfig& cfg = {});

} // namespace cdp
