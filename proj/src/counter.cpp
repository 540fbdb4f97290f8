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

#include "cdp/counter.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>

namespace cdp {

std::string_view to_string(Heuristic h) {
  switch (h) {
  case Heuristic::max_occurrence_then_minmax: return "max-occ-minmax";
  case Heuristic::max_occurrence_only: return "max-occ";
  case Heuristic::first_variable: return "first";
  }
  return "?";
}

Heuristic heuristic_from_string(std::string_view name) {
  for (auto h : {Heuristic::max_occurrence_then_minmax, Heuristic::max_occurrence_only,
                 Heuristic::first_variable})
    if (to_string(h) == name) return h;
  throw std::invalid_argument("unknown heuristic '" + std::string(name) + "'");
}

namespace {

ModelCount pow2(Var e) {
  ModelCount r;
  mpz_setbit(r.get_mpz_t(), e);
  return r;
}

struct Candidate {
  Var var;
  std::uint32_t pos;
  std::uint32_t neg;
};

// Strict preference of a over b. The final tie-break on index makes the
// choice a function of the occurrence counts alone.
bool prefer(const Candidate& a, const Candidate& b, Heuristic h) {
  if (h != Heuristic::first_variable) {
    const auto ta = a.pos + a.neg, tb = b.pos + b.neg;
    if (ta != tb) return ta > tb;
    if (h == Heuristic::max_occurrence_then_minmax) {
      const auto ma = std::min(a.pos, a.neg), mb = std::min(b.pos, b.neg);
      if (ma != mb) return ma > mb;
    }
  }
  return a.var < b.var;
}

// Clauses as sorted literal codes in one flat buffer. The buffers only grow;
// nlits and nclauses delimit the live prefix.
struct FlatFormula {
  std::vector<std::uint32_t> lits;
  std::vector<std::uint32_t> ends;
  std::uint32_t nlits = 0;
  std::uint32_t nclauses = 0;

  std::size_t size() const { return nclauses; }
  bool empty() const { return nclauses == 0; }
  std::span<const std::uint32_t> clause(std::size_t i) const {
    const std::uint32_t b = i == 0 ? 0 : ends[i - 1];
    return {lits.data() + b, ends[i] - b};
  }
  // A child never holds more than its parent.
  void fit_child_of(const FlatFormula& parent) {
    if (lits.size() < parent.nlits) lits.resize(parent.nlits);
    if (ends.size() < parent.nclauses) ends.resize(parent.nclauses);
  }
};

FlatFormula flatten(const Formula& f) {
  FlatFormula out;
  for (const Clause& c : f) {
    for (Literal l : c) out.lits.push_back(l.code());
    out.ends.push_back(static_cast<std::uint32_t>(out.lits.size()));
  }
  out.nlits = static_cast<std::uint32_t>(out.lits.size());
  out.nclauses = static_cast<std::uint32_t>(out.ends.size());
  return out;
}

Var max_var_of(const Formula& f) {
  Var v = 0;
  for (const Clause& c : f) v = std::max(v, c.max_var());
  return v;
}

class Engine {
public:
  Engine(Var max_var, const EngineConfig& cfg) : cfg_(cfg), pos_(max_var + 1, 0), neg_(max_var + 1, 0) {
    touched_.reserve(max_var + 1);
  }

  ModelCount run(const Formula& f, Var n) {
    levels_.assign(static_cast<std::size_t>(n) + 2, FlatFormula{});
    levels_[0] = flatten(f);
    stats_.recursive_calls = 1;
    stats_.peak_depth = 1;
    terms_.assign(static_cast<std::size_t>(n) + 1, 0);
    ModelCount total;
    if (levels_[0].empty()) {
      add_term(n, 1);
    } else if (!f.has_empty_clause()) {
      for (std::uint32_t i = 0; i < levels_[0].nlits; ++i) note(levels_[0].lits[i]);
      solve(0, n);
    }
    flush(total);
    return total;
  }

  ModelCount count_ie(const FlatFormula& f, Var n) {
    terms_.assign(static_cast<std::size_t>(n) + 1, 0);
    inclusion_exclusion(f, n);
    ModelCount total;
    flush(total);
    return total;
  }

  const CountStats& stats() const { return stats_; }

private:
  enum class Child { empty, conflict, open };

  // Adds the models of levels_[depth] over n variables. On entry pos_/neg_
  // hold the occurrence counts of that formula.
  void solve(std::size_t depth, Var n) {
    const FlatFormula& f = levels_[depth];
    const std::size_t m = f.size();
    stored_ += m;
    stats_.peak_stored_clauses = std::max(stats_.peak_stored_clauses, stored_);

    if (cfg_.fallback_enabled && m < cfg_.fallback_threshold) {
      clear_occurrences();
      ++stats_.fallback_invocations;
      inclusion_exclusion(f, n);
    } else if (auto unit = cfg_.unit_rule ? find_unit(f) : std::nullopt) {
      clear_occurrences();
      ++stats_.unit_propagations;
      descend(depth, *unit, n);
    } else {
      const Var x = pick();
      ++stats_.splits;
      descend(depth, Literal(x, false).code(), n);
      descend(depth, Literal(x, true).code(), n);
    }
    stored_ -= m;
  }

  // One recursive call on the formula with `lit` made true.
  void descend(std::size_t depth, std::uint32_t lit, Var n) {
    if (n == 0) throw InvariantError("more live variables than the variable budget");
    ++stats_.recursive_calls;
    stats_.peak_depth = std::max<std::uint64_t>(stats_.peak_depth, depth + 2);
    switch (build_child(levels_[depth], lit, levels_[depth + 1])) {
    case Child::conflict: return;
    case Child::empty: add_term(n - 1, 1); return;
    case Child::open: solve(depth + 1, n - 1); return;
    }
  }

  static std::optional<std::uint32_t> find_unit(const FlatFormula& f) {
    std::uint32_t begin = 0;
    for (std::uint32_t c = 0; c < f.nclauses; ++c) {
      if (f.ends[c] - begin == 1) return f.lits[begin];
      begin = f.ends[c];
    }
    return std::nullopt;
  }

  // Writes src with `lit` true into dst and leaves dst's occurrence counts
  // in pos_/neg_ (cleared again on conflict).
  Child build_child(const FlatFormula& src, std::uint32_t lit, FlatFormula& dst) {
    dst.fit_child_of(src);
    const std::uint32_t falsified = lit ^ 1u;
    const std::uint32_t* in = src.lits.data();
    std::uint32_t* out = dst.lits.data();
    std::uint32_t w = 0, nc = 0, begin = 0;
    for (std::uint32_t c = 0; c < src.nclauses; ++c) {
      const std::uint32_t end = src.ends[c];
      const std::uint32_t mark = w;
      std::uint32_t i = begin;
      for (; i < end; ++i) {
        const std::uint32_t l = in[i];
        if (l == lit) break;
        out[w] = l;
        w += (l != falsified);
      }
      begin = end;
      if (i < end) { // satisfied
        w = mark;
        continue;
      }
      if (w == mark) {
        clear_occurrences();
        dst.nlits = dst.nclauses = 0;
        return Child::conflict;
      }
      for (std::uint32_t k = mark; k < w; ++k) note(out[k]);
      dst.ends[nc++] = w;
    }
    dst.nlits = w;
    dst.nclauses = nc;
    return nc == 0 ? Child::empty : Child::open;
  }

  void note(std::uint32_t l) {
    const Var v = l >> 1;
    if (pos_[v] == 0 && neg_[v] == 0) touched_.push_back(v);
    ++((l & 1u) ? neg_ : pos_)[v];
  }

  void clear_occurrences() {
    for (const Var v : touched_) pos_[v] = neg_[v] = 0;
    touched_.clear();
  }

  Var pick() {
    Candidate best{touched_.front(), pos_[touched_.front()], neg_[touched_.front()]};
    for (const Var v : touched_) {
      const Candidate c{v, pos_[v], neg_[v]};
      if (prefer(c, best, cfg_.heuristic)) best = c;
    }
    clear_occurrences();
    return best.var;
  }

  // The count is kept as sum_e terms_[e] * 2^e; a bucket spills into
  // spill_ before it can overflow.
  void add_term(Var e, std::int64_t c) {
    std::int64_t& t = terms_[e];
    t += c;
    if (t > kSpillAt || t < -kSpillAt) {
      spill(e, t);
      t = 0;
    }
  }

  void spill(Var e, std::int64_t c) {
    mpz_set_si(pow_.get_mpz_t(), c);
    mpz_mul_2exp(pow_.get_mpz_t(), pow_.get_mpz_t(), e);
    spill_ += pow_;
  }

  void flush(ModelCount& out) {
    for (std::size_t e = 0; e < terms_.size(); ++e)
      if (terms_[e] != 0) spill(static_cast<Var>(e), terms_[e]);
    out = spill_;
    spill_ = 0;
  }

  // Adds the models of f over n variables, computed by inclusion-exclusion
  // over the falsifier sets of its clauses. pos_/neg_ must be clear.
  void inclusion_exclusion(const FlatFormula& f, Var n);

  void ie_walk(std::size_t from, std::size_t chosen, std::uint32_t distinct_vars);

  EngineConfig cfg_;
  CountStats stats_;
  std::vector<FlatFormula> levels_;
  std::vector<std::uint32_t> pos_, neg_;
  std::vector<Var> touched_;
  std::uint64_t stored_ = 0;
  static constexpr std::int64_t kSpillAt = std::int64_t{1} << 61;
  std::vector<std::int64_t> terms_;
  ModelCount spill_, pow_;
  std::vector<std::span<const std::uint32_t>> ie_clauses_;
  // Signed number of clause subsets whose falsifying assignments fix exactly
  // v variables, weighted (-1)^(|S|+1).
  std::vector<std::int64_t> ie_coeff_;
};

void Engine::ie_walk(std::size_t from, std::size_t chosen, std::uint32_t distinct_vars) {
  for (std::size_t j = from; j < ie_clauses_.size(); ++j) {
    // Falsifying clause j forces each of its literals false: pos_/neg_ count
    // how many chosen clauses force a variable false/true.
    const auto clause = ie_clauses_[j];
    std::uint32_t vars = distinct_vars;
    bool conflict = false;
    std::size_t applied = 0;
    for (const std::uint32_t l : clause) {
      const Var v = l >> 1;
      auto& same = (l & 1u) ? neg_ : pos_;
      const auto& other = (l & 1u) ? pos_ : neg_;
      if (other[v] > 0) {
        conflict = true;
        break;
      }
      if (same[v]++ == 0) ++vars;
      ++applied;
    }
    // A conflicting subset and all its supersets falsify nothing.
    if (!conflict) {
      ie_coeff_[vars] += (chosen % 2 == 0) ? 1 : -1;
      ie_walk(j + 1, chosen + 1, vars);
    }
    for (std::size_t i = 0; i < applied; ++i) {
      const std::uint32_t l = clause[i];
      --((l & 1u) ? neg_ : pos_)[l >> 1];
    }
  }
}

void Engine::inclusion_exclusion(const FlatFormula& f, Var n) {
  ie_clauses_.clear();
  std::size_t total_lits = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto c = f.clause(i);
    bool tautology = false;
    for (std::size_t k = 1; k < c.size(); ++k)
      if ((c[k] >> 1) == (c[k - 1] >> 1)) tautology = true;
    if (tautology) continue;
    const bool duplicate = std::any_of(ie_clauses_.begin(), ie_clauses_.end(), [&](auto d) {
      return std::equal(d.begin(), d.end(), c.begin(), c.end());
    });
    if (duplicate) continue;
    ie_clauses_.push_back(c);
    total_lits += c.size();
  }

  if (ie_coeff_.size() < total_lits + 1) ie_coeff_.resize(total_lits + 1);
  std::fill_n(ie_coeff_.begin(), total_lits + 1, 0);
  ie_walk(0, 0, 0);

  // 2^n - sum_v coeff[v] * 2^(n-v)
  add_term(n, 1);
  for (std::size_t v = 0; v <= total_lits; ++v) {
    const std::int64_t c = ie_coeff_[v];
    if (c == 0) continue;
    if (v > n) throw InvariantError("more live variables than the variable budget");
    add_term(n - static_cast<Var>(v), -c);
  }
}

std::size_t distinct_vars(const Formula& f) {
  std::vector<Var> vars;
  for (const Clause& c : f)
    for (Literal l : c) vars.push_back(l.var());
  std::sort(vars.begin(), vars.end());
  return static_cast<std::size_t>(std::unique(vars.begin(), vars.end()) - vars.begin());
}

void require_budget(const Formula& f, Var n) {
  if (distinct_vars(f) > n)
    throw InvariantError("formula has " + std::to_string(distinct_vars(f)) +
                         " occurring variables but the budget is " + std::to_string(n));
}

} // namespace

CountResult count_models(const Formula& f, Var n, const EngineConfig& cfg) {
  require_budget(f, n);
  Engine engine(max_var_of(f), cfg);
  CountResult out;
  out.count = engine.run(f, n);
  out.stats = engine.stats();
  return out;
}

Var choose_split_variable(const OccurrenceTable& occ, Heuristic h) {
  std::optional<Candidate> best;
  for (Var v = 1; v <= occ.num_vars(); ++v) {
    const Candidate c{v, occ.pos(v), occ.neg(v)};
    if (c.pos + c.neg == 0) continue;
    if (!best || prefer(c, *best, h)) best = c;
  }
  if (!best) throw InvariantError("no variable occurs in the formula");
  return best->var;
}

Var choose_split_variable(const Formula& f, Heuristic h) {
  return choose_split_variable(occurrence_counts(f), h);
}

ModelCount falsifying_count(std::span<const Clause> clauses, Var n) {
  std::map<Var, bool> forced; // variable -> value that falsifies
  for (const Clause& c : clauses)
    for (Literal l : c) {
      const bool value = l.negated();
      auto [it, inserted] = forced.emplace(l.var(), value);
      if (!inserted && it->second != value) return 0;
    }
  if (forced.size() > n) throw InvariantError("clauses mention more than n variables");
  return pow2(n - static_cast<Var>(forced.size()));
}

ModelCount count_small_ie(const Formula& f, Var n) {
  require_budget(f, n);
  Engine engine(max_var_of(f), EngineConfig{});
  return engine.count_ie(flatten(f), n);
}

CountResult count_models_dnf(const DnfFormula& f, Var n, const EngineConfig& cfg) {
  CountResult inner = count_models(negate(f), n, cfg);
  inner.count = pow2(n) - inner.count;
  return inner;
}

Probability degree_of_belief(const Formula& kb, const Formula& s, const EngineConfig& cfg) {
  if (kb.num_vars() != s.num_vars())
    throw std::invalid_argument("knowledge base and statement have different variable counts");
  const ModelCount kb_models = count_models(kb, cfg).count;
  if (kb_models == 0) throw InconsistentKnowledgeBase("knowledge base has no models");
  std::vector<Clause> both = kb.clauses();
  both.insert(both.end(), s.clauses().begin(), s.clauses().end());
  const ModelCount joint = count_models(Formula(kb.num_vars(), std::move(both)), cfg).count;
  Probability p(joint, kb_models);
  p.canonicalize();
  return p;
}

} // namespace cdp
