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

#include "cdp/generator.hpp"

#include <numeric>
#include <stdexcept>

namespace cdp {

namespace {

// Distributions in <random> are implementation-defined; these two helpers
// keep generated formulas identical across standard libraries.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = -bound % bound; // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= limit) return r % bound;
  }
}

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument(std::string(name) + " must lie in [0,1]");
}

} // namespace

Formula gen_indep(const IndepModelConfig& cfg) {
  check_probability(cfg.p1, "p1");
  check_probability(cfg.p2, "p2");
  if (cfg.reject_empty && (cfg.n == 0 || (cfg.p1 == 0.0 && cfg.p2 == 0.0)) && cfg.m > 0)
    throw std::invalid_argument("reject_empty needs a nonzero chance of a non-empty clause");

  std::mt19937_64 rng(cfg.seed);
  Formula f(cfg.n);
  std::vector<Literal> lits;
  for (std::uint32_t j = 0; j < cfg.m; ++j) {
    do {
      lits.clear();
      for (Var v = 1; v <= cfg.n; ++v) {
        if (uniform01(rng) < cfg.p1) lits.push_back(pos(v));
        if (uniform01(rng) < cfg.p2) lits.push_back(neg(v));
      }
    } while (cfg.reject_empty && lits.empty());
    f.add_clause(Clause(lits));
  }
  return f;
}

Formula gen_kcnf(const FixedWidthConfig& cfg) {
  if (cfg.k < 1 || cfg.k > cfg.n)
    throw std::invalid_argument("clause width k=" + std::to_string(cfg.k) + " must lie in [1, n=" +
                                std::to_string(cfg.n) + "]");
  std::mt19937_64 rng(cfg.seed);
  std::vector<Var> vars(cfg.n);
  std::vector<Literal> lits;
  Formula f(cfg.n);
  for (std::uint32_t j = 0; j < cfg.m; ++j) {
    std::iota(vars.begin(), vars.end(), Var{1});
    lits.clear();
    // Partial Fisher-Yates: the first k slots become a uniform k-subset.
    for (std::uint32_t i = 0; i < cfg.k; ++i) {
      const auto pick = i + uniform_below(rng, cfg.n - i);
      std::swap(vars[i], vars[pick]);
      lits.emplace_back(vars[i], (rng() >> 63) != 0);
    }
    f.add_clause(Clause(lits));
  }
  return f;
}

std::string instance_filename(std::string_view model, Var n, std::uint32_t m, std::uint64_t seed) {
  return std::string(model) + "_n" + std::to_string(n) + "_m" + std::to_string(m) + "_s" +
         std::to_string(seed) + ".cnf";
}

} // namespace cdp
