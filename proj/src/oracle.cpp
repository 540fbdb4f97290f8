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

#include "cdp/oracle.hpp"

#include <cstdint>
#include <string>

namespace cdp {

namespace {

// Bit (v-1) of `assignment` is the value of x_v.
bool literal_true(Literal l, std::uint64_t assignment) {
  const bool value = (assignment >> (l.var() - 1)) & 1u;
  return value != l.negated();
}

template <typename Satisfies>
ModelCount enumerate(const Formula& f, Var n, OracleLimit limit, Satisfies satisfies) {
  if (n > limit.max_vars)
    throw OracleLimitExceeded("brute force refused: " + std::to_string(n) + " variables exceeds limit " +
                              std::to_string(limit.max_vars));
  for (const Clause& c : f)
    if (c.max_var() > n) throw std::invalid_argument("formula mentions a variable beyond n");
  std::uint64_t models = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t a = 0; a < total; ++a)
    if (satisfies(a)) ++models;
  return ModelCount(std::to_string(models));
}

} // namespace

ModelCount brute_force_count(const Formula& f, Var n, OracleLimit limit) {
  return enumerate(f, n, limit, [&](std::uint64_t a) {
    for (const Clause& c : f) {
      bool sat = false;
      for (Literal l : c)
        if (literal_true(l, a)) {
          sat = true;
          break;
        }
      if (!sat) return false;
    }
    return true;
  });
}

ModelCount brute_force_count_dnf(const DnfFormula& f, Var n, OracleLimit limit) {
  return enumerate(f, n, limit, [&](std::uint64_t a) {
    for (const Clause& term : f) {
      bool all = true;
      for (Literal l : term)
        if (!literal_true(l, a)) {
          all = false;
          break;
        }
      if (all) return true;
    }
    return false;
  });
}

} // namespace cdp
