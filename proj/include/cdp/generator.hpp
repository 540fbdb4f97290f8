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
#include <random>
#include <string>

#include "cdp/formula.hpp"

namespace cdp {

// Each variable enters each clause unnegated with probability p1 and,
// independently, negated with probability p2.
struct IndepModelConfig {
  Var n = 0;
  std::uint32_t m = 0;
  double p1 = 0.0;
  double p2 = 0.0;
  std::uint64_t seed = 0;
  // Resample clauses that came out empty instead of keeping them.
  bool reject_empty = false;
};

// Each clause has k distinct variables drawn uniformly, each negated with
// probability 1/2.
struct FixedWidthConfig {
  Var n = 0;
  std::uint32_t m = 0;
  std::uint32_t k = 3;
  std::uint64_t seed = 0;
};

Formula gen_indep(const IndepModelConfig& cfg);
Formula gen_kcnf(const FixedWidthConfig& cfg);

// "<model>_n<n>_m<m>_s<seed>.cnf"
std::string instance_filename(std::string_view model, Var n, std::uint32_t m, std::uint64_t seed);

} // namespace cdp
