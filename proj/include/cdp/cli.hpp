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
#include <functional>
#include <iosfwd>

#include "cdp/counter.hpp"

namespace cdp::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kUsageError = 1, // bad flags, unreadable or malformed input
  kRuntimeError = 2, // oracle limit, inconsistent KB, oracle mismatch
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct OracleCheckOptions {
  std::uint32_t cases = 100;
  Var n_max = 8;
  std::uint64_t seed = 0;
  EngineConfig engine;
};

// Counter under test; defaults to count_models with opts.engine. Tests swap
// in a deliberately broken one to exercise the failure path.
using CountFn = std::function<ModelCount(const Formula&)>;

int oracle_check(const OracleCheckOptions& opts, std::ostream& out, std::ostream& err,
                 const CountFn& counter = {});

} // namespace cdp::cli
