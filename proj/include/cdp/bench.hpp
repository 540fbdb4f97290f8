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
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cdp/counter.hpp"

namespace cdp {

enum class Model { indep, kcnf };

std::string_view to_string(Model m);
Model model_from_string(std::string_view name);

// A parameter grid. Cells are the product of `ns` with either `ms` or, when
// `ms` is empty, m = round(ratio * n) for each ratio.
struct GridSpec {
  Model model = Model::kcnf;
  std::vector<Var> ns;
  std::vector<std::uint32_t> ms;
  std::vector<double> ratios;
  double p1 = 0.0, p2 = 0.0; // indep
  std::uint32_t k = 3;       // kcnf
  std::uint32_t instances = 1;
  std::uint64_t base_seed = 0;
  bool reject_empty = false;
  EngineConfig engine;
};

struct Cell {
  Model model = Model::kcnf;
  Var n = 0;
  std::uint32_t m = 0;
  double p1 = 0.0, p2 = 0.0;
  std::uint32_t k = 0;

  bool operator==(const Cell&) const = default;
  auto operator<=>(const Cell&) const = default;
};

struct RunRecord {
  Cell cell;
  std::uint32_t instance = 0;
  std::uint64_t seed = 0;
  std::string count; // decimal
  std::uint64_t recursive_calls = 0;
  std::uint64_t peak_stored_clauses = 0;
  double time_ms = 0.0;
};

struct SummaryRow {
  Cell cell;
  std::size_t instances = 0;
  double mean_calls = 0.0;
  double median_calls = 0.0;
  double stddev_calls = 0.0;
  double mean_peak = 0.0;
  std::uint64_t max_peak = 0;
  double mean_time_ms = 0.0;
};

// log M = log s + t log m
struct MemoryFit {
  double s = 0.0;
  double t = 0.0;
  double residual = 0.0; // RMS in natural-log space
};

// Throws std::invalid_argument on an empty grid, zero instances or bad
// generator parameters.
std::vector<Cell> expand_cells(const GridSpec& spec);

// Records ordered by (cell, instance). The instance with global index i uses
// seed base_seed + i, so the result does not depend on `jobs`.
std::vector<RunRecord> run_grid(const GridSpec& spec, unsigned jobs = 1);

// One row per distinct cell, sorted by cell.
std::vector<SummaryRow> summarize(std::span<const RunRecord> records);

MemoryFit fit_memory_exponent(std::span<const std::pair<double, double>> points);

double mean(std::span<const double> xs);
double median(std::vector<double> xs);
double sample_stddev(std::span<const double> xs);

extern const char* const kRecordsHeader;
extern const char* const kSummaryHeader;

void write_records_csv(std::ostream& out, std::span<const RunRecord> records, bool with_time = true);
void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows);

} // namespace cdp
