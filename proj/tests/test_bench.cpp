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

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "cdp/bench.hpp"

using namespace cdp;
using Catch::Approx;

namespace {

GridSpec small_kcnf() {
  GridSpec spec;
  spec.model = Model::kcnf;
  spec.ns = {12};
  spec.ratios = {0.6, 1.2};
  spec.k = 3;
  spec.instances = 5;
  spec.base_seed = 100;
  return spec;
}

std::string records_without_time(std::vector<RunRecord> records) {
  std::ostringstream out;
  write_records_csv(out, records, false);
  return out.str();
}

} // namespace

TEST_CASE("run_grid seed discipline", "[bench]") {
  GridSpec spec = small_kcnf();
  spec.ratios = {1.0};
  spec.instances = 3;
  const auto records = run_grid(spec);
  REQUIRE(records.size() == 3);
  for (std::uint32_t i = 0; i < 3; ++i) {
    CHECK(records[i].seed == 100 + i);
    CHECK(records[i].instance == i);
  }
}

TEST_CASE("run_grid derives m from the ratio", "[bench]") {
  GridSpec spec = small_kcnf();
  spec.ns = {20};
  spec.ratios = {1.0};
  spec.instances = 2;
  for (const auto& r : run_grid(spec)) CHECK(r.cell.m == 20);
  spec.ratios = {0.25};
  CHECK(expand_cells(spec).front().m == 5);
}

TEST_CASE("run_grid rejects invalid grids", "[bench]") {
  GridSpec spec = small_kcnf();
  spec.ns.clear();
  CHECK_THROWS_AS(run_grid(spec), std::invalid_argument);
  spec = small_kcnf();
  spec.ratios.clear();
  CHECK_THROWS_AS(run_grid(spec), std::invalid_argument);
  spec = small_kcnf();
  spec.instances = 0;
  CHECK_THROWS_AS(run_grid(spec), std::invalid_argument);
  spec = small_kcnf();
  spec.k = 13;
  CHECK_THROWS_AS(run_grid(spec), std::invalid_argument);
  spec.model = Model::indep;
  spec.p1 = 1.5;
  CHECK_THROWS_AS(run_grid(spec), std::invalid_argument);
}

TEST_CASE("run_grid is reproducible and independent of worker count", "[bench]") {
  GridSpec spec = small_kcnf();
  const auto serial = run_grid(spec, 1);
  CHECK(records_without_time(serial) == records_without_time(run_grid(spec, 1)));
  CHECK(records_without_time(serial) == records_without_time(run_grid(spec, 4)));

  GridSpec indep;
  indep.model = Model::indep;
  indep.ns = {10, 12};
  indep.ms = {5, 15};
  indep.p1 = 0.2;
  indep.p2 = 0.1;
  indep.instances = 3;
  CHECK(records_without_time(run_grid(indep, 1)) == records_without_time(run_grid(indep, 3)));
}

TEST_CASE("summary statistics conventions", "[bench][summary]") {
  CHECK(mean(std::vector<double>{1, 2, 3}) == 2.0);
  CHECK(median({1, 2, 3}) == 2.0);
  CHECK(median({4, 1, 3, 2}) == 2.5);
  CHECK(sample_stddev(std::vector<double>{5, 5, 5}) == 0.0);
  CHECK(sample_stddev(std::vector<double>{1, 2, 3, 4}) == Approx(std::sqrt(5.0 / 3.0)));
  CHECK_THROWS_AS(median({}), std::invalid_argument);
  CHECK_THROWS_AS(summarize({}), std::invalid_argument);
}

TEST_CASE("summarize groups by cell", "[bench][summary]") {
  std::vector<RunRecord> records;
  const Cell a{Model::kcnf, 10, 12, 0, 0, 3};
  const Cell b{Model::kcnf, 10, 24, 0, 0, 3};
  std::uint32_t i = 0;
  for (std::uint64_t calls : {1, 2, 3}) records.push_back({a, i++, 0, "1", calls, calls * 10, 1.0});
  for (std::uint64_t calls : {1, 2, 3, 4}) records.push_back({b, i++, 0, "1", calls, 7, 2.0});
  const auto rows = summarize(records);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].cell == a);
  CHECK(rows[0].instances == 3);
  CHECK(rows[0].mean_calls == 2.0);
  CHECK(rows[0].median_calls == 2.0);
  CHECK(rows[0].stddev_calls == 1.0);
  CHECK(rows[0].mean_peak == 20.0);
  CHECK(rows[0].max_peak == 30);
  CHECK(rows[1].median_calls == 2.5);
  CHECK(rows[1].mean_time_ms == 2.0);
}

TEST_CASE("summarize is permutation invariant", "[bench][summary][property]") {
  GridSpec spec = small_kcnf();
  auto records = run_grid(spec);
  std::ostringstream first, second;
  write_summary_csv(first, summarize(records));
  std::mt19937_64 rng(3);
  std::shuffle(records.begin(), records.end(), rng);
  write_summary_csv(second, summarize(records));
  CHECK(first.str() == second.str());
}

TEST_CASE("fit_memory_exponent", "[bench][fit]") {
  const std::vector<std::pair<double, double>> exact{
      {10, 2 * std::pow(10, 1.3)}, {100, 2 * std::pow(100, 1.3)}, {200, 2 * std::pow(200, 1.3)}};
  const auto fit = fit_memory_exponent(exact);
  CHECK(fit.s == Approx(2.0));
  CHECK(fit.t == Approx(1.3));
  CHECK(fit.residual == Approx(0.0).margin(1e-12));

  const std::vector<std::pair<double, double>> flat{{10, 7}, {20, 7}, {40, 7}};
  const auto c = fit_memory_exponent(flat);
  CHECK(c.t == Approx(0.0).margin(1e-12));
  CHECK(c.s == Approx(7.0));

  const std::vector<std::pair<double, double>> same_m{{10, 1}, {10, 2}, {10, 3}};
  CHECK_THROWS_AS(fit_memory_exponent(same_m), std::invalid_argument);
  const std::vector<std::pair<double, double>> two_m{{10, 1}, {20, 2}, {10, 3}};
  CHECK_THROWS_AS(fit_memory_exponent(two_m), std::invalid_argument);
  const std::vector<std::pair<double, double>> zero{{10, 0}, {20, 2}, {40, 3}};
  CHECK_THROWS_AS(fit_memory_exponent(zero), std::invalid_argument);
}

TEST_CASE("CSV layout", "[bench][csv]") {
  std::vector<RunRecord> records{{{Model::indep, 50, 60, 0.1, 0.2, 0}, 0, 7, "123", 45, 67, 1.5},
                                 {{Model::kcnf, 20, 24, 0, 0, 3}, 1, 8, "0", 9, 10, 0.25}};
  std::ostringstream out;
  write_records_csv(out, records);
  CHECK(out.str() == std::string(kRecordsHeader) + "\n" +
                         "indep,50,60,0.1,0.2,,0,7,123,45,67,1.500\n"
                         "kcnf,20,24,,,3,1,8,0,9,10,0.250\n");
  std::ostringstream sum;
  write_summary_csv(sum, summarize(records));
  CHECK(sum.str() == std::string(kSummaryHeader) + "\n" +
                         "indep,50,60,0.1,0.2,,1,45.000,45.000,0.000,67.000,67,1.500\n"
                         "kcnf,20,24,,,3,1,9.000,9.000,0.000,10.000,10,0.250\n");
}
