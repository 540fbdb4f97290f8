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

#include "cdp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <iomanip>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "cdp/generator.hpp"

namespace cdp {

const char* const kRecordsHeader =
    "model,n,m,p1,p2,k,instance,seed,count,recursive_calls,peak_stored_clauses,time_ms";
const char* const kSummaryHeader = "model,n,m,p1,p2,k,instances,mean_calls,median_calls,stddev_calls,"
                                   "mean_peakM,max_peakM,mean_time_ms";

std::string_view to_string(Model m) { return m == Model::indep ? "indep" : "kcnf"; }

Model model_from_string(std::string_view name) {
  if (name == "indep") return Model::indep;
  if (name == "kcnf") return Model::kcnf;
  throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

std::vector<Cell> expand_cells(const GridSpec& spec) {
  if (spec.ns.empty() || (spec.ms.empty() && spec.ratios.empty()))
    throw std::invalid_argument("empty grid");
  if (spec.instances == 0) throw std::invalid_argument("instances must be >= 1");
  if (spec.model == Model::indep &&
      !(spec.p1 >= 0 && spec.p1 <= 1 && spec.p2 >= 0 && spec.p2 <= 1))
    throw std::invalid_argument("p1, p2 must lie in [0,1]");

  std::vector<Cell> cells;
  for (const Var n : spec.ns) {
    if (spec.model == Model::kcnf && (spec.k < 1 || spec.k > n))
      throw std::invalid_argument("clause width k must lie in [1, n]");
    std::vector<std::uint32_t> ms = spec.ms;
    if (ms.empty())
      for (const double r : spec.ratios) {
        if (!(r >= 0)) throw std::invalid_argument("ratios must be nonnegative");
        ms.push_back(static_cast<std::uint32_t>(std::lround(r * n)));
      }
    for (const auto m : ms) {
      Cell c{spec.model, n, m, 0.0, 0.0, 0};
      if (spec.model == Model::indep) {
        c.p1 = spec.p1;
        c.p2 = spec.p2;
      } else {
        c.k = spec.k;
      }
      cells.push_back(c);
    }
  }
  return cells;
}

namespace {

RunRecord run_instance(const GridSpec& spec, const Cell& cell, std::uint32_t instance, std::uint64_t seed) {
  const Formula f = cell.model == Model::indep
                        ? gen_indep({cell.n, cell.m, cell.p1, cell.p2, seed, spec.reject_empty})
                        : gen_kcnf({cell.n, cell.m, cell.k, seed});
  const auto start = std::chrono::steady_clock::now();
  const CountResult r = count_models(f, cell.n, spec.engine);
  const auto elapsed = std::chrono::steady_clock::now() - start;

  RunRecord rec;
  rec.cell = cell;
  rec.instance = instance;
  rec.seed = seed;
  rec.count = r.count.get_str();
  rec.recursive_calls = r.stats.recursive_calls;
  rec.peak_stored_clauses = r.stats.peak_stored_clauses;
  rec.time_ms = std::chrono::duration<double, std::milli>(elapsed).count();
  return rec;
}

} // namespace

std::vector<RunRecord> run_grid(const GridSpec& spec, unsigned jobs) {
  const auto cells = expand_cells(spec);
  const std::size_t total = cells.size() * spec.instances;
  std::vector<RunRecord> records(total);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < total;) {
      try {
        const auto instance = static_cast<std::uint32_t>(i % spec.instances);
        records[i] = run_instance(spec, cells[i / spec.instances], instance, spec.base_seed + i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = total;
      }
    }
  };

  jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::max<std::size_t>(total, 1)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean of empty sample");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double median(std::vector<double> xs) {
  if (xs.empty()) throw std::invalid_argument("median of empty sample");
  std::sort(xs.begin(), xs.end());
  const std::size_t h = xs.size() / 2;
  return xs.size() % 2 ? xs[h] : (xs[h - 1] + xs[h]) / 2.0;
}

double sample_stddev(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double mu = mean(xs);
  double ss = 0.0;
  for (const double x : xs) ss += (x - mu) * (x - mu);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

std::vector<SummaryRow> summarize(std::span<const RunRecord> records) {
  if (records.empty()) throw std::invalid_argument("no records to summarize");
  std::map<Cell, std::vector<const RunRecord*>> groups;
  for (const auto& r : records) groups[r.cell].push_back(&r);

  std::vector<SummaryRow> rows;
  for (auto& [cell, recs] : groups) {
    // Sort by instance so floating-point sums do not depend on input order.
    std::sort(recs.begin(), recs.end(), [](auto* a, auto* b) {
      return std::tie(a->instance, a->seed) < std::tie(b->instance, b->seed);
    });
    std::vector<double> calls, peaks, times;
    std::uint64_t max_peak = 0;
    for (const auto* r : recs) {
      calls.push_back(static_cast<double>(r->recursive_calls));
      peaks.push_back(static_cast<double>(r->peak_stored_clauses));
      times.push_back(r->time_ms);
      max_peak = std::max(max_peak, r->peak_stored_clauses);
    }
    SummaryRow row;
    row.cell = cell;
    row.instances = recs.size();
    row.mean_calls = mean(calls);
    row.median_calls = median(calls);
    row.stddev_calls = sample_stddev(calls);
    row.mean_peak = mean(peaks);
    row.max_peak = max_peak;
    row.mean_time_ms = mean(times);
    rows.push_back(row);
  }
  return rows;
}

MemoryFit fit_memory_exponent(std::span<const std::pair<double, double>> points) {
  std::set<double> distinct;
  for (const auto& [m, big_m] : points) {
    if (!(m > 0) || !(big_m > 0)) throw std::invalid_argument("memory fit needs positive m and M");
    distinct.insert(m);
  }
  if (distinct.size() < 3) throw std::invalid_argument("memory fit needs at least 3 distinct m values");

  std::vector<double> xs, ys;
  for (const auto& [m, big_m] : points) {
    xs.push_back(std::log(m));
    ys.push_back(std::log(big_m));
  }
  const double mx = mean(xs), my = mean(ys);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  MemoryFit fit;
  fit.t = sxy / sxx;
  const double log_s = my - fit.t * mx;
  fit.s = std::exp(log_s);
  double rss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (log_s + fit.t * xs[i]);
    rss += e * e;
  }
  fit.residual = std::sqrt(rss / static_cast<double>(xs.size()));
  return fit;
}

namespace {

void write_cell(std::ostream& out, const Cell& c) {
  out << to_string(c.model) << ',' << c.n << ',' << c.m << ',';
  if (c.model == Model::indep)
    out << c.p1 << ',' << c.p2 << ",,";
  else
    out << ",," << c.k << ',';
}

struct FixedFormat {
  explicit FixedFormat(std::ostream& out) : out_(out), flags_(out.flags()), prec_(out.precision()) {}
  ~FixedFormat() {
    out_.flags(flags_);
    out_.precision(prec_);
  }
  std::ostream& out_;
  std::ios::fmtflags flags_;
  std::streamsize prec_;
};

} // namespace

void write_records_csv(std::ostream& out, std::span<const RunRecord> records, bool with_time) {
  FixedFormat restore(out);
  out << kRecordsHeader << '\n';
  for (const auto& r : records) {
    out.unsetf(std::ios::floatfield);
    out.precision(6);
    write_cell(out, r.cell);
    out << r.instance << ',' << r.seed << ',' << r.count << ',' << r.recursive_calls << ','
        << r.peak_stored_clauses << ',';
    if (with_time) out << std::fixed << std::setprecision(3) << r.time_ms;
    out << '\n';
  }
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows) {
  FixedFormat restore(out);
  out << kSummaryHeader << '\n';
  for (const auto& r : rows) {
    out.unsetf(std::ios::floatfield);
    out.precision(6);
    write_cell(out, r.cell);
    out << r.instances << ',' << std::fixed << std::setprecision(3) << r.mean_calls << ','
        << r.median_calls << ',' << r.stddev_calls << ',' << r.mean_peak << ',' << r.max_peak << ','
        << r.mean_time_ms << '\n';
  }
}

} // namespace cdp
