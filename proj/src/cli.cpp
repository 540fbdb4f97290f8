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

#include "cdp/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "cdp/bench.hpp"
#include "cdp/generator.hpp"
#include "cdp/oracle.hpp"

namespace cdp::cli {

namespace {

struct EngineFlags {
  std::uint32_t fallback_threshold = 6;
  std::string heuristic = "max-occ-minmax";
  bool no_unit_rule = false;
  bool no_fallback = false;

  void attach(CLI::App* app) {
    app->add_option("--fallback-threshold", fallback_threshold,
                    "Use inclusion-exclusion below this many clauses");
    app->add_option("--heuristic", heuristic, "Split heuristic")
        ->check(CLI::IsMember({"max-occ-minmax", "max-occ", "first"}));
    app->add_flag("--no-unit-rule", no_unit_rule, "Disable the unit clause rule");
    app->add_flag("--no-fallback", no_fallback, "Never switch to inclusion-exclusion");
  }

  EngineConfig config() const {
    EngineConfig cfg;
    cfg.fallback_threshold = fallback_threshold;
    cfg.heuristic = heuristic_from_string(heuristic);
    cfg.unit_rule = !no_unit_rule;
    cfg.fallback_enabled = !no_fallback;
    return cfg;
  }
};

// Thrown for conditions that map to kUsageError after parsing succeeded.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DimacsFile load(const std::string& path, FormulaKind expected, std::ostream& err) {
  DimacsFile file;
  try {
    file = path == "-" ? read_dimacs(std::cin) : read_dimacs_file(path);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  if (file.kind != expected)
    throw UsageError(path + ": expected a '" + std::string(expected == FormulaKind::cnf ? "p cnf" : "p dnf") +
                     "' header");
  for (const auto& w : file.warnings) err << "warning: " << path << ": " << w << '\n';
  return file;
}

void print_stats(std::ostream& out, const CountStats& s) {
  out << "recursive_calls=" << s.recursive_calls << '\n'
      << "splits=" << s.splits << '\n'
      << "unit_propagations=" << s.unit_propagations << '\n'
      << "fallback_invocations=" << s.fallback_invocations << '\n'
      << "peak_stored_clauses=" << s.peak_stored_clauses << '\n'
      << "peak_depth=" << s.peak_depth << '\n';
}

std::vector<double> parse_ratios(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("--ratios expects lo:hi:step, got '" + spec + "'");
    }
  }
  if (parts.size() != 3 || parts[2] <= 0 || parts[0] < 0 || parts[1] < parts[0])
    throw UsageError("--ratios expects lo:hi:step with 0 <= lo <= hi and step > 0");
  std::vector<double> ratios;
  for (std::size_t i = 0;; ++i) {
    // Rounded to 1e-9 so that 0.2 + 14*0.2 does not drift past 3.0.
    const double r = std::round((parts[0] + static_cast<double>(i) * parts[2]) * 1e9) / 1e9;
    if (r > parts[1] + 1e-9) break;
    ratios.push_back(r);
  }
  return ratios;
}

// Random instance for oracle-check case `index`: even cases come from the
// independent-literal model, odd cases from the fixed-width model.
Formula oracle_case(std::uint64_t seed, std::uint32_t index, Var n_max) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + index);
  auto below = [&](std::uint64_t bound) { return rng() % bound; };
  static constexpr double kProbs[] = {0.1, 0.2, 0.3};
  if (index % 2 == 0) {
    IndepModelConfig cfg;
    cfg.n = 1 + static_cast<Var>(below(n_max));
    cfg.m = static_cast<std::uint32_t>(below(4 * cfg.n + 1));
    cfg.p1 = kProbs[below(3)];
    cfg.p2 = kProbs[below(3)];
    cfg.seed = rng();
    return gen_indep(cfg);
  }
  FixedWidthConfig cfg;
  const Var lo = std::min<Var>(3, n_max);
  cfg.n = lo + static_cast<Var>(below(n_max - lo + 1));
  cfg.k = std::min<std::uint32_t>(2 + static_cast<std::uint32_t>(below(2)), cfg.n);
  const double ratio = 0.2 * static_cast<double>(1 + below(40));
  cfg.m = static_cast<std::uint32_t>(std::lround(ratio * cfg.n));
  cfg.seed = rng();
  return gen_kcnf(cfg);
}

} // namespace

int oracle_check(const OracleCheckOptions& opts, std::ostream& out, std::ostream& err,
                 const CountFn& counter) {
  if (opts.n_max < 1 || opts.n_max > 16) {
    err << "error: --n-max must lie in [1, 16]\n";
    return kUsageError;
  }
  const CountFn count = counter ? counter : [&](const Formula& f) {
    return count_models(f, opts.engine).count;
  };
  std::uint32_t ok = 0;
  for (std::uint32_t i = 0; i < opts.cases; ++i) {
    const Formula f = oracle_case(opts.seed, i, opts.n_max);
    const ModelCount got = count(f);
    const ModelCount want = brute_force_count(f, f.num_vars());
    if (got == want) {
      ++ok;
      continue;
    }
    out << "mismatch in case " << i << ": cdp=" << got.get_str() << " oracle=" << want.get_str() << '\n';
    write_dimacs(out, f);
  }
  out << ok << '/' << opts.cases << " ok\n";
  return ok == opts.cases ? kSuccess : kRuntimeError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact propositional model counter (split-and-count with inclusion-exclusion)", "cdpcount"};
  app.require_subcommand(1);

  // count / count-dnf
  std::string count_file;
  bool show_stats = false;
  EngineFlags count_flags;
  auto* count_cmd = app.add_subcommand("count", "Count models of a DIMACS CNF file");
  count_cmd->add_option("file", count_file, "DIMACS CNF file")->required();
  count_cmd->add_flag("--stats", show_stats, "Print search statistics as key=value lines");
  count_flags.attach(count_cmd);

  auto* dnf_cmd = app.add_subcommand("count-dnf", "Count models of a DIMACS DNF file ('p dnf')");
  dnf_cmd->add_option("file", count_file, "DIMACS DNF file")->required();
  dnf_cmd->add_flag("--stats", show_stats, "Print search statistics as key=value lines");
  count_flags.attach(dnf_cmd);

  // gen
  std::string model = "kcnf";
  Var gen_n = 0;
  std::uint32_t gen_m = 0, gen_k = 3, gen_count = 1;
  double p1 = -1, p2 = -1;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  bool reject_empty = false;
  auto* gen_cmd = app.add_subcommand("gen", "Generate random DIMACS instances");
  gen_cmd->add_option("--model", model, "indep or kcnf")->required()->check(CLI::IsMember({"indep", "kcnf"}));
  gen_cmd->add_option("--n", gen_n, "Number of variables")->required();
  gen_cmd->add_option("--m", gen_m, "Number of clauses")->required();
  gen_cmd->add_option("--p1", p1, "indep: probability of an unnegated occurrence");
  gen_cmd->add_option("--p2", p2, "indep: probability of a negated occurrence");
  gen_cmd->add_option("--k", gen_k, "kcnf: literals per clause");
  gen_cmd->add_option("--seed", seed, "Seed of the first instance");
  gen_cmd->add_option("--count", gen_count, "Number of instances");
  gen_cmd->add_option("--out", out_dir, "Output directory");
  gen_cmd->add_flag("--reject-empty", reject_empty, "indep: resample empty clauses");

  // bench
  std::vector<Var> bench_ns;
  std::vector<std::uint32_t> bench_ms;
  std::string ratios;
  std::uint32_t instances = 1;
  unsigned jobs = 1;
  std::string records_path, summary_path;
  EngineFlags bench_flags;
  auto* bench_cmd = app.add_subcommand("bench", "Run a parameter grid and write records/summary CSV");
  bench_cmd->add_option("--model", model, "indep or kcnf")->required()->check(CLI::IsMember({"indep", "kcnf"}));
  bench_cmd->add_option("--n", bench_ns, "Variable counts (comma separated)")->required()->delimiter(',');
  auto* m_opt = bench_cmd->add_option("--m", bench_ms, "Clause counts (comma separated)")->delimiter(',');
  auto* r_opt = bench_cmd->add_option("--ratios", ratios, "Clause/variable ratios lo:hi:step");
  m_opt->excludes(r_opt);
  bench_cmd->add_option("--p1", p1, "indep: probability of an unnegated occurrence");
  bench_cmd->add_option("--p2", p2, "indep: probability of a negated occurrence");
  bench_cmd->add_option("--k", gen_k, "kcnf: literals per clause");
  bench_cmd->add_option("--instances", instances, "Instances per cell");
  bench_cmd->add_option("--jobs", jobs, "Worker threads");
  bench_cmd->add_option("--seed", seed, "Base seed");
  bench_cmd->add_option("--out", out_dir, "Directory for records.csv and summary.csv");
  bench_cmd->add_option("--records", records_path, "Records CSV path (overrides --out)");
  bench_cmd->add_option("--summary", summary_path, "Summary CSV path (overrides --out)");
  bench_cmd->add_flag("--reject-empty", reject_empty, "indep: resample empty clauses");
  bench_flags.attach(bench_cmd);

  // oracle-check
  OracleCheckOptions oracle_opts;
  EngineFlags oracle_flags;
  auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare the counter against brute force");
  oracle_cmd->add_option("--cases", oracle_opts.cases, "Number of random formulas");
  oracle_cmd->add_option("--n-max", oracle_opts.n_max, "Largest variable count (<= 16)");
  oracle_cmd->add_option("--seed", oracle_opts.seed, "Seed");
  oracle_flags.attach(oracle_cmd);

  // belief
  std::string kb_path, s_path;
  EngineFlags belief_flags;
  auto* belief_cmd = app.add_subcommand("belief", "Degree of belief mu(KB and s) / mu(KB)");
  belief_cmd->add_option("--kb", kb_path, "Knowledge base (DIMACS CNF)")->required();
  belief_cmd->add_option("--s", s_path, "Statement (DIMACS CNF)")->required();
  belief_flags.attach(belief_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (count_cmd->parsed() || dnf_cmd->parsed()) {
      const bool dnf = dnf_cmd->parsed();
      const auto file = load(count_file, dnf ? FormulaKind::dnf : FormulaKind::cnf, err);
      const auto cfg = count_flags.config();
      const CountResult r = dnf ? count_models_dnf(file.formula, file.formula.num_vars(), cfg)
                                : count_models(file.formula, cfg);
      out << r.count.get_str() << '\n';
      if (show_stats) print_stats(out, r.stats);
      return kSuccess;
    }

    if (gen_cmd->parsed()) {
      const bool indep = model == "indep";
      if (indep && (p1 < 0 || p2 < 0)) throw UsageError("--model indep requires --p1 and --p2");
      std::vector<Formula> formulas;
      try {
        for (std::uint32_t i = 0; i < gen_count; ++i)
          formulas.push_back(indep ? gen_indep({gen_n, gen_m, p1, p2, seed + i, reject_empty})
                                   : gen_kcnf({gen_n, gen_m, gen_k, seed + i}));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      std::filesystem::create_directories(out_dir);
      for (std::uint32_t i = 0; i < gen_count; ++i) {
        const auto path = std::filesystem::path(out_dir) / instance_filename(model, gen_n, gen_m, seed + i);
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot write " + path.string());
        write_dimacs(f, formulas[i]);
        out << path.string() << '\n';
      }
      return kSuccess;
    }

    if (bench_cmd->parsed()) {
      GridSpec spec;
      spec.model = model_from_string(model);
      spec.ns = bench_ns;
      spec.ms = bench_ms;
      if (!ratios.empty()) spec.ratios = parse_ratios(ratios);
      if (spec.model == Model::indep) {
        if (p1 < 0 || p2 < 0) throw UsageError("--model indep requires --p1 and --p2");
        spec.p1 = p1;
        spec.p2 = p2;
      }
      spec.k = gen_k;
      spec.instances = instances;
      spec.base_seed = seed;
      spec.reject_empty = reject_empty;
      spec.engine = bench_flags.config();
      try {
        expand_cells(spec);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const auto records = run_grid(spec, jobs);
      const auto summary = summarize(records);

      std::filesystem::create_directories(out_dir);
      if (records_path.empty()) records_path = (std::filesystem::path(out_dir) / "records.csv").string();
      if (summary_path.empty()) summary_path = (std::filesystem::path(out_dir) / "summary.csv").string();
      std::ofstream rf(records_path), sf(summary_path);
      if (!rf || !sf) throw std::runtime_error("cannot write CSV output");
      write_records_csv(rf, records);
      write_summary_csv(sf, summary);
      write_summary_csv(out, summary);
      return kSuccess;
    }

    if (oracle_cmd->parsed()) {
      oracle_opts.engine = oracle_flags.config();
      return oracle_check(oracle_opts, out, err);
    }

    if (belief_cmd->parsed()) {
      const auto kb = load(kb_path, FormulaKind::cnf, err);
      const auto s = load(s_path, FormulaKind::cnf, err);
      if (kb.formula.num_vars() != s.formula.num_vars())
        throw UsageError("--kb and --s declare different variable counts");
      const Probability p = degree_of_belief(kb.formula, s.formula, belief_flags.config());
      char approx[32];
      std::snprintf(approx, sizeof approx, "%.6f", p.get_d());
      out << p.get_str() << ' ' << approx << '\n';
      return kSuccess;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kUsageError;
}

} // namespace cdp::cli
