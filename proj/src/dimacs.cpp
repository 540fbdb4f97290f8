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

#include "cdp/formula.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace cdp {

ParseError::ParseError(std::size_t line, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename Int>
std::optional<Int> to_int(std::string_view tok) {
  Int v{};
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || first == ptr) return std::nullopt;
  return v;
}

} // namespace

DimacsFile read_dimacs(std::istream& in) {
  DimacsFile file;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  Var num_vars = 0;
  std::vector<Literal> pending;
  std::size_t pending_line = 0;
  std::size_t lineno = 0;
  std::vector<Clause> clauses;

  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == 'c') continue;

    if (toks.front() == "p") {
      if (have_header) throw ParseError(lineno, "duplicate header");
      if (toks.size() != 4) throw ParseError(lineno, "malformed header, expected 'p cnf <vars> <clauses>'");
      if (toks[1] == "cnf")
        file.kind = FormulaKind::cnf;
      else if (toks[1] == "dnf")
        file.kind = FormulaKind::dnf;
      else
        throw ParseError(lineno, "unknown format '" + std::string(toks[1]) + "'");
      const auto n = to_int<std::uint32_t>(toks[2]);
      const auto m = to_int<std::size_t>(toks[3]);
      if (!n || !m || *n > static_cast<std::uint32_t>(std::numeric_limits<int>::max()))
        throw ParseError(lineno, "malformed header counts");
      num_vars = *n;
      declared_clauses = *m;
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "clause data before 'p' header");

    for (auto tok : toks) {
      const auto v = to_int<long>(tok);
      if (!v) throw ParseError(lineno, "invalid token '" + std::string(tok) + "'");
      if (*v == 0) {
        clauses.emplace_back(std::move(pending));
        pending.clear();
        continue;
      }
      if (static_cast<unsigned long>(std::labs(*v)) > num_vars)
        throw ParseError(lineno, "variable index " + std::to_string(std::labs(*v)) +
                                     " out of range (declared " + std::to_string(num_vars) + ")");
      if (pending.empty()) pending_line = lineno;
      pending.push_back(Literal::from_dimacs(static_cast<int>(*v)));
    }
  }

  if (!have_header) throw ParseError(lineno, "missing 'p' header");
  if (!pending.empty()) throw ParseError(pending_line, "final clause is not terminated by 0");
  if (clauses.size() != declared_clauses)
    file.warnings.push_back("header declares " + std::to_string(declared_clauses) + " clauses but " +
                            std::to_string(clauses.size()) + " were read");
  file.formula = Formula(num_vars, std::move(clauses));
  return file;
}

DimacsFile read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_dimacs(in);
}

namespace {

Formula parse_expecting(std::string_view text, FormulaKind kind) {
  std::istringstream in{std::string(text)};
  auto file = read_dimacs(in);
  if (file.kind != kind)
    throw ParseError(1, kind == FormulaKind::cnf ? "expected 'p cnf' header" : "expected 'p dnf' header");
  return std::move(file.formula);
}

} // namespace

Formula parse_dimacs(std::string_view text) { return parse_expecting(text, FormulaKind::cnf); }
Formula parse_dimacs_dnf(std::string_view text) { return parse_expecting(text, FormulaKind::dnf); }

void write_dimacs(std::ostream& out, const Formula& f, FormulaKind kind) {
  out << "p " << (kind == FormulaKind::cnf ? "cnf" : "dnf") << ' ' << f.num_vars() << ' '
      << f.num_clauses() << '\n';
  for (const Clause& c : f) {
    for (Literal l : c) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
}

std::string emit_dimacs(const Formula& f, FormulaKind kind) {
  std::ostringstream out;
  write_dimacs(out, f, kind);
  return out.str();
}

} // namespace cdp
