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
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cdp {

using Var = std::uint32_t;

// A possibly negated variable. Encoded as 2*var + negated so that the two
// literals of one variable are adjacent in sorted order.
class Literal {
public:
  constexpr Literal(Var var, bool negated) : code_(2 * var + (negated ? 1u : 0u)) {}

  // DIMACS convention: 3 -> x3, -3 -> not x3. Zero is not a literal.
  static Literal from_dimacs(int value);
  static constexpr Literal from_code(std::uint32_t code) { return Literal(code); }

  constexpr Var var() const { return code_ >> 1; }
  constexpr bool negated() const { return code_ & 1u; }
  constexpr std::uint32_t code() const { return code_; }
  constexpr Literal operator~() const { return Literal(code_ ^ 1u); }
  int to_dimacs() const;

  constexpr auto operator<=>(const Literal&) const = default;

private:
  constexpr explicit Literal(std::uint32_t code) : code_(code) {}
  std::uint32_t code_;
};

inline constexpr Literal pos(Var v) { return Literal(v, false); }
inline constexpr Literal neg(Var v) { return Literal(v, true); }

// A set of literals. Stored sorted by literal code with duplicates collapsed;
// a complementary pair is legal and makes the clause a tautology.
class Clause {
public:
  Clause() = default;
  Clause(std::initializer_list<Literal> lits);
  explicit Clause(std::vector<Literal> lits);

  std::span<const Literal> literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  bool contains(Literal l) const;
  bool is_tautology() const;
  Var max_var() const { return lits_.empty() ? 0 : lits_.back().var(); }

  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }

  bool operator==(const Clause&) const = default;
  auto operator<=>(const Clause&) const = default;

private:
  std::vector<Literal> lits_;
};

// Ordered multiset of clauses over the declared universe x1..x_num_vars.
// Used for both CNF (clauses) and DNF (terms); the interpretation is chosen
// by the function consuming it.
class Formula {
public:
  explicit Formula(Var num_vars = 0) : num_vars_(num_vars) {}
  Formula(Var num_vars, std::vector<Clause> clauses);

  // Throws std::invalid_argument if the clause mentions a variable > num_vars.
  void add_clause(Clause c);

  Var num_vars() const { return num_vars_; }
  std::size_t num_clauses() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }
  bool has_empty_clause() const;
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& operator[](std::size_t i) const { return clauses_[i]; }

  auto begin() const { return clauses_.begin(); }
  auto end() const { return clauses_.end(); }

  bool operator==(const Formula&) const = default;

private:
  Var num_vars_;
  std::vector<Clause> clauses_;
};

using DnfFormula = Formula;

class OccurrenceTable {
public:
  explicit OccurrenceTable(Var num_vars) : pos_(num_vars + 1, 0), neg_(num_vars + 1, 0) {}

  std::uint32_t pos(Var x) const { return pos_.at(x); }
  std::uint32_t neg(Var x) const { return neg_.at(x); }
  std::uint32_t total(Var x) const { return pos(x) + neg(x); }
  Var num_vars() const { return static_cast<Var>(pos_.size() - 1); }

  void add(Literal l) { (l.negated() ? neg_ : pos_)[l.var()]++; }

private:
  std::vector<std::uint32_t> pos_;
  std::vector<std::uint32_t> neg_;
};

// Makes l true: drops every clause containing l and removes ~l from the rest.
// Variables are not renumbered; num_vars is unchanged.
Formula assign(const Formula& f, Literal l);

// Literal of the first unit clause in clause order.
std::optional<Literal> find_unit(const Formula& f);

OccurrenceTable occurrence_counts(const Formula& f);

// De Morgan: each term becomes the clause of its complemented literals.
Formula negate(const Formula& f);

//
// DIMACS I/O
//

enum class FormulaKind { cnf, dnf };

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& msg);
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

struct DimacsFile {
  FormulaKind kind = FormulaKind::cnf;
  Formula formula;
  std::vector<std::string> warnings;
};

DimacsFile read_dimacs(std::istream& in);
DimacsFile read_dimacs_file(const std::string& path);

// Parses text that must carry a "p cnf" (resp. "p dnf") header.
Formula parse_dimacs(std::string_view text);
Formula parse_dimacs_dnf(std::string_view text);

void write_dimacs(std::ostream& out, const Formula& f, FormulaKind kind = FormulaKind::cnf);
std::string emit_dimacs(const Formula& f, FormulaKind kind = FormulaKind::cnf);

} // namespace cdp
