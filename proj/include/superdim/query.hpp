#pragma once

/**
 * @file query.hpp
 * @brief Front-end layer shared by the superdim CLI: algebra and weight
 * parsing, query results, and their text/JSON/LaTeX renderings.
 */

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "superdim/atypical.hpp"
#include "superdim/hilbert.hpp"
#include "superdim/typicality.hpp"

namespace superdim {

using ordered_json = nlohmann::ordered_json;

struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " (at position " + std::to_string(pos + 1) + ")"), position(pos) {}
  std::size_t position;  // 0-based offset into the input
};

/// Accepts sl(p|q), sl(p,q), osp(a|b), A(m,n), B(m,n), C(n), D(m,n),
/// D(2,1;α), F(4), G(3). Parameters are validated.
AlgebraSpec parse_algebra(std::string_view text);

/// Either "marks=0,1,1,1" or "coords=2e1+2e2+e3-d2".
Weight parse_weight_spec(const RootDatum& datum, const std::string& text);

enum class OutputFormat { Text, Json, Latex };
OutputFormat parse_format(const std::string& name);

/// Numerator of a series with its content pulled out:
///   H(q) = common_factor · Σ coefficients[i] q^i / (1-q)^pole_order
/// where the integer coefficients are coprime and the lowest nonzero one is
/// positive.
struct SplitSeries {
  Rational common_factor;
  std::vector<BigInt> coefficients;
  int pole_order = 0;

  std::string str(const std::string& var = "q") const;
  std::string latex(const std::string& var = "q") const;
};

SplitSeries split_content(const RationalSeries& s);
RationalSeries join_content(const SplitSeries& s);

struct QueryResult {
  std::string algebra;
  RootDatum datum;
  Weight weight;
  Marks marks;
  TypicalityReport typicality;
  DominanceCheck dominance;
  SplitSeries hilbert;
  std::string h_polynomial;
  std::vector<Rational> expansion;
  std::vector<std::string> warnings;
  bool theorem_form_degenerate = false;
};

/// Computes everything for one weight. Throws ConsistencyError if the two
/// closed forms or the direct dimension formula disagree.
QueryResult run_series_query(const RootDatum& datum, const Weight& w, int terms);

ordered_json to_json(const QueryResult& r);
std::string to_text(const QueryResult& r);
/// One table row: weight & marks & series & expansion.
std::string to_latex_row(const QueryResult& r);
std::string latex_table(const std::vector<QueryResult>& rows);

std::string render(const QueryResult& r, OutputFormat fmt);

/// Rationals become bare JSON integers when integral and within int64,
/// otherwise "p/q" (or decimal) strings.
ordered_json rational_json(const Rational& r);

struct MarkRange {
  int index = 0;  // 0-based mark index
  std::vector<Rational> values;
};

/// Parses "a1=0..2" (inclusive integer range) or "a3=1" / "a3=1/2".
MarkRange parse_mark_assignment(const std::string& text);

/// Enumerates the grid in lexicographic order (a1 most significant), keeps
/// the ℕ-typical weights, and returns one result per kept weight. Every mark
/// must be covered by exactly one range.
std::vector<QueryResult> run_scan(const RootDatum& datum, const std::vector<MarkRange>& ranges, int terms = 4);

std::string render_scan(const std::vector<QueryResult>& rows, OutputFormat fmt);

struct AtypicalResult {
  std::string algebra;
  RootDatum datum;
  Weight weight;
  AtypicalitySite site;
  std::vector<BigInt> dims;         // [1, dim V(Λ), dim V(2Λ), ...]
  std::vector<Rational> bounds;     // typical-formula coefficients
};

/// Throws std::invalid_argument for typical or multiply atypical weights.
AtypicalResult run_atypical_query(const RootDatum& datum, const Weight& w, int terms);
std::string render(const AtypicalResult& r, OutputFormat fmt);

/// Root datum listing for the `info` command.
std::string render_info(const RootDatum& datum, OutputFormat fmt);

/// Runs a batch description: either an array of queries or
/// {"queries": [...]}, each {"command": "series"|"atypical"|"info",
/// "algebra": ..., "weight": "marks=..."|"coords=...", "terms": N}.
ordered_json run_batch(const nlohmann::json& batch);

}  // namespace superdim
