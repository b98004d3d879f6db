#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "advstore/schema.hpp"
#include "advstore/value.hpp"

namespace advstore {

struct EqPred {
  std::string column;
  Value value;
};

struct InListPred {
  std::string column;
  std::vector<Value> values;
};

// Inclusive on both ends (BETWEEN semantics).
struct RangePred {
  std::string column;
  Value lo, hi;
};

using AtomPred = std::variant<EqPred, InListPred, RangePred>;

/// Conjunction of atoms; an empty conjunct list selects all live rows.
struct Predicate {
  std::vector<AtomPred> conjuncts;

  static Predicate all() { return {}; }
  static Predicate eq(std::string column, Value v);
  static Predicate in_list(std::string column, std::vector<Value> vs);
  static Predicate range(std::string column, Value lo, Value hi);
  Predicate& and_also(AtomPred atom);
};

/// Minimal predicate grammar over a schema:
///   col = v | col IN (v, v, ...) | col BETWEEN a AND b
/// joined by AND. Literals are typed by the referenced column; string
/// literals may be single- or double-quoted, bare words are accepted for
/// string columns. An empty input selects all rows.
Predicate parse_predicate(std::string_view text, const Schema& schema);

std::string predicate_to_text(const Predicate& pred);

}  // namespace advstore
