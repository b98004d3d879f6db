#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "advstore/error.hpp"

namespace advstore {

enum class ColumnType { CategoricalString, Integer, Float };

const char* column_type_name(ColumnType type);
ColumnType column_type_from_name(std::string_view name);  // "string" | "int" | "float"

inline bool is_numeric(ColumnType type) { return type != ColumnType::CategoricalString; }

/// Original column value. The alternative in use is fixed per column:
/// CategoricalString -> string, Integer -> int64, Float -> double.
using Value = std::variant<std::string, int64_t, double>;

ColumnType type_of(const Value& v);

/// Ordering used for min/max metadata and range predicates: lexicographic
/// UTF-8 bytes for strings, numeric order for integers, IEEE-754 total order
/// for floats (NaN is rejected at ingest and never stored).
bool value_less(const Value& a, const Value& b);

inline bool value_eq(const Value& a, const Value& b) { return a == b; }

struct ValueHash {
  size_t operator()(const Value& v) const;
};

/// Numeric view of a value; throws NonNumericColumn for strings.
double value_as_double(const Value& v);

/// Deterministic text form: strings verbatim, numerics in shortest
/// round-trip notation.
std::string value_to_text(const Value& v);

/// Parses `text` as a value of `type`. Rejects non-finite floats.
/// Throws TypeMismatch on failure.
Value parse_value(std::string_view text, ColumnType type);

/// Bytes the value occupies in an uncompressed one-value-per-line text file
/// (payload + newline). Used for raw-vs-encoded size reports.
uint64_t value_text_bytes(const Value& v);

/// True when `v` holds the alternative required by `type`.
bool value_matches(const Value& v, ColumnType type);

/// Validates a value against a column type: alternative must match and
/// floats must be finite. Throws TypeMismatch.
void check_ingest_value(const Value& v, ColumnType type);

}  // namespace advstore
