#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "advstore/value.hpp"

namespace advstore {

struct DictionaryEntry {
  Value value;
  uint64_t count = 0;  // live-row occurrences; the code is the entry's index
};

/// Per-column dictionary: original value <-> dense code, with per-entry live
/// counts and column min/max metadata over original values.
///
/// Codes are assigned in first-occurrence order and stay stable for the life
/// of the column; entries whose count drops to zero are retained.
class Dictionary {
 public:
  explicit Dictionary(ColumnType type) : type_(type) {}

  ColumnType type() const { return type_; }
  uint32_t size() const { return static_cast<uint32_t>(entries_.size()); }
  uint64_t total_live_rows() const { return total_live_rows_; }
  const std::vector<DictionaryEntry>& entries() const { return entries_; }

  const std::optional<Value>& column_min() const { return min_; }
  const std::optional<Value>& column_max() const { return max_; }

  /// Inserting path used at load/append: returns the value's code, adding an
  /// entry (count 0) when unseen, and widening min/max. The caller bumps the
  /// count via increment() once the row is actually stored.
  uint32_t intern(const Value& v);

  std::optional<uint32_t> encode(const Value& v) const;
  const Value& decode(uint32_t code) const;

  void increment(uint32_t code);
  void decrement(uint32_t code);

  /// Bytes to hold the dictionary: value payloads plus one u64 count each.
  uint64_t payload_bytes() const;

 private:
  ColumnType type_;
  std::vector<DictionaryEntry> entries_;
  std::unordered_map<Value, uint32_t, ValueHash> index_;
  std::optional<Value> min_, max_;
  uint64_t total_live_rows_ = 0;
};

Dictionary build_dictionary(std::span<const Value> values, ColumnType type);

struct BitWidth {
  unsigned bits = 1;        // max(1, ceil(log2(cardinality)))
  double theoretical = 0;   // log2(cardinality)
};

BitWidth packed_bit_width(uint64_t cardinality);

/// `theoretical` rounded to one decimal, e.g. 5.6 for cardinality 50.
double theoretical_bits_1dp(uint64_t cardinality);

enum class AggregateKind { Sum, Mean, StdDev, Histogram };

using Histogram = std::vector<std::pair<Value, uint64_t>>;
using AggregateResult = std::variant<double, Histogram>;

/// Aggregates computed strictly from dictionary entries; never touches IMCU
/// payloads (the table's IMCU read counter stays untouched).
AggregateResult aggregate_from_counts(const Dictionary& dict, AggregateKind kind);

double sum_from_counts(const Dictionary& dict);
double mean_from_counts(const Dictionary& dict);
double stddev_from_counts(const Dictionary& dict);  // population form
Histogram histogram_from_counts(const Dictionary& dict);

}  // namespace advstore
