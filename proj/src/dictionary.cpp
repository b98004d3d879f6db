#include "advstore/dictionary.hpp"

#include <cmath>
#include <cstdio>

#include "advstore/bitpack.hpp"

namespace advstore {

uint32_t Dictionary::intern(const Value& v) {
  check_ingest_value(v, type_);
  auto it = index_.find(v);
  if (it != index_.end()) return it->second;
  const auto code = static_cast<uint32_t>(entries_.size());
  if (entries_.size() >= (1ull << 32))
    raise(ErrorCode::CapacityExceeded, "dictionary exceeds 32-bit code space");
  entries_.push_back({v, 0});
  index_.emplace(v, code);
  if (!min_ || value_less(v, *min_)) min_ = v;
  if (!max_ || value_less(*max_, v)) max_ = v;
  return code;
}

std::optional<uint32_t> Dictionary::encode(const Value& v) const {
  if (!value_matches(v, type_)) return std::nullopt;
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Value& Dictionary::decode(uint32_t code) const {
  if (code >= entries_.size())
    raise(ErrorCode::CodeOutOfRange, "code " + std::to_string(code) + " >= dictionary size " +
                                         std::to_string(entries_.size()));
  return entries_[code].value;
}

void Dictionary::increment(uint32_t code) {
  ++entries_.at(code).count;
  ++total_live_rows_;
}

void Dictionary::decrement(uint32_t code) {
  auto& e = entries_.at(code);
  if (e.count == 0 || total_live_rows_ == 0)
    raise(ErrorCode::InvalidArgument, "count underflow on decrement");
  --e.count;
  --total_live_rows_;
}

uint64_t Dictionary::payload_bytes() const {
  uint64_t bytes = 0;
  for (const auto& e : entries_) {
    switch (e.value.index()) {
      case 0: bytes += std::get<std::string>(e.value).size(); break;
      default: bytes += 8; break;
    }
    bytes += sizeof(uint64_t);  // count
  }
  return bytes;
}

Dictionary build_dictionary(std::span<const Value> values, ColumnType type) {
  Dictionary dict(type);
  for (const auto& v : values) dict.increment(dict.intern(v));
  return dict;
}

BitWidth packed_bit_width(uint64_t cardinality) {
  if (cardinality == 0) raise(ErrorCode::InvalidCardinality, "cardinality must be >= 1");
  return {bits_for_cardinality(cardinality), std::log2(static_cast<double>(cardinality))};
}

double theoretical_bits_1dp(uint64_t cardinality) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", packed_bit_width(cardinality).theoretical);
  return std::strtod(buf, nullptr);
}

namespace {

void require_numeric(const Dictionary& dict) {
  if (!is_numeric(dict.type()))
    raise(ErrorCode::NonNumericColumn, "aggregate requires a numeric column");
}

void require_rows(const Dictionary& dict) {
  if (dict.total_live_rows() == 0)
    raise(ErrorCode::EmptyColumn, "aggregate requires at least one live row");
}

}  // namespace

double sum_from_counts(const Dictionary& dict) {
  require_numeric(dict);
  double sum = 0;
  for (const auto& e : dict.entries())
    sum += static_cast<double>(e.count) * value_as_double(e.value);
  return sum;
}

double mean_from_counts(const Dictionary& dict) {
  require_numeric(dict);
  require_rows(dict);
  return sum_from_counts(dict) / static_cast<double>(dict.total_live_rows());
}

double stddev_from_counts(const Dictionary& dict) {
  require_numeric(dict);
  require_rows(dict);
  const double mean = mean_from_counts(dict);
  double acc = 0;
  for (const auto& e : dict.entries()) {
    const double d = value_as_double(e.value) - mean;
    acc += static_cast<double>(e.count) * d * d;
  }
  return std::sqrt(acc / static_cast<double>(dict.total_live_rows()));
}

Histogram histogram_from_counts(const Dictionary& dict) {
  Histogram h;
  h.reserve(dict.size());
  for (const auto& e : dict.entries()) h.emplace_back(e.value, e.count);
  return h;
}

AggregateResult aggregate_from_counts(const Dictionary& dict, AggregateKind kind) {
  switch (kind) {
    case AggregateKind::Sum: return sum_from_counts(dict);
    case AggregateKind::Mean: return mean_from_counts(dict);
    case AggregateKind::StdDev: return stddev_from_counts(dict);
    case AggregateKind::Histogram: return histogram_from_counts(dict);
  }
  raise(ErrorCode::InvalidArgument, "bad aggregate kind");
}

}  // namespace advstore
