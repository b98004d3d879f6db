#include "advstore/value.hpp"

#include <charconv>
#include <cmath>
#include <cstring>
#include <functional>

namespace advstore {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::CodeOutOfRange: return "CodeOutOfRange";
    case ErrorCode::InvalidCardinality: return "InvalidCardinality";
    case ErrorCode::NonNumericColumn: return "NonNumericColumn";
    case ErrorCode::EmptyColumn: return "EmptyColumn";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::UnknownColumn: return "UnknownColumn";
    case ErrorCode::DeadRow: return "DeadRow";
    case ErrorCode::UnsortedBoundaries: return "UnsortedBoundaries";
    case ErrorCode::DegenerateRange: return "DegenerateRange";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::UnknownFeature: return "UnknownFeature";
    case ErrorCode::UnknownTable: return "UnknownTable";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::MismatchDetected: return "MismatchDetected";
  }
  return "Error";
}

const char* column_type_name(ColumnType type) {
  switch (type) {
    case ColumnType::CategoricalString: return "string";
    case ColumnType::Integer: return "int";
    case ColumnType::Float: return "float";
  }
  return "?";
}

ColumnType column_type_from_name(std::string_view name) {
  if (name == "string") return ColumnType::CategoricalString;
  if (name == "int") return ColumnType::Integer;
  if (name == "float") return ColumnType::Float;
  raise(ErrorCode::ParseError, "unknown column type '" + std::string(name) + "'");
}

ColumnType type_of(const Value& v) {
  switch (v.index()) {
    case 0: return ColumnType::CategoricalString;
    case 1: return ColumnType::Integer;
    default: return ColumnType::Float;
  }
}

namespace {

// Sign-magnitude flip: maps doubles onto uint64 keys whose unsigned order is
// the IEEE-754 total order.
uint64_t total_order_key(double x) {
  uint64_t u;
  std::memcpy(&u, &x, sizeof u);
  return (u & 0x8000000000000000ull) ? ~u : (u | 0x8000000000000000ull);
}

}  // namespace

bool value_less(const Value& a, const Value& b) {
  if (a.index() != b.index())
    raise(ErrorCode::TypeMismatch, "cannot order values of different types");
  switch (a.index()) {
    case 0: return std::get<std::string>(a) < std::get<std::string>(b);
    case 1: return std::get<int64_t>(a) < std::get<int64_t>(b);
    default: return total_order_key(std::get<double>(a)) < total_order_key(std::get<double>(b));
  }
}

size_t ValueHash::operator()(const Value& v) const {
  switch (v.index()) {
    case 0: return std::hash<std::string>{}(std::get<std::string>(v));
    case 1: return std::hash<int64_t>{}(std::get<int64_t>(v));
    default: return std::hash<double>{}(std::get<double>(v));
  }
}

double value_as_double(const Value& v) {
  switch (v.index()) {
    case 1: return static_cast<double>(std::get<int64_t>(v));
    case 2: return std::get<double>(v);
    default: raise(ErrorCode::NonNumericColumn, "string value has no numeric form");
  }
}

std::string value_to_text(const Value& v) {
  char buf[64];
  switch (v.index()) {
    case 0: return std::get<std::string>(v);
    case 1: {
      auto r = std::to_chars(buf, buf + sizeof buf, std::get<int64_t>(v));
      return std::string(buf, r.ptr);
    }
    default: {
      auto r = std::to_chars(buf, buf + sizeof buf, std::get<double>(v));
      return std::string(buf, r.ptr);
    }
  }
}

Value parse_value(std::string_view text, ColumnType type) {
  switch (type) {
    case ColumnType::CategoricalString:
      return Value(std::string(text));
    case ColumnType::Integer: {
      int64_t n = 0;
      auto r = std::from_chars(text.data(), text.data() + text.size(), n);
      if (r.ec != std::errc{} || r.ptr != text.data() + text.size())
        raise(ErrorCode::TypeMismatch, "'" + std::string(text) + "' is not an integer");
      return Value(n);
    }
    case ColumnType::Float: {
      double d = 0;
      auto r = std::from_chars(text.data(), text.data() + text.size(), d);
      if (r.ec != std::errc{} || r.ptr != text.data() + text.size())
        raise(ErrorCode::TypeMismatch, "'" + std::string(text) + "' is not a float");
      if (!std::isfinite(d))
        raise(ErrorCode::TypeMismatch, "non-finite float '" + std::string(text) + "' rejected");
      return Value(d);
    }
  }
  raise(ErrorCode::TypeMismatch, "bad column type");
}

uint64_t value_text_bytes(const Value& v) {
  if (v.index() == 0) return std::get<std::string>(v).size() + 1;
  return value_to_text(v).size() + 1;
}

bool value_matches(const Value& v, ColumnType type) { return type_of(v) == type; }

void check_ingest_value(const Value& v, ColumnType type) {
  if (!value_matches(v, type))
    raise(ErrorCode::TypeMismatch, "value '" + value_to_text(v) + "' does not match column type " +
                                       column_type_name(type));
  if (type == ColumnType::Float && !std::isfinite(std::get<double>(v)))
    raise(ErrorCode::TypeMismatch, "non-finite float rejected at ingest");
}

}  // namespace advstore
