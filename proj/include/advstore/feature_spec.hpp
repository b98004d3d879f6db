#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "advstore/value.hpp"

namespace advstore {

enum class FeatureKind {
  Float,
  OneHot,
  Embedding,
  MinMaxScale,
  MeanNormalize,
  ZScore,
  LogScale,
  Binarize,
  Quantile,
  HashBucket,
  Bucketize,
};

const char* feature_kind_name(FeatureKind kind);
FeatureKind feature_kind_from_name(std::string_view name);

/// Lookup table for embedding features: `cardinality` rows of `dim` float32
/// values each. Tables are imported (learned elsewhere) or seeded-random for
/// tests; no training happens here.
struct EmbeddingTable {
  uint32_t dim = 0;
  std::vector<float> rows;  // cardinality x dim, row-major

  uint32_t cardinality() const { return dim == 0 ? 0 : static_cast<uint32_t>(rows.size() / dim); }
  const float* row(uint32_t code) const;

  static EmbeddingTable seeded_random(uint32_t cardinality, uint32_t dim, uint64_t seed);
};

/// Transform descriptor. Parameter slots by kind:
///   Binarize    cutoff (numeric columns) or level (categorical columns)
///   Quantile    n_quantiles >= 2
///   HashBucket  n_buckets >= 1
///   Bucketize   boundaries (numeric columns) or str_boundaries (categorical),
///               strictly increasing
///   Embedding   dim >= 1 plus a table
struct FeatureSpec {
  FeatureKind kind = FeatureKind::Float;

  double cutoff = 0.0;
  std::optional<std::string> level;
  uint32_t n_quantiles = 0;
  uint32_t n_buckets = 0;
  std::vector<double> boundaries;
  std::vector<std::string> str_boundaries;
  uint32_t dim = 0;
  std::shared_ptr<const EmbeddingTable> table;

  static FeatureSpec to_float() { return {FeatureKind::Float}; }
  static FeatureSpec one_hot() { return {FeatureKind::OneHot}; }
  static FeatureSpec embedding(std::shared_ptr<const EmbeddingTable> table);
  static FeatureSpec min_max_scale() { return {FeatureKind::MinMaxScale}; }
  static FeatureSpec mean_normalize() { return {FeatureKind::MeanNormalize}; }
  static FeatureSpec z_score() { return {FeatureKind::ZScore}; }
  static FeatureSpec log_scale() { return {FeatureKind::LogScale}; }
  static FeatureSpec binarize(double cutoff);
  static FeatureSpec binarize_level(std::string level);
  static FeatureSpec quantile(uint32_t n_quantiles);
  static FeatureSpec hash_bucket(uint32_t n_buckets);
  static FeatureSpec bucketize(std::vector<double> boundaries);
  static FeatureSpec bucketize_strings(std::vector<std::string> boundaries);
};

/// Table 6 applicability: Float, MinMaxScale, MeanNormalize, ZScore, LogScale
/// and Quantile require numerical columns; the rest apply to both.
bool applicable(FeatureKind kind, ColumnType type);
bool applicable(const FeatureSpec& spec, ColumnType type);

/// Parameter sanity: quantiles >= 2, buckets >= 1, boundaries strictly
/// increasing, embedding dim >= 1 with a well-shaped table.
void validate_spec(const FeatureSpec& spec);

}  // namespace advstore
