#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "advstore/dictionary.hpp"
#include "advstore/feature_spec.hpp"
#include "advstore/value.hpp"

namespace advstore {

/// Source statistics for the normalizer family, computed from dictionary
/// counts alone (no row scan).
struct ColumnMoments {
  double min = 0, max = 0, mean = 0, stddev = 0;
};

ColumnMoments column_moments(const Dictionary& dict);

// ---------------------------------------------------------------------------
// Transform kernels. All pure: same inputs, same outputs, no hidden state.
// ---------------------------------------------------------------------------

float to_float(const Value& v);  // nearest float32; NonNumeric for strings

enum class NormalizeMethod { MinMaxScale, MeanNormalize, ZScore, LogScale };

/// MinMaxScale  (x - min) / (max - min)
/// MeanNormalize (x - mean) / (max - min)
/// ZScore       (x - mean) / stddev
/// LogScale     log(1 + x - min), shifted so the argument stays >= 1 for
///              in-range inputs
double normalize(double x, const ColumnMoments& m, NormalizeMethod method);

std::vector<float> one_hot(uint32_t code, uint32_t cardinality);

double binarize(double x, double cutoff);  // 1.0 iff x >= cutoff
double soft_binarize(double x, double cutoff, double scale);

/// Linear range division: clamp(floor((x-lo)*n/(hi-lo)), 0, n-1). Intervals
/// are left-closed/right-open; the last interval is closed at hi.
uint32_t quantile_bucket(double x, double lo, double hi, uint32_t n_quantiles);

uint64_t fnv1a64(std::string_view bytes);

uint32_t hash_bucket(int64_t value, uint32_t n_buckets);     // non-negative remainder
uint32_t hash_bucket(double value, uint32_t n_buckets);      // floor of non-negative fmod
uint32_t hash_bucket(std::string_view value, uint32_t n_buckets);  // FNV-1a 64 mod n
uint32_t hash_bucket(const Value& value, uint32_t n_buckets);

/// Index = count of boundaries <= x, so bucket i covers [b_i, b_{i+1}).
uint32_t bucketize(double x, std::span<const double> boundaries);
uint32_t bucketize(std::string_view x, std::span<const std::string> boundaries);

std::vector<float> embed(uint32_t code, const EmbeddingTable& table);

// ---------------------------------------------------------------------------
// Resolved transforms. A FeatureSpec is bound to a column once: applicability
// checked, source moments / value range / cardinality frozen at that point.
// The same resolved transform backs both the precomputed-slot path and the
// per-row recompute path, so the two agree bit for bit.
// ---------------------------------------------------------------------------

struct ResolvedSpec {
  FeatureSpec spec;
  ColumnType column_type = ColumnType::Integer;
  ColumnMoments moments;      // normalizer family
  double range_lo = 0, range_hi = 0;  // quantile
  uint32_t onehot_cardinality = 0;    // one-hot: dictionary size at bind time
};

/// Binds `spec` to a column described by its dictionary. Throws NotApplicable
/// on a Table-6 violation or parameter/column type mismatch, DegenerateRange /
/// ZeroVariance when the source statistics cannot support the transform.
ResolvedSpec resolve_spec(const FeatureSpec& spec, const Dictionary& dict);

/// Output width: embedding dim, else 1.
uint32_t resolved_width(const ResolvedSpec& rspec);

/// Evaluates the transform for one dictionary entry, writing
/// resolved_width() float32 values to `out`.
void apply_resolved(const ResolvedSpec& rspec, const Value& v, uint32_t code, float* out);

}  // namespace advstore
