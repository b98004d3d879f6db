#include "advstore/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "advstore/error.hpp"

namespace advstore {

ColumnMoments column_moments(const Dictionary& dict) {
  if (!is_numeric(dict.type()))
    raise(ErrorCode::NonNumericColumn, "moments require a numeric column");
  if (dict.total_live_rows() == 0)
    raise(ErrorCode::EmptyColumn, "moments require at least one live row");
  ColumnMoments m;
  m.mean = mean_from_counts(dict);
  m.stddev = stddev_from_counts(dict);
  // Live min/max from entries: the column min/max metadata is not tightened
  // on delete, so recompute over count > 0 entries here.
  bool first = true;
  for (const auto& e : dict.entries()) {
    if (e.count == 0) continue;
    const double x = value_as_double(e.value);
    if (first || x < m.min) m.min = x;
    if (first || x > m.max) m.max = x;
    first = false;
  }
  return m;
}

float to_float(const Value& v) {
  switch (v.index()) {
    case 1: return static_cast<float>(std::get<int64_t>(v));
    case 2: return static_cast<float>(std::get<double>(v));
    default: raise(ErrorCode::NonNumericColumn, "to_float requires a numeric value");
  }
}

double normalize(double x, const ColumnMoments& m, NormalizeMethod method) {
  switch (method) {
    case NormalizeMethod::MinMaxScale:
      if (!(m.max > m.min)) raise(ErrorCode::DegenerateRange, "min/max scaling needs max > min");
      return (x - m.min) / (m.max - m.min);
    case NormalizeMethod::MeanNormalize:
      if (!(m.max > m.min)) raise(ErrorCode::DegenerateRange, "mean normalization needs max > min");
      return (x - m.mean) / (m.max - m.min);
    case NormalizeMethod::ZScore:
      if (!(m.stddev > 0)) raise(ErrorCode::ZeroVariance, "z-score needs stddev > 0");
      return (x - m.mean) / m.stddev;
    case NormalizeMethod::LogScale: {
      const double arg = 1.0 + x - m.min;
      if (!(arg > 0)) raise(ErrorCode::DomainError, "log scale argument must be positive");
      return std::log(arg);
    }
  }
  raise(ErrorCode::InvalidArgument, "bad normalize method");
}

std::vector<float> one_hot(uint32_t code, uint32_t cardinality) {
  if (code >= cardinality)
    raise(ErrorCode::CodeOutOfRange, "one-hot code " + std::to_string(code) +
                                         " >= cardinality " + std::to_string(cardinality));
  std::vector<float> out(cardinality, 0.0f);
  out[code] = 1.0f;
  return out;
}

double binarize(double x, double cutoff) { return x >= cutoff ? 1.0 : 0.0; }

double soft_binarize(double x, double cutoff, double scale) {
  if (!(scale > 0)) raise(ErrorCode::InvalidArgument, "soft binarize scale must be > 0");
  return 1.0 / (1.0 + std::exp(-(x - cutoff) / scale));
}

uint32_t quantile_bucket(double x, double lo, double hi, uint32_t n_quantiles) {
  if (!(hi > lo)) raise(ErrorCode::DegenerateRange, "quantile range needs hi > lo");
  if (n_quantiles < 2) raise(ErrorCode::InvalidArgument, "quantile needs n >= 2");
  if (std::isnan(x)) raise(ErrorCode::DomainError, "quantile input is NaN");
  const double idx = std::floor((x - lo) * static_cast<double>(n_quantiles) / (hi - lo));
  if (idx <= 0) return 0;
  if (idx >= n_quantiles) return n_quantiles - 1;
  return static_cast<uint32_t>(idx);
}

uint64_t fnv1a64(std::string_view bytes) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

uint32_t hash_bucket(int64_t value, uint32_t n_buckets) {
  if (n_buckets < 1) raise(ErrorCode::InvalidArgument, "n_buckets must be >= 1");
  const int64_t n = static_cast<int64_t>(n_buckets);
  int64_t r = value % n;
  if (r < 0) r += n;
  return static_cast<uint32_t>(r);
}

uint32_t hash_bucket(double value, uint32_t n_buckets) {
  if (n_buckets < 1) raise(ErrorCode::InvalidArgument, "n_buckets must be >= 1");
  if (std::isnan(value)) raise(ErrorCode::DomainError, "hash bucket input is NaN");
  double r = std::fmod(value, static_cast<double>(n_buckets));
  if (r < 0) r += static_cast<double>(n_buckets);
  const auto idx = static_cast<uint32_t>(std::floor(r));
  return idx >= n_buckets ? n_buckets - 1 : idx;
}

uint32_t hash_bucket(std::string_view value, uint32_t n_buckets) {
  if (n_buckets < 1) raise(ErrorCode::InvalidArgument, "n_buckets must be >= 1");
  return static_cast<uint32_t>(fnv1a64(value) % n_buckets);
}

uint32_t hash_bucket(const Value& value, uint32_t n_buckets) {
  switch (value.index()) {
    case 0: return hash_bucket(std::string_view(std::get<std::string>(value)), n_buckets);
    case 1: return hash_bucket(std::get<int64_t>(value), n_buckets);
    default: return hash_bucket(std::get<double>(value), n_buckets);
  }
}

uint32_t bucketize(double x, std::span<const double> boundaries) {
  for (size_t i = 1; i < boundaries.size(); ++i)
    if (!(boundaries[i - 1] < boundaries[i]))
      raise(ErrorCode::UnsortedBoundaries, "boundaries must be strictly increasing");
  const auto it = std::upper_bound(boundaries.begin(), boundaries.end(), x);
  return static_cast<uint32_t>(it - boundaries.begin());
}

uint32_t bucketize(std::string_view x, std::span<const std::string> boundaries) {
  for (size_t i = 1; i < boundaries.size(); ++i)
    if (!(boundaries[i - 1] < boundaries[i]))
      raise(ErrorCode::UnsortedBoundaries, "boundaries must be strictly increasing");
  const auto it = std::upper_bound(boundaries.begin(), boundaries.end(), x);
  return static_cast<uint32_t>(it - boundaries.begin());
}

std::vector<float> embed(uint32_t code, const EmbeddingTable& table) {
  const float* row = table.row(code);
  return std::vector<float>(row, row + table.dim);
}

// ---------------------------------------------------------------------------

ResolvedSpec resolve_spec(const FeatureSpec& spec, const Dictionary& dict) {
  validate_spec(spec);
  const ColumnType type = dict.type();
  if (!applicable(spec, type))
    raise(ErrorCode::NotApplicable, std::string(feature_kind_name(spec.kind)) +
                                        " is not applicable to a " + column_type_name(type) +
                                        " column");

  ResolvedSpec r;
  r.spec = spec;
  r.column_type = type;
  switch (spec.kind) {
    case FeatureKind::MinMaxScale:
    case FeatureKind::MeanNormalize:
    case FeatureKind::ZScore:
    case FeatureKind::LogScale:
      r.moments = column_moments(dict);
      if ((spec.kind == FeatureKind::MinMaxScale || spec.kind == FeatureKind::MeanNormalize) &&
          !(r.moments.max > r.moments.min))
        raise(ErrorCode::DegenerateRange, "column has a single numeric value");
      if (spec.kind == FeatureKind::ZScore && !(r.moments.stddev > 0))
        raise(ErrorCode::ZeroVariance, "column has zero variance");
      break;
    case FeatureKind::Quantile: {
      const ColumnMoments m = column_moments(dict);
      if (!(m.max > m.min)) raise(ErrorCode::DegenerateRange, "column has a single numeric value");
      r.range_lo = m.min;
      r.range_hi = m.max;
      break;
    }
    case FeatureKind::OneHot:
      r.onehot_cardinality = std::max<uint32_t>(1, dict.size());
      break;
    case FeatureKind::Binarize:
      if (type == ColumnType::CategoricalString && !spec.level)
        raise(ErrorCode::NotApplicable, "binarize on a categorical column needs a level value");
      break;
    case FeatureKind::Bucketize:
      if (type == ColumnType::CategoricalString) {
        if (spec.str_boundaries.empty())
          raise(ErrorCode::NotApplicable,
                "bucketize on a categorical column needs string boundaries");
      } else if (spec.boundaries.empty()) {
        raise(ErrorCode::NotApplicable, "bucketize on a numeric column needs numeric boundaries");
      }
      break;
    default:
      break;
  }
  return r;
}

uint32_t resolved_width(const ResolvedSpec& rspec) {
  return rspec.spec.kind == FeatureKind::Embedding ? rspec.spec.dim : 1;
}

void apply_resolved(const ResolvedSpec& rspec, const Value& v, uint32_t code, float* out) {
  const FeatureSpec& spec = rspec.spec;
  switch (spec.kind) {
    case FeatureKind::Float:
      out[0] = to_float(v);
      return;
    case FeatureKind::OneHot:
      if (code >= rspec.onehot_cardinality)
        raise(ErrorCode::CodeOutOfRange, "code beyond one-hot cardinality fixed at registration");
      out[0] = static_cast<float>(code);
      return;
    case FeatureKind::Embedding: {
      const float* row = spec.table->row(code);
      std::copy(row, row + spec.dim, out);
      return;
    }
    case FeatureKind::MinMaxScale:
      out[0] = static_cast<float>(normalize(value_as_double(v), rspec.moments, NormalizeMethod::MinMaxScale));
      return;
    case FeatureKind::MeanNormalize:
      out[0] = static_cast<float>(normalize(value_as_double(v), rspec.moments, NormalizeMethod::MeanNormalize));
      return;
    case FeatureKind::ZScore:
      out[0] = static_cast<float>(normalize(value_as_double(v), rspec.moments, NormalizeMethod::ZScore));
      return;
    case FeatureKind::LogScale:
      out[0] = static_cast<float>(normalize(value_as_double(v), rspec.moments, NormalizeMethod::LogScale));
      return;
    case FeatureKind::Binarize:
      if (rspec.column_type == ColumnType::CategoricalString) {
        out[0] = (std::get<std::string>(v) == *spec.level) ? 1.0f : 0.0f;
      } else {
        out[0] = static_cast<float>(binarize(value_as_double(v), spec.cutoff));
      }
      return;
    case FeatureKind::Quantile:
      out[0] = static_cast<float>(
          quantile_bucket(value_as_double(v), rspec.range_lo, rspec.range_hi, spec.n_quantiles));
      return;
    case FeatureKind::HashBucket:
      out[0] = static_cast<float>(hash_bucket(v, spec.n_buckets));
      return;
    case FeatureKind::Bucketize:
      if (rspec.column_type == ColumnType::CategoricalString) {
        out[0] = static_cast<float>(
            bucketize(std::string_view(std::get<std::string>(v)), spec.str_boundaries));
      } else {
        out[0] = static_cast<float>(bucketize(value_as_double(v), spec.boundaries));
      }
      return;
  }
  raise(ErrorCode::InvalidArgument, "bad feature kind");
}

}  // namespace advstore
