#include "advstore/feature_spec.hpp"

#include <random>

#include "advstore/error.hpp"

namespace advstore {

const char* feature_kind_name(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::Float: return "float";
    case FeatureKind::OneHot: return "onehot";
    case FeatureKind::Embedding: return "embedding";
    case FeatureKind::MinMaxScale: return "minmax";
    case FeatureKind::MeanNormalize: return "meannorm";
    case FeatureKind::ZScore: return "zscore";
    case FeatureKind::LogScale: return "log";
    case FeatureKind::Binarize: return "binarize";
    case FeatureKind::Quantile: return "quantile";
    case FeatureKind::HashBucket: return "hashbucket";
    case FeatureKind::Bucketize: return "bucketize";
  }
  return "?";
}

FeatureKind feature_kind_from_name(std::string_view name) {
  for (int k = 0; k <= static_cast<int>(FeatureKind::Bucketize); ++k) {
    const auto kind = static_cast<FeatureKind>(k);
    if (name == feature_kind_name(kind)) return kind;
  }
  raise(ErrorCode::ParseError, "unknown feature kind '" + std::string(name) + "'");
}

const float* EmbeddingTable::row(uint32_t code) const {
  if (dim == 0 || rows.size() % dim != 0)
    raise(ErrorCode::ShapeMismatch, "embedding table is not cardinality x dim");
  if (code >= cardinality())
    raise(ErrorCode::CodeOutOfRange,
          "embedding lookup for code " + std::to_string(code) + " beyond table rows");
  return rows.data() + static_cast<size_t>(code) * dim;
}

EmbeddingTable EmbeddingTable::seeded_random(uint32_t cardinality, uint32_t dim, uint64_t seed) {
  EmbeddingTable t;
  t.dim = dim;
  t.rows.resize(static_cast<size_t>(cardinality) * dim);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<float> dist(-1.0f, 1.0f);
  for (auto& x : t.rows) x = dist(rng);
  return t;
}

FeatureSpec FeatureSpec::embedding(std::shared_ptr<const EmbeddingTable> table) {
  FeatureSpec s{FeatureKind::Embedding};
  s.dim = table ? table->dim : 0;
  s.table = std::move(table);
  return s;
}

FeatureSpec FeatureSpec::binarize(double cutoff) {
  FeatureSpec s{FeatureKind::Binarize};
  s.cutoff = cutoff;
  return s;
}

FeatureSpec FeatureSpec::binarize_level(std::string level) {
  FeatureSpec s{FeatureKind::Binarize};
  s.level = std::move(level);
  return s;
}

FeatureSpec FeatureSpec::quantile(uint32_t n_quantiles) {
  FeatureSpec s{FeatureKind::Quantile};
  s.n_quantiles = n_quantiles;
  return s;
}

FeatureSpec FeatureSpec::hash_bucket(uint32_t n_buckets) {
  FeatureSpec s{FeatureKind::HashBucket};
  s.n_buckets = n_buckets;
  return s;
}

FeatureSpec FeatureSpec::bucketize(std::vector<double> boundaries) {
  FeatureSpec s{FeatureKind::Bucketize};
  s.boundaries = std::move(boundaries);
  return s;
}

FeatureSpec FeatureSpec::bucketize_strings(std::vector<std::string> boundaries) {
  FeatureSpec s{FeatureKind::Bucketize};
  s.str_boundaries = std::move(boundaries);
  return s;
}

bool applicable(FeatureKind kind, ColumnType type) {
  switch (kind) {
    case FeatureKind::Float:
    case FeatureKind::MinMaxScale:
    case FeatureKind::MeanNormalize:
    case FeatureKind::ZScore:
    case FeatureKind::LogScale:
    case FeatureKind::Quantile:
      return is_numeric(type);
    case FeatureKind::OneHot:
    case FeatureKind::Embedding:
    case FeatureKind::Binarize:
    case FeatureKind::HashBucket:
    case FeatureKind::Bucketize:
      return true;
  }
  return false;
}

bool applicable(const FeatureSpec& spec, ColumnType type) { return applicable(spec.kind, type); }

void validate_spec(const FeatureSpec& spec) {
  switch (spec.kind) {
    case FeatureKind::Quantile:
      if (spec.n_quantiles < 2)
        raise(ErrorCode::InvalidArgument, "quantile requires n_quantiles >= 2");
      break;
    case FeatureKind::HashBucket:
      if (spec.n_buckets < 1)
        raise(ErrorCode::InvalidArgument, "hash bucket requires n_buckets >= 1");
      break;
    case FeatureKind::Bucketize: {
      if (spec.boundaries.empty() && spec.str_boundaries.empty())
        raise(ErrorCode::InvalidArgument, "bucketize requires a boundary vector");
      for (size_t i = 1; i < spec.boundaries.size(); ++i)
        if (!(spec.boundaries[i - 1] < spec.boundaries[i]))
          raise(ErrorCode::UnsortedBoundaries, "boundaries must be strictly increasing");
      for (size_t i = 1; i < spec.str_boundaries.size(); ++i)
        if (!(spec.str_boundaries[i - 1] < spec.str_boundaries[i]))
          raise(ErrorCode::UnsortedBoundaries, "boundaries must be strictly increasing");
      break;
    }
    case FeatureKind::Embedding:
      if (spec.dim < 1 || !spec.table)
        raise(ErrorCode::InvalidArgument, "embedding requires dim >= 1 and a table");
      if (spec.table->dim != spec.dim || (spec.table->dim && spec.table->rows.size() % spec.table->dim))
        raise(ErrorCode::ShapeMismatch, "embedding table shape does not match dim");
      break;
    default:
      break;
  }
}

}  // namespace advstore
