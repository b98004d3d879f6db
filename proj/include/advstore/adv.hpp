#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "advstore/dictionary.hpp"
#include "advstore/kernels.hpp"

namespace advstore {

class ColumnTable;

/// Value -> float32 mapping fed back from external analysis (e.g. a learned
/// bucketization), imported as an ADV. Values absent from the mapping, and
/// entries inserted later, take the ADV's default output.
struct LearnedMapping {
  std::vector<std::pair<Value, float>> pairs;
  std::string provenance;
};

struct AdvStats {
  double entropy = 0;    // bits, count-weighted over distinct outputs
  double diversity = 0;  // Gini-Simpson 1 - sum p_i^2
};

/// Augmented Dictionary Value: a named per-dictionary-entry precomputed
/// feature output. Slot k holds the transform of decode(k); bucket indices
/// are stored as float32 so query output needs no conversion. `outputs` is
/// entries x width, row-major (width 1 for scalars, dim for embeddings).
struct Adv {
  std::string name;
  bool learned = false;
  ResolvedSpec rspec;        // when !learned
  LearnedMapping mapping;    // when learned
  float default_output = 0.0f;
  uint32_t width = 1;
  std::vector<float> outputs;
  bool stale_stats = true;
  AdvStats stats;

  uint32_t slot_count() const { return width == 0 ? 0 : static_cast<uint32_t>(outputs.size() / width); }
  std::span<const float> slot(uint32_t code) const;
};

Adv& register_adv(ColumnTable& table, std::string_view column, std::string_view name,
                  const FeatureSpec& spec);

Adv& import_learned_mapping(ColumnTable& table, std::string_view column, std::string_view name,
                            LearnedMapping mapping, float default_output);

/// Fills the slot for a freshly appended dictionary entry. Spec-backed ADVs
/// run the kernel (kernel errors propagate); learned ADVs consult the mapping
/// and fall back to the default output. Stats go stale.
void maintain_on_insert(Adv& adv, const Dictionary& dict, uint32_t new_code);

/// Entropy and diversity over the ADV's count-weighted distinct outputs;
/// refreshes adv.stats and clears the stale flag. EmptyColumn when the
/// dictionary has no live rows.
AdvStats compute_stats(Adv& adv, const Dictionary& dict);

/// Builds a complete ADV for an existing dictionary in one pass over its
/// entries (never over rows). Used by register/import and by transient
/// inline-spec compilation in the pipeline.
Adv make_spec_adv(std::string name, const ResolvedSpec& rspec, const Dictionary& dict);
Adv make_learned_adv(std::string name, LearnedMapping mapping, float default_output,
                     const Dictionary& dict);

}  // namespace advstore
