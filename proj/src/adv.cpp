#include "advstore/adv.hpp"

#include <cmath>
#include <map>

#include "advstore/column_table.hpp"

namespace advstore {

std::span<const float> Adv::slot(uint32_t code) const {
  const size_t off = static_cast<size_t>(code) * width;
  if (off + width > outputs.size())
    raise(ErrorCode::CodeOutOfRange, "ADV has no slot for code " + std::to_string(code));
  return {outputs.data() + off, width};
}

Adv make_spec_adv(std::string name, const ResolvedSpec& rspec, const Dictionary& dict) {
  Adv adv;
  adv.name = std::move(name);
  adv.learned = false;
  adv.rspec = rspec;
  adv.width = resolved_width(rspec);
  adv.outputs.resize(static_cast<size_t>(dict.size()) * adv.width);
  const auto& entries = dict.entries();
  for (uint32_t code = 0; code < entries.size(); ++code)
    apply_resolved(rspec, entries[code].value, code, adv.outputs.data() + static_cast<size_t>(code) * adv.width);
  return adv;
}

Adv make_learned_adv(std::string name, LearnedMapping mapping, float default_output,
                     const Dictionary& dict) {
  std::unordered_map<Value, float, ValueHash> lookup;
  for (const auto& [v, out] : mapping.pairs) {
    check_ingest_value(v, dict.type());
    if (!lookup.emplace(v, out).second)
      raise(ErrorCode::InvalidArgument, "learned mapping lists '" + value_to_text(v) + "' twice");
  }
  Adv adv;
  adv.name = std::move(name);
  adv.learned = true;
  adv.mapping = std::move(mapping);
  adv.default_output = default_output;
  adv.width = 1;
  adv.outputs.resize(dict.size());
  const auto& entries = dict.entries();
  for (uint32_t code = 0; code < entries.size(); ++code) {
    const auto it = lookup.find(entries[code].value);
    adv.outputs[code] = it == lookup.end() ? default_output : it->second;
  }
  return adv;
}

Adv& register_adv(ColumnTable& table, std::string_view column, std::string_view name,
                  const FeatureSpec& spec) {
  Column& col = table.column(column);
  if (col.find_adv(name))
    raise(ErrorCode::DuplicateName,
          "column '" + col.name + "' already has an ADV named '" + std::string(name) + "'");
  const ResolvedSpec rspec = resolve_spec(spec, col.dict);
  Adv adv = make_spec_adv(std::string(name), rspec, col.dict);
  if (col.dict.total_live_rows() > 0) compute_stats(adv, col.dict);
  col.advs.push_back(std::move(adv));
  return col.advs.back();
}

Adv& import_learned_mapping(ColumnTable& table, std::string_view column, std::string_view name,
                            LearnedMapping mapping, float default_output) {
  Column& col = table.column(column);
  if (col.find_adv(name))
    raise(ErrorCode::DuplicateName,
          "column '" + col.name + "' already has an ADV named '" + std::string(name) + "'");
  Adv adv = make_learned_adv(std::string(name), std::move(mapping), default_output, col.dict);
  if (col.dict.total_live_rows() > 0) compute_stats(adv, col.dict);
  col.advs.push_back(std::move(adv));
  return col.advs.back();
}

void maintain_on_insert(Adv& adv, const Dictionary& dict, uint32_t new_code) {
  if (new_code != adv.slot_count())
    raise(ErrorCode::InvalidArgument, "ADV slots out of step with dictionary");
  adv.outputs.resize(adv.outputs.size() + adv.width);
  float* out = adv.outputs.data() + static_cast<size_t>(new_code) * adv.width;
  if (adv.learned) {
    const Value& v = dict.decode(new_code);
    out[0] = adv.default_output;
    for (const auto& [mv, mout] : adv.mapping.pairs) {
      if (mv == v) {
        out[0] = mout;
        break;
      }
    }
  } else {
    apply_resolved(adv.rspec, dict.decode(new_code), new_code, out);
  }
  adv.stale_stats = true;
}

AdvStats compute_stats(Adv& adv, const Dictionary& dict) {
  if (dict.total_live_rows() == 0)
    raise(ErrorCode::EmptyColumn, "stats require at least one live row");
  if (adv.slot_count() != dict.size())
    raise(ErrorCode::InvalidArgument, "ADV slots out of step with dictionary");

  // Count-weighted distribution over distinct output tuples.
  std::map<std::vector<float>, uint64_t> dist;
  const auto& entries = dict.entries();
  for (uint32_t code = 0; code < entries.size(); ++code) {
    if (entries[code].count == 0) continue;
    const auto s = adv.slot(code);
    std::vector<float> key(s.begin(), s.end());
    dist[key] += entries[code].count;
  }
  const double total = static_cast<double>(dict.total_live_rows());
  AdvStats stats;
  double sum_p2 = 0;
  for (const auto& [key, count] : dist) {
    const double p = static_cast<double>(count) / total;
    stats.entropy -= p * std::log2(p);
    sum_p2 += p * p;
  }
  stats.diversity = 1.0 - sum_p2;
  if (stats.entropy < 0) stats.entropy = 0;  // -0.0 from a single bucket
  adv.stats = stats;
  adv.stale_stats = false;
  return stats;
}

}  // namespace advstore
