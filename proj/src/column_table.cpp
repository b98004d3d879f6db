#include "advstore/column_table.hpp"

#include <omp.h>

#include <algorithm>

namespace advstore {

Adv* Column::find_adv(std::string_view adv_name) {
  for (auto& adv : advs)
    if (adv.name == adv_name) return &adv;
  return nullptr;
}

const Adv* Column::find_adv(std::string_view adv_name) const {
  for (const auto& adv : advs)
    if (adv.name == adv_name) return &adv;
  return nullptr;
}

const Adv& Column::require_adv(std::string_view adv_name) const {
  const Adv* adv = find_adv(adv_name);
  if (!adv)
    raise(ErrorCode::UnknownFeature,
          "column '" + name + "' has no ADV named '" + std::string(adv_name) + "'");
  return *adv;
}

uint64_t Column::encoded_payload_bytes() const {
  uint64_t bytes = dict.payload_bytes();
  for (const auto& unit : imcus) bytes += unit.encoded_payload_bytes();
  return bytes;
}

ColumnTable::ColumnTable(Schema schema) : schema_(std::move(schema)) {
  if (schema_.columns.empty()) raise(ErrorCode::SchemaMismatch, "schema needs at least one column");
  for (size_t i = 0; i < schema_.columns.size(); ++i) {
    for (size_t j = i + 1; j < schema_.columns.size(); ++j)
      if (schema_.columns[i].name == schema_.columns[j].name)
        raise(ErrorCode::SchemaMismatch, "duplicate column name '" + schema_.columns[i].name + "'");
  }
  columns_.reserve(schema_.columns.size());
  for (const auto& cs : schema_.columns) columns_.emplace_back(cs.name, cs.type);
}

ColumnTable::ColumnTable(ColumnTable&& other) noexcept
    : schema_(std::move(other.schema_)),
      columns_(std::move(other.columns_)),
      n_rows_(other.n_rows_),
      live_rows_(other.live_rows_),
      live_(std::move(other.live_)),
      imcu_reads_(other.imcu_reads_.load(std::memory_order_relaxed)) {
  provenance = std::move(other.provenance);
}

ColumnTable& ColumnTable::operator=(ColumnTable&& other) noexcept {
  schema_ = std::move(other.schema_);
  columns_ = std::move(other.columns_);
  n_rows_ = other.n_rows_;
  live_rows_ = other.live_rows_;
  live_ = std::move(other.live_);
  imcu_reads_.store(other.imcu_reads_.load(std::memory_order_relaxed));
  provenance = std::move(other.provenance);
  return *this;
}

Column& ColumnTable::column(std::string_view name) {
  return columns_[schema_.require(name)];
}

const Column& ColumnTable::column(std::string_view name) const {
  return columns_[schema_.require(name)];
}

void ColumnTable::append_value(size_t col_idx, const Value& v) {
  Column& col = columns_[col_idx];
  const uint32_t before = col.dict.size();
  const uint32_t code = col.dict.intern(v);
  if (code == before) {
    // New dictionary entry: extend every registered ADV.
    for (auto& adv : col.advs) maintain_on_insert(adv, col.dict, code);
  }
  col.dict.increment(code);
  if (col.imcus.empty() || col.imcus.back().full()) {
    col.imcus.emplace_back(static_cast<uint64_t>(col.imcus.size()) * kImcuCapacity);
  }
  col.imcus.back().append(code, v);
  if (col.imcus.back().full()) col.imcus.back().seal();
  col.raw_text_bytes += value_text_bytes(v);
}

void ColumnTable::append_rows(const std::vector<std::vector<Value>>& rows) {
  for (const auto& row : rows) {
    if (row.size() != columns_.size())
      raise(ErrorCode::SchemaMismatch, "row arity " + std::to_string(row.size()) +
                                           " does not match schema arity " +
                                           std::to_string(columns_.size()));
    for (size_t c = 0; c < row.size(); ++c) check_ingest_value(row[c], columns_[c].type);
  }
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) append_value(c, row[c]);
    live_.push_back(1);
    ++n_rows_;
    ++live_rows_;
  }
}

uint64_t ColumnTable::delete_rows(const Predicate& pred, const ScanOptions& opts) {
  const auto hits = scan(pred, opts);
  for (Column& col : columns_) {
    const auto codes = gather_codes(col.name, hits);
    for (uint32_t code : codes) col.dict.decrement(code);
    for (auto& adv : col.advs) adv.stale_stats = true;
  }
  for (uint64_t row : hits) live_[row] = 0;
  live_rows_ -= hits.size();
  return hits.size();
}

namespace {

// Marks global codes whose dictionary value satisfies the atom. Eq/InList
// short-circuit through encode(); Range walks the entries because code order
// carries no value order.
struct QualifyingCodes {
  std::vector<uint8_t> mask;  // indexed by global code
  bool any = false;
  // Value-domain envelope of the predicate, used against zone maps.
  std::optional<Value> lo, hi;
};

QualifyingCodes qualifying_codes(const Dictionary& dict, const AtomPred& atom) {
  QualifyingCodes q;
  q.mask.assign(dict.size(), 0);
  auto note_value = [&q](const Value& v) {
    if (!q.lo || value_less(v, *q.lo)) q.lo = v;
    if (!q.hi || value_less(*q.hi, v)) q.hi = v;
  };

  if (const auto* eq = std::get_if<EqPred>(&atom)) {
    if (!value_matches(eq->value, dict.type()))
      raise(ErrorCode::TypeMismatch, "predicate literal does not match column type");
    if (auto code = dict.encode(eq->value)) {
      q.mask[*code] = 1;
      q.any = true;
      note_value(eq->value);
    }
  } else if (const auto* in = std::get_if<InListPred>(&atom)) {
    for (const auto& v : in->values) {
      if (!value_matches(v, dict.type()))
        raise(ErrorCode::TypeMismatch, "predicate literal does not match column type");
      if (auto code = dict.encode(v)) {
        q.mask[*code] = 1;
        q.any = true;
        note_value(v);
      }
    }
  } else if (const auto* rg = std::get_if<RangePred>(&atom)) {
    if (!value_matches(rg->lo, dict.type()) || !value_matches(rg->hi, dict.type()))
      raise(ErrorCode::TypeMismatch, "predicate literal does not match column type");
    const auto& entries = dict.entries();
    for (uint32_t code = 0; code < entries.size(); ++code) {
      const Value& v = entries[code].value;
      if (!value_less(v, rg->lo) && !value_less(rg->hi, v)) {
        q.mask[code] = 1;
        q.any = true;
      }
    }
    q.lo = rg->lo;
    q.hi = rg->hi;
  }
  return q;
}

// Emits live qualifying row ids of one IMCU, in row order.
void scan_imcu(const Imcu& unit, const QualifyingCodes& q, const std::vector<uint8_t>& live,
               std::vector<uint64_t>& out) {
  const uint64_t base = unit.row_base();
  if (!unit.sealed()) {
    const auto& staging = unit.staging();
    for (uint32_t i = 0; i < staging.size(); ++i)
      if (q.mask[staging[i]] && live[base + i]) out.push_back(base + i);
    return;
  }

  const auto& remap = unit.local_to_global();
  std::vector<uint8_t> local_mask(remap.size());
  bool any_local = false;
  for (size_t l = 0; l < remap.size(); ++l) {
    local_mask[l] = q.mask[remap[l]];
    any_local |= local_mask[l] != 0;
  }
  if (!any_local) return;

  if (unit.uses_rle()) {
    uint64_t row = base;
    for (const auto& run : unit.rle().runs) {
      if (local_mask[run.code]) {
        for (uint32_t i = 0; i < run.length; ++i)
          if (live[row + i]) out.push_back(row + i);
      }
      row += run.length;
    }
    return;
  }

  const PackedVector& packed = unit.packed();
  const uint32_t n = unit.size();
  for (uint32_t i = 0; i < n; ++i)
    if (local_mask[packed.get(i)] && live[base + i]) out.push_back(base + i);
}

bool zone_excludes(const Imcu& unit, const QualifyingCodes& q) {
  if (!q.lo) return true;
  return unit.zone_map().excludes_range(*q.lo, *q.hi);
}

std::vector<uint64_t> intersect_sorted(const std::vector<uint64_t>& a,
                                       const std::vector<uint64_t>& b) {
  std::vector<uint64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

const std::string& atom_column(const AtomPred& atom) {
  if (const auto* eq = std::get_if<EqPred>(&atom)) return eq->column;
  if (const auto* in = std::get_if<InListPred>(&atom)) return in->column;
  return std::get<RangePred>(atom).column;
}

}  // namespace

std::vector<uint64_t> ColumnTable::scan_atom(const AtomPred& atom, const ScanOptions& opts,
                                             ScanStats* stats) const {
  const Column& col = column(atom_column(atom));
  const QualifyingCodes q = qualifying_codes(col.dict, atom);
  if (!q.any) return {};  // nothing encodable: zero IMCU reads

  const auto n_units = col.imcus.size();
  std::vector<std::vector<uint64_t>> per_unit(n_units);
  uint64_t scanned = 0, skipped = 0;

  if (opts.mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic) reduction(+ : scanned, skipped)
    for (size_t u = 0; u < n_units; ++u) {
      if (opts.pruning && zone_excludes(col.imcus[u], q)) {
        ++skipped;
        continue;
      }
      ++scanned;
      imcu_reads_.fetch_add(1, std::memory_order_relaxed);
      scan_imcu(col.imcus[u], q, live_, per_unit[u]);
    }
  } else {
    for (size_t u = 0; u < n_units; ++u) {
      if (opts.pruning && zone_excludes(col.imcus[u], q)) {
        ++skipped;
        continue;
      }
      ++scanned;
      imcu_reads_.fetch_add(1, std::memory_order_relaxed);
      scan_imcu(col.imcus[u], q, live_, per_unit[u]);
    }
  }

  if (stats) {
    stats->imcus_scanned += scanned;
    stats->imcus_skipped += skipped;
  }

  // Units are row-ordered, so concatenation keeps ids ascending.
  size_t total = 0;
  for (const auto& v : per_unit) total += v.size();
  std::vector<uint64_t> out;
  out.reserve(total);
  for (const auto& v : per_unit) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<uint64_t> ColumnTable::scan(const Predicate& pred, const ScanOptions& opts,
                                        ScanStats* stats) const {
  if (pred.conjuncts.empty()) {
    std::vector<uint64_t> out;
    out.reserve(live_rows_);
    for (uint64_t row = 0; row < n_rows_; ++row)
      if (live_[row]) out.push_back(row);
    return out;
  }

  std::vector<uint64_t> result = scan_atom(pred.conjuncts[0], opts, stats);
  for (size_t i = 1; i < pred.conjuncts.size() && !result.empty(); ++i)
    result = intersect_sorted(result, scan_atom(pred.conjuncts[i], opts, stats));
  return result;
}

uint32_t ColumnTable::code_at(const Column& col, uint64_t row) const {
  const size_t unit_idx = row / kImcuCapacity;
  imcu_reads_.fetch_add(1, std::memory_order_relaxed);
  return col.imcus[unit_idx].global_code_at(static_cast<uint32_t>(row % kImcuCapacity));
}

std::vector<uint32_t> ColumnTable::gather_codes(std::string_view column_name,
                                                std::span<const uint64_t> row_ids) const {
  const Column& col = column(column_name);
  std::vector<uint32_t> out;
  out.reserve(row_ids.size());
  size_t last_unit = SIZE_MAX;
  for (size_t i = 0; i < row_ids.size(); ++i) {
    const uint64_t row = row_ids[i];
    if (i > 0 && row_ids[i - 1] >= row)
      raise(ErrorCode::InvalidArgument, "row ids must be strictly ascending");
    if (!is_live(row))
      raise(ErrorCode::DeadRow, "row " + std::to_string(row) + " is not a live row");
    const size_t unit_idx = row / kImcuCapacity;
    if (unit_idx != last_unit) {
      imcu_reads_.fetch_add(1, std::memory_order_relaxed);
      last_unit = unit_idx;
    }
    out.push_back(col.imcus[unit_idx].global_code_at(static_cast<uint32_t>(row % kImcuCapacity)));
  }
  return out;
}

void ColumnTable::restore(std::vector<Column> columns, uint64_t n_rows, std::vector<uint8_t> live) {
  columns_ = std::move(columns);
  n_rows_ = n_rows;
  live_ = std::move(live);
  live_rows_ = 0;
  for (uint8_t b : live_) live_rows_ += b;
  schema_.columns.clear();
  for (const auto& col : columns_) schema_.columns.push_back({col.name, col.type});
}

}  // namespace advstore
