#pragma once

#include <atomic>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "advstore/adv.hpp"
#include "advstore/dictionary.hpp"
#include "advstore/imcu.hpp"
#include "advstore/predicate.hpp"
#include "advstore/schema.hpp"

namespace advstore {

struct Column {
  std::string name;
  ColumnType type;
  Dictionary dict;
  std::vector<Imcu> imcus;
  std::vector<Adv> advs;

  Column(std::string n, ColumnType t) : name(std::move(n)), type(t), dict(t) {}

  Adv* find_adv(std::string_view adv_name);
  const Adv* find_adv(std::string_view adv_name) const;
  const Adv& require_adv(std::string_view adv_name) const;

  uint64_t encoded_payload_bytes() const;  // dictionary + IMCU payloads
  uint64_t raw_text_bytes = 0;             // as-ingested uncompressed text size
};

enum class ExecMode { Serial, Parallel };

struct ScanOptions {
  ExecMode mode = ExecMode::Parallel;
  bool pruning = true;
};

struct ScanStats {
  uint64_t imcus_scanned = 0;
  uint64_t imcus_skipped = 0;
};

/// One table: per-column dictionaries + IMCU chains sharing a table-wide row
/// order and liveness bitmap. Single writer; concurrent readers may share the
/// table between mutations.
class ColumnTable {
 public:
  explicit ColumnTable(Schema schema);

  ColumnTable(ColumnTable&&) noexcept;
  ColumnTable& operator=(ColumnTable&&) noexcept;
  ColumnTable(const ColumnTable&) = delete;
  ColumnTable& operator=(const ColumnTable&) = delete;

  const Schema& schema() const { return schema_; }
  uint64_t n_rows() const { return n_rows_; }
  uint64_t live_rows() const { return live_rows_; }
  bool is_live(uint64_t row) const { return row < n_rows_ && live_[row]; }
  const std::vector<uint8_t>& liveness() const { return live_; }

  Column& column(std::string_view name);
  const Column& column(std::string_view name) const;
  Column& column(size_t idx) { return columns_[idx]; }
  const Column& column(size_t idx) const { return columns_[idx]; }
  size_t column_count() const { return columns_.size(); }

  void append_rows(const std::vector<std::vector<Value>>& rows);
  uint64_t delete_rows(const Predicate& pred, const ScanOptions& opts = {});

  std::vector<uint64_t> scan(const Predicate& pred, const ScanOptions& opts = {},
                             ScanStats* stats = nullptr) const;

  std::vector<uint32_t> gather_codes(std::string_view column, std::span<const uint64_t> row_ids) const;

  uint32_t code_at(const Column& col, uint64_t row) const;

  /// Monotone counter of IMCU payload reads, bumped once per unit touched by
  /// scans/gathers. Dictionary-only aggregates leave it unchanged; tests use
  /// it to prove the no-scan property.
  uint64_t imcu_read_count() const { return imcu_reads_.load(std::memory_order_relaxed); }

  std::string provenance;  // free-text load record, persisted with snapshots

  // Snapshot restore: replaces all row/IMCU/liveness state.
  void restore(std::vector<Column> columns, uint64_t n_rows, std::vector<uint8_t> live);

 private:
  void append_value(size_t col_idx, const Value& v);

  std::vector<uint64_t> scan_atom(const AtomPred& atom, const ScanOptions& opts,
                                  ScanStats* stats) const;

  Schema schema_;
  std::vector<Column> columns_;
  uint64_t n_rows_ = 0;
  uint64_t live_rows_ = 0;
  std::vector<uint8_t> live_;
  mutable std::atomic<uint64_t> imcu_reads_{0};
};

}  // namespace advstore
