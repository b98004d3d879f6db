#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "advstore/bitpack.hpp"
#include "advstore/rle.hpp"
#include "advstore/value.hpp"

namespace advstore {

inline constexpr uint32_t kImcuCapacity = 524288;  // 2^19 rows

/// Per-IMCU min/max over the original values of the rows it holds. Sound but
/// not tightened on delete: every live value lies within [min, max].
struct ZoneMap {
  std::optional<Value> min, max;

  void widen(const Value& v) {
    if (!min || value_less(v, *min)) min = v;
    if (!max || value_less(*max, v)) max = v;
  }

  bool excludes_point(const Value& v) const {
    if (!min) return true;  // no rows recorded
    return value_less(v, *min) || value_less(*max, v);
  }

  bool excludes_range(const Value& lo, const Value& hi) const {
    if (!min) return true;
    return value_less(hi, *min) || value_less(*max, lo);
  }
};

/// One In-Memory Compression Unit: up to kImcuCapacity rows of one column.
///
/// Codes appended to an open IMCU are staged as raw global codes; when the
/// unit fills it is sealed: a local dictionary (sorted global codes present in
/// the unit) remaps codes so the packed width is ceil(log2(local distinct)),
/// at most 19 bits, and the smaller of bit-packed vs RLE is kept.
class Imcu {
 public:
  Imcu(uint64_t row_base) : row_base_(row_base) {}

  uint64_t row_base() const { return row_base_; }
  uint32_t size() const { return n_; }
  bool full() const { return n_ == kImcuCapacity; }
  bool sealed() const { return sealed_; }
  bool uses_rle() const { return uses_rle_; }
  const ZoneMap& zone_map() const { return zone_; }

  void append(uint32_t global_code, const Value& v);
  void seal();

  uint32_t global_code_at(uint32_t offset) const;

  /// Appends the unit's global codes to `out` in row order.
  void unpack_global_codes(std::vector<uint32_t>& out) const;

  /// Packed/RLE payload bytes for a sealed unit; staging counted as-if
  /// bit-packed at the width its current distinct count needs.
  uint64_t encoded_payload_bytes() const;
  unsigned code_bit_width() const;

  const std::vector<uint32_t>& local_to_global() const { return local_to_global_; }
  const PackedVector& packed() const { return packed_; }
  const RleVector& rle() const { return rle_; }
  const std::vector<uint32_t>& staging() const { return staging_; }

  // Snapshot restore.
  static Imcu restore_sealed(uint64_t row_base, uint32_t n, ZoneMap zone,
                             std::vector<uint32_t> local_to_global, bool uses_rle,
                             PackedVector packed, RleVector rle);
  static Imcu restore_open(uint64_t row_base, ZoneMap zone, std::vector<uint32_t> staging);

 private:
  uint64_t row_base_ = 0;
  uint32_t n_ = 0;
  bool sealed_ = false;
  bool uses_rle_ = false;
  std::vector<uint32_t> staging_;          // open: global codes per row
  std::vector<uint32_t> local_to_global_;  // sealed: sorted ascending
  PackedVector packed_;                    // sealed, when !uses_rle_
  RleVector rle_;                          // sealed, when uses_rle_
  std::vector<uint32_t> rle_starts_;       // sealed+rle: run start offsets
  ZoneMap zone_;
};

}  // namespace advstore
