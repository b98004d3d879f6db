#include "advstore/imcu.hpp"

#include <algorithm>

#include "advstore/error.hpp"

namespace advstore {

void Imcu::append(uint32_t global_code, const Value& v) {
  if (sealed_ || n_ >= kImcuCapacity)
    raise(ErrorCode::CapacityExceeded, "append to sealed or full IMCU");
  staging_.push_back(global_code);
  zone_.widen(v);
  ++n_;
}

void Imcu::seal() {
  if (sealed_) return;
  local_to_global_ = staging_;
  std::sort(local_to_global_.begin(), local_to_global_.end());
  local_to_global_.erase(std::unique(local_to_global_.begin(), local_to_global_.end()),
                         local_to_global_.end());
  const unsigned width = bits_for_cardinality(std::max<uint64_t>(1, local_to_global_.size()));

  std::vector<uint32_t> local_codes(staging_.size());
  for (size_t i = 0; i < staging_.size(); ++i) {
    const auto it =
        std::lower_bound(local_to_global_.begin(), local_to_global_.end(), staging_[i]);
    local_codes[i] = static_cast<uint32_t>(it - local_to_global_.begin());
  }

  PackedVector packed = PackedVector::pack(local_codes, width);
  RleVector rle = rle_encode_codes(local_codes);
  if (rle.payload_bytes() < packed.payload_bytes()) {
    uses_rle_ = true;
    rle_ = std::move(rle);
    rle_starts_.clear();
    rle_starts_.reserve(rle_.runs.size());
    uint32_t start = 0;
    for (const auto& r : rle_.runs) {
      rle_starts_.push_back(start);
      start += r.length;
    }
  } else {
    uses_rle_ = false;
    packed_ = std::move(packed);
  }
  staging_.clear();
  staging_.shrink_to_fit();
  sealed_ = true;
}

uint32_t Imcu::global_code_at(uint32_t offset) const {
  if (offset >= n_) raise(ErrorCode::CodeOutOfRange, "row offset beyond IMCU size");
  if (!sealed_) return staging_[offset];
  if (uses_rle_) {
    auto it = std::upper_bound(rle_starts_.begin(), rle_starts_.end(), offset);
    const size_t run = static_cast<size_t>(it - rle_starts_.begin()) - 1;
    return local_to_global_[rle_.runs[run].code];
  }
  return local_to_global_[packed_.get(offset)];
}

void Imcu::unpack_global_codes(std::vector<uint32_t>& out) const {
  if (!sealed_) {
    out.insert(out.end(), staging_.begin(), staging_.end());
    return;
  }
  if (uses_rle_) {
    for (const auto& r : rle_.runs)
      out.insert(out.end(), r.length, local_to_global_[r.code]);
    return;
  }
  for (uint32_t i = 0; i < n_; ++i) out.push_back(local_to_global_[packed_.get(i)]);
}

uint64_t Imcu::encoded_payload_bytes() const {
  if (sealed_) {
    const uint64_t remap = local_to_global_.size() * sizeof(uint32_t);
    return remap + (uses_rle_ ? rle_.payload_bytes() : packed_.payload_bytes());
  }
  std::vector<uint32_t> distinct = staging_;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const unsigned width = bits_for_cardinality(std::max<uint64_t>(1, distinct.size()));
  return distinct.size() * sizeof(uint32_t) +
         (static_cast<uint64_t>(n_) * width + 7) / 8;
}

unsigned Imcu::code_bit_width() const {
  if (sealed_)
    return uses_rle_ ? bits_for_cardinality(std::max<uint64_t>(1, local_to_global_.size()))
                     : packed_.bit_width();
  std::vector<uint32_t> distinct = staging_;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  return bits_for_cardinality(std::max<uint64_t>(1, distinct.size()));
}

Imcu Imcu::restore_sealed(uint64_t row_base, uint32_t n, ZoneMap zone,
                          std::vector<uint32_t> local_to_global, bool uses_rle,
                          PackedVector packed, RleVector rle) {
  Imcu unit(row_base);
  unit.n_ = n;
  unit.sealed_ = true;
  unit.zone_ = std::move(zone);
  unit.local_to_global_ = std::move(local_to_global);
  unit.uses_rle_ = uses_rle;
  if (uses_rle) {
    unit.rle_ = std::move(rle);
    uint32_t start = 0;
    for (const auto& r : unit.rle_.runs) {
      unit.rle_starts_.push_back(start);
      start += r.length;
    }
  } else {
    unit.packed_ = std::move(packed);
  }
  return unit;
}

Imcu Imcu::restore_open(uint64_t row_base, ZoneMap zone, std::vector<uint32_t> staging) {
  Imcu unit(row_base);
  unit.n_ = static_cast<uint32_t>(staging.size());
  unit.zone_ = std::move(zone);
  unit.staging_ = std::move(staging);
  return unit;
}

}  // namespace advstore
