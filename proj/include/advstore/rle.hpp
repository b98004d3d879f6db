#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "advstore/bitpack.hpp"

namespace advstore {

struct RleRun {
  uint32_t code = 0;
  uint32_t length = 0;

  bool operator==(const RleRun&) const = default;
};

/// Run-length encoded code vector: maximal runs, adjacent runs hold distinct
/// codes, sum of lengths equals the encoded vector length.
struct RleVector {
  std::vector<RleRun> runs;

  size_t n_values() const;
  uint64_t payload_bytes() const { return runs.size() * sizeof(RleRun); }

  bool operator==(const RleVector&) const = default;
};

RleVector rle_encode_codes(std::span<const uint32_t> codes);
RleVector rle_encode(const PackedVector& packed);
PackedVector rle_decode(const RleVector& rle, unsigned bit_width);
std::vector<uint32_t> rle_decode_codes(const RleVector& rle);

}  // namespace advstore
