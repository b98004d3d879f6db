#include "advstore/rle.hpp"

namespace advstore {

size_t RleVector::n_values() const {
  size_t n = 0;
  for (const auto& r : runs) n += r.length;
  return n;
}

RleVector rle_encode_codes(std::span<const uint32_t> codes) {
  RleVector out;
  for (uint32_t c : codes) {
    if (!out.runs.empty() && out.runs.back().code == c) {
      ++out.runs.back().length;
    } else {
      out.runs.push_back({c, 1});
    }
  }
  return out;
}

RleVector rle_encode(const PackedVector& packed) {
  RleVector out;
  const size_t n = packed.size();
  for (size_t i = 0; i < n; ++i) {
    const uint32_t c = packed.get(i);
    if (!out.runs.empty() && out.runs.back().code == c) {
      ++out.runs.back().length;
    } else {
      out.runs.push_back({c, 1});
    }
  }
  return out;
}

std::vector<uint32_t> rle_decode_codes(const RleVector& rle) {
  std::vector<uint32_t> out;
  out.reserve(rle.n_values());
  for (const auto& r : rle.runs) out.insert(out.end(), r.length, r.code);
  return out;
}

PackedVector rle_decode(const RleVector& rle, unsigned bit_width) {
  auto codes = rle_decode_codes(rle);
  return PackedVector::pack(codes, bit_width);
}

}  // namespace advstore
