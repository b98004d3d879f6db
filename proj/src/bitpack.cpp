#include "advstore/bitpack.hpp"

#include <bit>

#include "advstore/error.hpp"

namespace advstore {

namespace {

constexpr uint64_t width_mask(unsigned w) {
  return w >= 64 ? ~0ull : ((1ull << w) - 1);
}

}  // namespace

PackedVector::PackedVector(unsigned bit_width) : bit_width_(bit_width) {
  if (bit_width < 1 || bit_width > 32)
    raise(ErrorCode::InvalidArgument, "bit width must be in 1..32");
}

PackedVector PackedVector::pack(std::span<const uint32_t> codes, unsigned bit_width) {
  PackedVector pv(bit_width);
  pv.words_.resize((codes.size() * bit_width + 63) / 64, 0);
  for (uint32_t c : codes) pv.push_back(c);
  return pv;
}

void PackedVector::push_back(uint32_t code) {
  const uint64_t mask = width_mask(bit_width_);
  if ((code & ~mask) != 0)
    raise(ErrorCode::CodeOutOfRange, "code does not fit in packed width");
  const size_t bitpos = n_ * bit_width_;
  const size_t word = bitpos / 64;
  const unsigned off = bitpos % 64;
  if (word + 2 > words_.size()) words_.resize(word + 2, 0);
  words_[word] |= static_cast<uint64_t>(code) << off;
  if (off + bit_width_ > 64) words_[word + 1] |= static_cast<uint64_t>(code) >> (64 - off);
  ++n_;
}

uint32_t PackedVector::get(size_t i) const {
  const size_t bitpos = i * bit_width_;
  const size_t word = bitpos / 64;
  const unsigned off = bitpos % 64;
  uint64_t v = words_[word] >> off;
  if (off + bit_width_ > 64) v |= words_[word + 1] << (64 - off);
  return static_cast<uint32_t>(v & width_mask(bit_width_));
}

std::vector<uint32_t> PackedVector::unpack() const {
  std::vector<uint32_t> out(n_);
  for (size_t i = 0; i < n_; ++i) out[i] = get(i);
  return out;
}

void PackedVector::assign_raw(unsigned bit_width, size_t n, std::vector<uint64_t> words) {
  if (bit_width < 1 || bit_width > 32)
    raise(ErrorCode::InvalidArgument, "bit width must be in 1..32");
  bit_width_ = bit_width;
  n_ = n;
  words_ = std::move(words);
}

unsigned bits_for_cardinality(uint64_t cardinality) {
  if (cardinality == 0) raise(ErrorCode::InvalidCardinality, "cardinality must be >= 1");
  const unsigned exact = std::bit_width(cardinality - 1);  // ceil(log2(c)) for c >= 1
  return exact == 0 ? 1 : exact;
}

}  // namespace advstore
