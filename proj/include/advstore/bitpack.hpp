#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace advstore {

/// Fixed-width bit-packed code vector. Codes are laid out little-endian in a
/// contiguous bit stream: value i occupies bits [i*w, (i+1)*w), bit j lives in
/// byte j/8 at in-byte position j%8.
class PackedVector {
 public:
  PackedVector() = default;
  explicit PackedVector(unsigned bit_width);

  static PackedVector pack(std::span<const uint32_t> codes, unsigned bit_width);

  void push_back(uint32_t code);
  uint32_t get(size_t i) const;
  std::vector<uint32_t> unpack() const;

  size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }
  unsigned bit_width() const { return bit_width_; }

  /// Bytes of packed payload, excluding vector bookkeeping: ceil(n*w/8).
  uint64_t payload_bytes() const { return (static_cast<uint64_t>(n_) * bit_width_ + 7) / 8; }

  std::span<const uint64_t> words() const { return words_; }
  void assign_raw(unsigned bit_width, size_t n, std::vector<uint64_t> words);

  bool operator==(const PackedVector& other) const = default;

 private:
  unsigned bit_width_ = 1;
  size_t n_ = 0;
  std::vector<uint64_t> words_;
};

/// bits = max(1, ceil(log2(cardinality))). Floor of 1 keeps one-entry
/// dictionaries addressable.
unsigned bits_for_cardinality(uint64_t cardinality);

}  // namespace advstore
