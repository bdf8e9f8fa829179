#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qpp/error.hpp"

namespace qpp {

// Bit order used everywhere in this project: bit index i lives in byte i/8
// at weight 1 << (7 - i%8), i.e. MSB-first within each byte.

/// Read-only bit cursor over a byte buffer.
class BitReader {
public:
  BitReader(std::span<const std::uint8_t> bytes, std::uint64_t bit_count);

  std::uint64_t remaining() const noexcept { return bit_count_ - pos_; }
  std::uint64_t position() const noexcept { return pos_; }

  /// Next `count` bits (1..32) as one value, MSB-first.
  std::uint32_t read(unsigned count);

private:
  std::span<const std::uint8_t> bytes_;
  std::uint64_t bit_count_;
  std::uint64_t pos_ = 0;
};

/// Append-only bit buffer; the final byte is zero-padded.
class BitWriter {
public:
  /// Append the low `count` bits (1..32) of `value`, MSB-first.
  void write(std::uint32_t value, unsigned count);

  std::uint64_t bit_count() const noexcept { return bit_count_; }
  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
  std::vector<std::uint8_t> take() { return std::move(bytes_); }

private:
  std::vector<std::uint8_t> bytes_;
  std::uint64_t bit_count_ = 0;
};

} // namespace qpp
