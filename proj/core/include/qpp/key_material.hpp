#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qpp/error.hpp"

namespace qpp {

/// Stream of key bits consumed by pad generators. Consumption is strictly
/// monotone; a bit handed out is never handed out again.
class BitSource {
public:
  virtual ~BitSource() = default;

  /// Next `bits` (1..32) key bits as one word, MSB-first.
  /// Throws Errc::insufficient_key when the stream cannot supply them.
  virtual std::uint32_t take_word(unsigned bits) = 0;

  virtual std::uint64_t bits_consumed() const noexcept = 0;
};

/// Finite pre-shared random bit string with a consumption cursor.
class KeyMaterial final : public BitSource {
public:
  /// All 8 * bytes.size() bits are available.
  explicit KeyMaterial(std::vector<std::uint8_t> bytes);

  /// Only the first bit_count bits of `bytes` are available.
  KeyMaterial(std::vector<std::uint8_t> bytes, std::uint64_t bit_count);

  std::uint64_t bits_total() const noexcept { return bit_count_; }
  std::uint64_t bits_remaining() const noexcept { return bit_count_ - cursor_; }
  std::uint64_t bits_consumed() const noexcept override { return cursor_; }

  std::uint32_t take_word(unsigned bits) override;

private:
  std::vector<std::uint8_t> bytes_;
  std::uint64_t bit_count_;
  std::uint64_t cursor_ = 0;
};

/// Unbounded deterministic bit source seeded from a 64-bit value. Used by
/// the sampling suites and the --unsafe-dev-key flag. A PRNG stream is NOT
/// key material; production pads must come from pre-shared true-random bits.
class PrngBitSource final : public BitSource {
public:
  explicit PrngBitSource(std::uint64_t seed) : engine_(seed) {}

  std::uint32_t take_word(unsigned bits) override;
  std::uint64_t bits_consumed() const noexcept override { return consumed_; }

  /// `count` bytes of the stream, e.g. to materialize a development key file.
  std::vector<std::uint8_t> take_bytes(std::size_t count);

private:
  std::mt19937_64 engine_;
  std::uint64_t buffer_ = 0;
  unsigned buffered_ = 0;
  std::uint64_t consumed_ = 0;
};

} // namespace qpp
