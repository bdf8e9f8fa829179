#include "qpp/key_material.hpp"

#include <algorithm>
#include <string>

namespace qpp {

namespace {

void check_width(unsigned bits) {
  if (bits < 1 || bits > 32) {
    throw Error(Errc::invalid_argument, "key word width must be in [1, 32]");
  }
}

} // namespace

KeyMaterial::KeyMaterial(std::vector<std::uint8_t> bytes)
    : bytes_(std::move(bytes)), bit_count_(std::uint64_t{bytes_.size()} * 8) {}

KeyMaterial::KeyMaterial(std::vector<std::uint8_t> bytes, std::uint64_t bit_count)
    : bytes_(std::move(bytes)), bit_count_(bit_count) {
  if (bit_count_ > std::uint64_t{bytes_.size()} * 8) {
    throw Error(Errc::length_mismatch,
                "declared " + std::to_string(bit_count_) + " key bits but only " +
                    std::to_string(bytes_.size()) + " bytes supplied");
  }
}

std::uint32_t KeyMaterial::take_word(unsigned bits) {
  check_width(bits);
  if (bits > bits_remaining()) {
    throw Error(Errc::insufficient_key,
                "key material exhausted: wanted " + std::to_string(bits) + " bits after " +
                    std::to_string(cursor_) + " consumed, " +
                    std::to_string(bits_remaining()) + " left");
  }
  std::uint32_t value = 0;
  unsigned left = bits;
  while (left > 0) {
    const std::size_t byte = static_cast<std::size_t>(cursor_ >> 3);
    const unsigned offset = static_cast<unsigned>(cursor_ & 7);
    const unsigned take = std::min(left, 8 - offset);
    const unsigned shift = 8 - offset - take;
    const std::uint32_t chunk = (bytes_[byte] >> shift) & ((1u << take) - 1u);
    value = (value << take) | chunk;
    cursor_ += take;
    left -= take;
  }
  return value;
}

std::uint32_t PrngBitSource::take_word(unsigned bits) {
  check_width(bits);
  std::uint64_t value = 0; // 64-bit so a full 32-bit accumulate never shifts by 32
  unsigned left = bits;
  while (left > 0) {
    if (buffered_ == 0) {
      buffer_ = engine_();
      buffered_ = 64;
    }
    const unsigned take = std::min(left, buffered_);
    const std::uint64_t chunk = (buffer_ >> (buffered_ - take)) & ((std::uint64_t{1} << take) - 1);
    value = (value << take) | chunk;
    buffered_ -= take;
    left -= take;
    consumed_ += take;
  }
  return static_cast<std::uint32_t>(value);
}

std::vector<std::uint8_t> PrngBitSource::take_bytes(std::size_t count) {
  std::vector<std::uint8_t> out(count);
  for (auto& b : out) {
    b = static_cast<std::uint8_t>(take_word(8));
  }
  return out;
}

} // namespace qpp
