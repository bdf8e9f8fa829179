#include "qpp/bits.hpp"

#include <algorithm>
#include <string>

namespace qpp {

BitReader::BitReader(std::span<const std::uint8_t> bytes, std::uint64_t bit_count)
    : bytes_(bytes), bit_count_(bit_count) {
  if (bit_count > std::uint64_t{bytes.size()} * 8) {
    throw Error(Errc::length_mismatch,
                "bit count " + std::to_string(bit_count) + " exceeds buffer of " +
                    std::to_string(bytes.size()) + " bytes");
  }
}

std::uint32_t BitReader::read(unsigned count) {
  if (count < 1 || count > 32) {
    throw Error(Errc::invalid_argument, "bit read width must be in [1, 32]");
  }
  if (count > remaining()) {
    throw Error(Errc::truncated, "bit stream ended: wanted " + std::to_string(count) +
                                     " bits, " + std::to_string(remaining()) + " left");
  }
  std::uint32_t value = 0;
  while (count > 0) {
    const std::size_t byte = static_cast<std::size_t>(pos_ >> 3);
    const unsigned offset = static_cast<unsigned>(pos_ & 7);
    const unsigned take = std::min(count, 8 - offset);
    const unsigned shift = 8 - offset - take;
    const std::uint32_t chunk = (bytes_[byte] >> shift) & ((1u << take) - 1u);
    value = (value << take) | chunk;
    pos_ += take;
    count -= take;
  }
  return value;
}

void BitWriter::write(std::uint32_t value, unsigned count) {
  if (count < 1 || count > 32) {
    throw Error(Errc::invalid_argument, "bit write width must be in [1, 32]");
  }
  while (count > 0) {
    const unsigned offset = static_cast<unsigned>(bit_count_ & 7);
    if (offset == 0) {
      bytes_.push_back(0);
    }
    const unsigned put = std::min(count, 8 - offset);
    const std::uint32_t chunk = (value >> (count - put)) & ((1u << put) - 1u);
    bytes_.back() |= static_cast<std::uint8_t>(chunk << (8 - offset - put));
    bit_count_ += put;
    count -= put;
  }
}

} // namespace qpp
