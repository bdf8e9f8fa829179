#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qpp/cipher.hpp"
#include "qpp/padgen.hpp"

namespace qpp {

// Both formats are little-endian for every multi-byte field and identical
// on every platform. Pad files carry pre-shared secrets and are written in
// the clear; protecting them at rest is the operator's job.

inline constexpr std::array<std::uint8_t, 4> kPadMagic = {'Q', 'P', 'P', '1'};
inline constexpr std::array<std::uint8_t, 4> kContainerMagic = {'Q', 'P', 'P', 'C'};
inline constexpr std::uint8_t kFormatVersion = 1;

/// Pad file layout: magic "QPP1", version byte, n byte, M as 2 bytes LE,
/// generator id byte, 3 reserved zero bytes, then M tables of 2^n entries,
/// each entry 2 bytes LE regardless of n. Total 12 + M * 2^n * 2 bytes.
std::uint64_t pad_file_size(unsigned n, std::uint32_t pad_length);

/// Writes the pad; returns the byte count. Requires M <= 65535.
std::uint64_t write_pad(const QuantumPermutationPad& pad, std::ostream& sink);

/// Validates magic, version, header ranges and the bijectivity of every
/// table (distinct errors for each failure) before returning.
QuantumPermutationPad read_pad(std::istream& source);

/// Framed ciphertext: word size, exact plaintext bit length, payload of
/// ceil(word_count * n / 8) bytes holding the words packed MSB-first.
struct CiphertextContainer {
  unsigned n = 8;
  std::uint64_t original_bit_length = 0;
  std::vector<std::uint8_t> payload;

  friend bool operator==(const CiphertextContainer&, const CiphertextContainer&) = default;
};

CiphertextContainer container_from_stream(const WordStream& stream);
WordStream stream_from_container(const CiphertextContainer& container);

/// Container layout: magic "QPPC", version byte, n byte,
/// original_bit_length as 8 bytes LE, payload. Total 14 + payload bytes.
std::uint64_t write_container(const CiphertextContainer& container, std::ostream& sink);
CiphertextContainer read_container(std::istream& source);

} // namespace qpp
