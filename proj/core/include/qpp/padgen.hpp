#pragma once

#include <cstdint>
#include <vector>

#include "qpp/key_material.hpp"
#include "qpp/permutation.hpp"

namespace qpp {

/// Pad generation algorithms. Values are fixed by the pad file format.
enum class GeneratorId : std::uint8_t {
  /// The construction's default key schedule: for i from 2^n-1 downto 1,
  /// j = k[i] with j unrestricted in [0, 2^n-1], swap S[j] and S[i].
  /// Statistically biased (j spans the full range, not [0, i]); k[0] is
  /// charged but never read.
  naive_shuffle = 0,
  /// Textbook Fisher-Yates: j drawn uniformly on [0, i] by rejection
  /// sampling on bit_width(i)-bit draws. Unbiased; variable key use.
  unbiased = 1,
  /// RC4 key scheduling generalized to n-bit words: one pass of
  /// j = (j + S[i] + key[i]) mod 2^n with swap S[i], S[j].
  rc4_ksa = 2,
};

const char* generator_name(GeneratorId id);

/// Nominal key cost of a pad: M * n * 2^n bits. Throws on overflow.
std::uint64_t required_key_bits(unsigned n, std::uint64_t pad_length);

/// Each shuffle consumes key words from `key` and returns a fresh table.
/// naive_shuffle and rc4_ksa consume exactly n * 2^n bits; unbiased
/// consumption varies with rejections.
PermutationTable shuffle_naive(unsigned n, BitSource& key);
PermutationTable shuffle_unbiased(unsigned n, BitSource& key);
PermutationTable shuffle_rc4ksa(unsigned n, BitSource& key);
PermutationTable shuffle(GeneratorId id, unsigned n, BitSource& key);

/// Ordered list of M permutation tables sharing one word size. Immutable
/// and freely shareable once built.
class QuantumPermutationPad {
public:
  QuantumPermutationPad(unsigned n, std::vector<PermutationTable> tables,
                        GeneratorId generator);

  unsigned word_size() const noexcept { return n_; }
  /// M, the pad length in tables.
  std::uint32_t length() const noexcept { return static_cast<std::uint32_t>(tables_.size()); }
  GeneratorId generator() const noexcept { return generator_; }

  const PermutationTable& table(std::size_t i) const { return tables_[i]; }
  const std::vector<PermutationTable>& tables() const noexcept { return tables_; }

  /// The decryption pad: every table inverted, same order, same n and M.
  QuantumPermutationPad inverted() const;

  friend bool operator==(const QuantumPermutationPad&, const QuantumPermutationPad&) = default;

private:
  unsigned n_;
  GeneratorId generator_;
  std::vector<PermutationTable> tables_;
};

/// Runs the chosen shuffle M times on successive key segments.
/// Deterministic: identical key and parameters give an identical pad.
QuantumPermutationPad generate_pad(unsigned n, std::uint32_t pad_length,
                                   GeneratorId generator, BitSource& key);

} // namespace qpp
