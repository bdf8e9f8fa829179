#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qpp/padgen.hpp"

namespace qpp {

/// A bit string segmented into n-bit words. original_bit_length records the
/// exact source length so the trailing zero padding can be stripped again.
struct WordStream {
  unsigned n = 8;
  std::vector<Word> words;
  std::uint64_t original_bit_length = 0;

  friend bool operator==(const WordStream&, const WordStream&) = default;
};

/// Split the first bit_count bits of `bytes` (MSB-first) into n-bit words.
/// The final partial word is zero-padded on the right.
WordStream pack_bits(unsigned n, std::span<const std::uint8_t> bytes,
                     std::uint64_t bit_count);

/// Inverse of pack_bits: ceil(original_bit_length / 8) bytes with any bits
/// past original_bit_length cleared. Validates word count against length.
std::vector<std::uint8_t> unpack_bits(const WordStream& stream);

/// Round-robin word encryption: table (index mod M) applied to m.
Word encrypt_word(const QuantumPermutationPad& pad, std::uint64_t index, Word m);
/// Inverse of encrypt_word at the same absolute index. Inverts the table on
/// the fly; for bulk decryption use CipherSession or pad.inverted().
Word decrypt_word(const QuantumPermutationPad& pad, std::uint64_t index, Word c);

/// Classical OTP reference: output[i] = key_words[i] ^ words[i]. Applying
/// it twice with the same key words restores the input. Equivalent to a
/// QPP built from from_xor_key(n, key_words[i]) with M = words.size().
std::vector<Word> otp_encrypt(unsigned n, std::span<const Word> key_words,
                              std::span<const Word> words);

/// Streaming cipher state: a pad plus the count of words processed so far.
/// The counter continues monotonically across calls, so a message split
/// into any number of stream calls encrypts exactly like one call. Use one
/// session per direction; sessions are single-owner mutable state.
class CipherSession {
public:
  explicit CipherSession(QuantumPermutationPad pad);

  const QuantumPermutationPad& pad() const noexcept { return pad_; }
  std::uint64_t word_counter() const noexcept { return counter_; }

  WordStream encrypt_stream(const WordStream& in);
  WordStream decrypt_stream(const WordStream& in);

private:
  QuantumPermutationPad pad_;
  QuantumPermutationPad inverse_;
  std::uint64_t counter_ = 0;
};

} // namespace qpp
