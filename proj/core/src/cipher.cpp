#include "qpp/cipher.hpp"

#include <string>

#include "qpp/bits.hpp"

namespace qpp {

namespace {

void check_word_size(unsigned n) {
  if (n < kMinWordSize || n > kMaxWordSize) {
    throw Error(Errc::invalid_argument,
                "word size " + std::to_string(n) + " outside [1, 16]");
  }
}

std::uint64_t word_count_for(unsigned n, std::uint64_t bit_count) {
  return (bit_count + n - 1) / n;
}

void check_stream(const WordStream& stream) {
  check_word_size(stream.n);
  if (stream.words.size() != word_count_for(stream.n, stream.original_bit_length)) {
    throw Error(Errc::length_mismatch,
                "stream declares " + std::to_string(stream.original_bit_length) +
                    " bits but holds " + std::to_string(stream.words.size()) + " words of " +
                    std::to_string(stream.n) + " bits");
  }
}

} // namespace

WordStream pack_bits(unsigned n, std::span<const std::uint8_t> bytes,
                     std::uint64_t bit_count) {
  check_word_size(n);
  BitReader reader(bytes, bit_count);
  WordStream stream;
  stream.n = n;
  stream.original_bit_length = bit_count;
  stream.words.reserve(static_cast<std::size_t>(word_count_for(n, bit_count)));
  while (reader.remaining() >= n) {
    stream.words.push_back(static_cast<Word>(reader.read(n)));
  }
  if (reader.remaining() > 0) {
    const unsigned tail = static_cast<unsigned>(reader.remaining());
    const std::uint32_t partial = reader.read(tail);
    stream.words.push_back(static_cast<Word>(partial << (n - tail)));
  }
  return stream;
}

std::vector<std::uint8_t> unpack_bits(const WordStream& stream) {
  check_stream(stream);
  BitWriter writer;
  for (const Word w : stream.words) {
    if (w >= domain_size(stream.n)) {
      throw Error(Errc::value_out_of_range, "stream word " + std::to_string(w) +
                                                " does not fit " + std::to_string(stream.n) +
                                                " bits");
    }
    writer.write(w, stream.n);
  }
  std::vector<std::uint8_t> bytes = writer.take();
  const std::size_t keep = static_cast<std::size_t>((stream.original_bit_length + 7) / 8);
  bytes.resize(keep);
  const unsigned tail = static_cast<unsigned>(stream.original_bit_length & 7);
  if (tail != 0) {
    bytes.back() &= static_cast<std::uint8_t>(0xFFu << (8 - tail));
  }
  return bytes;
}

Word encrypt_word(const QuantumPermutationPad& pad, std::uint64_t index, Word m) {
  return pad.table(static_cast<std::size_t>(index % pad.length())).apply(m);
}

Word decrypt_word(const QuantumPermutationPad& pad, std::uint64_t index, Word c) {
  return pad.table(static_cast<std::size_t>(index % pad.length())).inverse().apply(c);
}

std::vector<Word> otp_encrypt(unsigned n, std::span<const Word> key_words,
                              std::span<const Word> words) {
  check_word_size(n);
  if (key_words.size() < words.size()) {
    throw Error(Errc::insufficient_key,
                "OTP key has " + std::to_string(key_words.size()) + " words, message has " +
                    std::to_string(words.size()));
  }
  const std::uint32_t size = domain_size(n);
  std::vector<Word> out(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i] >= size || key_words[i] >= size) {
      throw Error(Errc::value_out_of_range,
                  "OTP word at index " + std::to_string(i) + " does not fit " +
                      std::to_string(n) + " bits");
    }
    out[i] = static_cast<Word>(key_words[i] ^ words[i]);
  }
  return out;
}

CipherSession::CipherSession(QuantumPermutationPad pad)
    : pad_(std::move(pad)), inverse_(pad_.inverted()) {}

WordStream CipherSession::encrypt_stream(const WordStream& in) {
  check_stream(in);
  if (in.n != pad_.word_size()) {
    throw Error(Errc::word_size_mismatch,
                "stream word size " + std::to_string(in.n) + " does not match pad word size " +
                    std::to_string(pad_.word_size()));
  }
  WordStream out;
  out.n = in.n;
  out.original_bit_length = in.original_bit_length;
  out.words.reserve(in.words.size());
  const std::uint32_t pad_len = pad_.length();
  for (std::size_t i = 0; i < in.words.size(); ++i) {
    out.words.push_back(pad_.table(static_cast<std::size_t>((counter_ + i) % pad_len)).apply(in.words[i]));
  }
  counter_ += in.words.size();
  return out;
}

WordStream CipherSession::decrypt_stream(const WordStream& in) {
  check_stream(in);
  if (in.n != pad_.word_size()) {
    throw Error(Errc::word_size_mismatch,
                "stream word size " + std::to_string(in.n) + " does not match pad word size " +
                    std::to_string(pad_.word_size()));
  }
  WordStream out;
  out.n = in.n;
  out.original_bit_length = in.original_bit_length;
  out.words.reserve(in.words.size());
  const std::uint32_t pad_len = inverse_.length();
  for (std::size_t i = 0; i < in.words.size(); ++i) {
    out.words.push_back(inverse_.table(static_cast<std::size_t>((counter_ + i) % pad_len)).apply(in.words[i]));
  }
  counter_ += in.words.size();
  return out;
}

} // namespace qpp
