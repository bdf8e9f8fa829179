#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "qpp/cipher.hpp"

using qpp::CipherSession;
using qpp::Errc;
using qpp::Error;
using qpp::GeneratorId;
using qpp::PermutationTable;
using qpp::PrngBitSource;
using qpp::QuantumPermutationPad;
using qpp::Word;
using qpp::WordStream;

namespace {

QuantumPermutationPad example_pad() {
  std::vector<PermutationTable> tables;
  tables.push_back(PermutationTable::from_mapping(3, {1, 4, 2, 5, 3, 0, 7, 6}));
  return QuantumPermutationPad(3, std::move(tables), GeneratorId::naive_shuffle);
}

QuantumPermutationPad identity_pad(unsigned n, std::uint32_t length) {
  std::vector<PermutationTable> tables(length, PermutationTable::identity(n));
  return QuantumPermutationPad(n, std::move(tables), GeneratorId::naive_shuffle);
}

std::vector<std::uint8_t> random_bytes(std::mt19937_64& rng, std::size_t count) {
  std::vector<std::uint8_t> out(count);
  for (auto& b : out) {
    b = static_cast<std::uint8_t>(rng());
  }
  return out;
}

WordStream random_stream(unsigned n, std::size_t words, std::mt19937_64& rng) {
  WordStream s;
  s.n = n;
  s.original_bit_length = std::uint64_t{words} * n;
  s.words.resize(words);
  for (auto& w : s.words) {
    w = static_cast<Word>(rng() & (qpp::domain_size(n) - 1));
  }
  return s;
}

} // namespace

TEST_CASE("pack_bits segments MSB-first with right zero padding") {
  const std::vector<std::uint8_t> bytes = {0b01101101};
  const auto stream = qpp::pack_bits(3, bytes, 8);
  CHECK(stream.words == std::vector<Word>{3, 3, 2});
  CHECK(stream.original_bit_length == 8);

  const std::vector<std::uint8_t> data = {0x12, 0xAB, 0xFF};
  const auto byte_stream = qpp::pack_bits(8, data, 24);
  CHECK(byte_stream.words == std::vector<Word>{0x12, 0xAB, 0xFF});
  CHECK(byte_stream.original_bit_length == 24);

  const auto empty = qpp::pack_bits(5, {}, 0);
  CHECK(empty.words.empty());
  CHECK(empty.original_bit_length == 0);
}

TEST_CASE("unpack_bits inverts pack_bits") {
  const WordStream stream{3, {3, 3, 2}, 8};
  CHECK(qpp::unpack_bits(stream) == std::vector<std::uint8_t>{0b01101101});
  CHECK(qpp::unpack_bits(WordStream{4, {}, 0}).empty());

  std::mt19937_64 rng(31);
  for (unsigned n : {1u, 3u, 5u, 8u, 13u, 16u}) {
    for (int trial = 0; trial < 10000; ++trial) {
      const std::uint64_t bits = rng() % 257;
      auto bytes = random_bytes(rng, static_cast<std::size_t>((bits + 7) / 8));
      // Zero out bits past the declared length so the comparison is exact.
      if (bits % 8 != 0 && !bytes.empty()) {
        bytes.back() &= static_cast<std::uint8_t>(0xFFu << (8 - bits % 8));
      }
      const auto packed = qpp::pack_bits(n, bytes, bits);
      CHECK(qpp::unpack_bits(packed) == bytes);
    }
  }
}

TEST_CASE("unpack_bits rejects inconsistent declared lengths") {
  CHECK_THROWS_AS(qpp::unpack_bits(WordStream{3, {1, 2}, 100}), Error);
  CHECK_THROWS_AS(qpp::unpack_bits(WordStream{3, {1, 2}, 3}), Error);
  try {
    qpp::unpack_bits(WordStream{3, {1, 2}, 100});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::length_mismatch);
  }
  // 5 bits in 2 words of 3 bits is consistent.
  CHECK(qpp::unpack_bits(WordStream{3, {1, 2}, 5}).size() == 1);
}

TEST_CASE("word encryption follows the worked example") {
  const auto pad = example_pad();
  CHECK(qpp::encrypt_word(pad, 0, 3) == 5);
  CHECK(qpp::encrypt_word(pad, 17, 3) == 5); // single table, any index
  CHECK(qpp::decrypt_word(pad, 0, 5) == 3);
  CHECK_THROWS_AS(qpp::encrypt_word(pad, 0, 8), Error);
  CHECK_THROWS_AS(qpp::decrypt_word(pad, 0, 8), Error);
}

TEST_CASE("round-robin dispatch cycles the tables in order") {
  std::vector<PermutationTable> tables;
  tables.push_back(PermutationTable::from_xor_key(3, 1));
  tables.push_back(PermutationTable::from_xor_key(3, 2));
  const QuantumPermutationPad pad(3, std::move(tables), GeneratorId::naive_shuffle);
  CHECK(qpp::encrypt_word(pad, 0, 0) == 1);
  CHECK(qpp::encrypt_word(pad, 1, 0) == 2);
  CHECK(qpp::encrypt_word(pad, 2, 0) == 1);

  const auto id = identity_pad(4, 3);
  for (Word m = 0; m < 16; ++m) {
    CHECK(qpp::encrypt_word(id, m, m) == m);
  }

  // An xor pad decrypts by encrypting again at the same index.
  std::vector<PermutationTable> xors;
  xors.push_back(PermutationTable::from_xor_key(3, 5));
  xors.push_back(PermutationTable::from_xor_key(3, 6));
  const QuantumPermutationPad xor_pad(3, std::move(xors), GeneratorId::naive_shuffle);
  for (Word m = 0; m < 8; ++m) {
    CHECK(qpp::encrypt_word(xor_pad, 1, qpp::encrypt_word(xor_pad, 1, m)) == m);
  }
}

TEST_CASE("stream encryption reproduces the worked example") {
  CipherSession session(example_pad());
  const WordStream in{3, {3}, 3};
  const auto out = session.encrypt_stream(in);
  CHECK(out.words == std::vector<Word>{5});
  CHECK(out.original_bit_length == 3);
}

TEST_CASE("streams round trip across word sizes and pad lengths") {
  std::mt19937_64 rng(77);
  for (unsigned n : {3u, 8u}) {
    for (std::uint32_t m : {1u, 2u, 16u}) {
      PrngBitSource key(1000 + n + m);
      const auto pad = qpp::generate_pad(n, m, GeneratorId::naive_shuffle, key);
      CipherSession enc(pad);
      CipherSession dec(pad);
      const auto plain = random_stream(n, 100, rng);
      const auto cipher = enc.encrypt_stream(plain);
      CHECK(cipher.original_bit_length == plain.original_bit_length);
      CHECK(cipher.words.size() == plain.words.size());
      CHECK(dec.decrypt_stream(cipher) == plain);
    }
  }
}

TEST_CASE("identity pad leaves streams unchanged") {
  std::mt19937_64 rng(78);
  CipherSession session(identity_pad(5, 4));
  const auto plain = random_stream(5, 64, rng);
  CHECK(session.encrypt_stream(plain) == plain);
}

TEST_CASE("the word counter continues across calls") {
  std::mt19937_64 rng(79);
  PrngBitSource key(2024);
  const auto pad = qpp::generate_pad(8, 16, GeneratorId::unbiased, key);
  const auto plain = random_stream(8, 200, rng);

  CipherSession one_shot(pad);
  const auto expected = one_shot.encrypt_stream(plain);

  for (int trial = 0; trial < 50; ++trial) {
    CipherSession split(pad);
    const std::size_t cut_a = rng() % (plain.words.size() + 1);
    const std::size_t cut_b = cut_a + rng() % (plain.words.size() - cut_a + 1);
    const std::size_t cuts[4] = {0, cut_a, cut_b, plain.words.size()};
    std::vector<Word> stitched;
    for (int p = 0; p < 3; ++p) {
      WordStream piece;
      piece.n = plain.n;
      piece.words.assign(plain.words.begin() + cuts[p], plain.words.begin() + cuts[p + 1]);
      piece.original_bit_length = std::uint64_t{piece.words.size()} * plain.n;
      const auto enc = split.encrypt_stream(piece);
      stitched.insert(stitched.end(), enc.words.begin(), enc.words.end());
    }
    CHECK(stitched == expected.words);
    CHECK(split.word_counter() == plain.words.size());
  }

  // Decrypting two sequential encryptions as one call also works.
  CipherSession enc(pad);
  WordStream first = random_stream(8, 60, rng);
  WordStream second = random_stream(8, 41, rng);
  const auto c1 = enc.encrypt_stream(first);
  const auto c2 = enc.encrypt_stream(second);
  WordStream joined;
  joined.n = 8;
  joined.words = c1.words;
  joined.words.insert(joined.words.end(), c2.words.begin(), c2.words.end());
  joined.original_bit_length = std::uint64_t{joined.words.size()} * 8;
  CipherSession dec(pad);
  const auto plain_joined = dec.decrypt_stream(joined);
  std::vector<Word> expected_joined = first.words;
  expected_joined.insert(expected_joined.end(), second.words.begin(), second.words.end());
  CHECK(plain_joined.words == expected_joined);
}

TEST_CASE("decrypting with the wrong pad yields garbage") {
  std::mt19937_64 rng(80);
  PrngBitSource key_a(1);
  PrngBitSource key_b(2);
  const auto pad_a = qpp::generate_pad(8, 4, GeneratorId::naive_shuffle, key_a);
  const auto pad_b = qpp::generate_pad(8, 4, GeneratorId::naive_shuffle, key_b);
  const auto plain = random_stream(8, 64, rng);
  CipherSession enc(pad_a);
  CipherSession dec(pad_b);
  CHECK(dec.decrypt_stream(enc.encrypt_stream(plain)) != plain);
}

TEST_CASE("stream word-size mismatch is rejected") {
  CipherSession session(example_pad());
  std::mt19937_64 rng(81);
  const auto plain = random_stream(4, 8, rng);
  CHECK_THROWS_AS(session.encrypt_stream(plain), Error);
  try {
    session.encrypt_stream(plain);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::word_size_mismatch);
  }
}

TEST_CASE("otp reference: c = k xor m") {
  const std::vector<Word> key = {3};
  const std::vector<Word> msg = {2};
  CHECK(qpp::otp_encrypt(3, key, msg) == std::vector<Word>{1});

  std::mt19937_64 rng(82);
  const auto words = random_stream(8, 32, rng).words;
  const auto pad_words = random_stream(8, 32, rng).words;
  const auto cipher = qpp::otp_encrypt(8, pad_words, words);
  CHECK(qpp::otp_encrypt(8, pad_words, cipher) == words); // involution

  const std::vector<Word> zeros(words.size(), 0);
  CHECK(qpp::otp_encrypt(8, zeros, words) == words);

  CHECK_THROWS_AS(qpp::otp_encrypt(8, std::vector<Word>{1}, words), Error);
  CHECK_THROWS_AS(qpp::otp_encrypt(3, std::vector<Word>{9}, std::vector<Word>{1}), Error);
}

TEST_CASE("otp equals a QPP of xor tables") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t len = 1 + rng() % 48;
    const auto msg = random_stream(8, len, rng).words;
    const auto key = random_stream(8, len, rng).words;

    std::vector<PermutationTable> tables;
    tables.reserve(len);
    for (const Word k : key) {
      tables.push_back(PermutationTable::from_xor_key(8, k));
    }
    const QuantumPermutationPad pad(8, std::move(tables), GeneratorId::naive_shuffle);
    CipherSession session(pad);
    WordStream in{8, msg, std::uint64_t{len} * 8};
    CHECK(session.encrypt_stream(in).words == qpp::otp_encrypt(8, key, msg));
  }
}
