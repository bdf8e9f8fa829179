#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qpp/padgen.hpp"

using qpp::Errc;
using qpp::Error;
using qpp::GeneratorId;
using qpp::KeyMaterial;
using qpp::PermutationTable;
using qpp::PrngBitSource;
using qpp::QuantumPermutationPad;
using qpp::Word;

namespace {

std::vector<std::uint8_t> zero_bytes(std::size_t count) {
  return std::vector<std::uint8_t>(count, 0);
}

// Independent reference: the classic byte-oriented RC4 key schedule with
// key repetition, straight from the textbook description.
std::array<std::uint8_t, 256> rc4_ksa_reference(std::span<const std::uint8_t> key) {
  std::array<std::uint8_t, 256> s{};
  for (unsigned i = 0; i < 256; ++i) {
    s[i] = static_cast<std::uint8_t>(i);
  }
  unsigned j = 0;
  for (unsigned i = 0; i < 256; ++i) {
    j = (j + s[i] + key[i % key.size()]) & 0xFF;
    std::swap(s[i], s[j]);
  }
  return s;
}

} // namespace

TEST_CASE("key material serves MSB-first words of any width") {
  KeyMaterial key({0x01, 0x02, 0x03, 0x04, 0x05});
  CHECK(key.bits_total() == 40);
  CHECK(key.take_word(32) == 0x01020304u);
  CHECK(key.take_word(8) == 0x05u);
  CHECK(key.bits_remaining() == 0);

  KeyMaterial nibbles({0xAB, 0xCD});
  CHECK(nibbles.take_word(4) == 0xA);
  CHECK(nibbles.take_word(12) == 0xBCD);
}

TEST_CASE("prng bit source is deterministic per seed") {
  PrngBitSource a(123);
  PrngBitSource b(123);
  for (const unsigned width : {1u, 7u, 16u, 32u, 3u}) {
    CHECK(a.take_word(width) == b.take_word(width));
  }
  CHECK(a.bits_consumed() == 59);

  PrngBitSource c(124);
  PrngBitSource d(123);
  bool all_equal = true;
  for (int i = 0; i < 8; ++i) {
    all_equal = all_equal && (c.take_word(32) == d.take_word(32));
  }
  CHECK_FALSE(all_equal);
}

TEST_CASE("required_key_bits follows M * n * 2^n") {
  CHECK(qpp::required_key_bits(8, 16) == 32768);
  CHECK(qpp::required_key_bits(3, 1) == 24);
  CHECK(qpp::required_key_bits(8, 1) == 2048);
  CHECK_THROWS_AS(qpp::required_key_bits(16, UINT64_MAX / 4), Error);
  CHECK_THROWS_AS(qpp::required_key_bits(0, 1), Error);
  CHECK_THROWS_AS(qpp::required_key_bits(3, 0), Error);
}

TEST_CASE("naive shuffle: all-zero key gives the left cyclic shift") {
  KeyMaterial key(zero_bytes(3)); // 24 bits, one table at n = 3
  const auto table = qpp::shuffle_naive(3, key);
  const std::vector<Word> expected = {1, 2, 3, 4, 5, 6, 7, 0};
  CHECK(std::equal(table.mapping().begin(), table.mapping().end(), expected.begin(),
                   expected.end()));
  CHECK(key.bits_consumed() == 24);
}

TEST_CASE("naive shuffle: k[i] = i swaps every element with itself") {
  // Words 0..7 as 3-bit MSB-first packing: 000 001 010 011 100 101 110 111.
  KeyMaterial key({0x05, 0x39, 0x77});
  const auto table = qpp::shuffle_naive(3, key);
  CHECK(table == PermutationTable::identity(3));
}

TEST_CASE("naive shuffle never reads k[0]") {
  PrngBitSource prng(11);
  auto bytes = prng.take_bytes(256); // n = 8: one byte per key word
  KeyMaterial a(bytes);
  const auto table_a = qpp::shuffle_naive(8, a);

  auto flipped = bytes;
  flipped[0] ^= 0xFF; // k[0] changes, the loop starts at i = 2^n - 1
  KeyMaterial b(flipped);
  CHECK(qpp::shuffle_naive(8, b) == table_a);

  flipped = bytes;
  flipped[1] ^= 0x01; // k[1] participates
  KeyMaterial c(flipped);
  CHECK(qpp::shuffle_naive(8, c) != table_a);
}

TEST_CASE("naive shuffle output is always a bijection") {
  PrngBitSource prng(17);
  for (unsigned n : {1u, 2u, 3u, 5u, 8u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto table = qpp::shuffle_naive(n, prng);
      std::vector<Word> sorted(table.mapping().begin(), table.mapping().end());
      std::sort(sorted.begin(), sorted.end());
      for (std::uint32_t i = 0; i < sorted.size(); ++i) {
        REQUIRE(sorted[i] == i);
      }
    }
  }
}

TEST_CASE("naive shuffle reports missing key bits") {
  KeyMaterial key(zero_bytes(2)); // 16 bits < 24
  CHECK_THROWS_AS(qpp::shuffle_naive(3, key), Error);
  try {
    KeyMaterial short_key(zero_bytes(2));
    qpp::shuffle_naive(3, short_key);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::insufficient_key);
  }
}

TEST_CASE("unbiased shuffle: S_2 goldens follow the draw") {
  // i = 1, one 1-bit draw: j = 0 swaps S[0] and S[1]; j = 1 leaves identity.
  KeyMaterial zero({0x00});
  const auto swapped = qpp::shuffle_unbiased(1, zero);
  const std::vector<Word> expected = {1, 0};
  CHECK(std::equal(swapped.mapping().begin(), swapped.mapping().end(), expected.begin(),
                   expected.end()));
  CHECK(zero.bits_consumed() == 1);

  KeyMaterial one({0x80});
  CHECK(qpp::shuffle_unbiased(1, one) == PermutationTable::identity(1));
}

TEST_CASE("unbiased shuffle is uniform over all 24 tables of S_4") {
  // Index every element of S_4 (independent enumeration), then sample.
  std::map<std::vector<Word>, int> index;
  std::vector<Word> map = {0, 1, 2, 3};
  int next = 0;
  do {
    index[map] = next++;
  } while (std::next_permutation(map.begin(), map.end()));
  REQUIRE(next == 24);

  constexpr std::uint64_t kSamples = 100000;
  std::vector<std::uint64_t> hist(24, 0);
  PrngBitSource prng(2024);
  for (std::uint64_t s = 0; s < kSamples; ++s) {
    const auto table = qpp::shuffle_unbiased(2, prng);
    std::vector<Word> m(table.mapping().begin(), table.mapping().end());
    ++hist[static_cast<std::size_t>(index.at(m))];
  }
  const double expected = static_cast<double>(kSamples) / 24.0;
  double stat = 0.0;
  for (const auto observed : hist) {
    const double d = static_cast<double>(observed) - expected;
    stat += d * d / expected;
  }
  // 99.9th percentile of chi-square with dof 23.
  CHECK(stat < 49.7282324664315);
}

TEST_CASE("unbiased shuffle reports bits consumed when the stream runs dry") {
  KeyMaterial key(zero_bytes(2), 10); // zero draws are never rejected
  try {
    qpp::shuffle_unbiased(3, key);
    FAIL("expected insufficient_key");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::insufficient_key);
    CHECK(std::string(e.what()).find("fter 9") != std::string::npos);
  }
  CHECK(key.bits_consumed() == 9);
}

TEST_CASE("rc4 key schedule: all-zero key golden value") {
  KeyMaterial key(zero_bytes(3));
  const auto table = qpp::shuffle_rc4ksa(3, key);
  // Hand trace of j = (j + S[i] + 0) mod 8 with swaps, i = 0..7.
  const std::vector<Word> expected = {7, 6, 3, 2, 1, 5, 4, 0};
  CHECK(std::equal(table.mapping().begin(), table.mapping().end(), expected.begin(),
                   expected.end()));
  CHECK(key.bits_consumed() == 24);
}

TEST_CASE("rc4 key schedule matches the classic KSA at n = 8") {
  const std::vector<std::uint8_t> short_key = {0x01, 0x02, 0x03, 0x04, 0x05};
  std::vector<std::uint8_t> repeated(256);
  for (std::size_t i = 0; i < repeated.size(); ++i) {
    repeated[i] = short_key[i % short_key.size()];
  }
  KeyMaterial key(repeated);
  const auto table = qpp::shuffle_rc4ksa(8, key);
  const auto reference = rc4_ksa_reference(short_key);
  for (std::uint32_t i = 0; i < 256; ++i) {
    REQUIRE(table.mapping()[i] == reference[i]);
  }
}

TEST_CASE("generate_pad is deterministic and accounts every bit") {
  PrngBitSource prng(3);
  const auto bytes = prng.take_bytes(4096);

  for (const auto generator : {GeneratorId::naive_shuffle, GeneratorId::rc4_ksa}) {
    KeyMaterial a(bytes);
    KeyMaterial b(bytes);
    const auto pad_a = qpp::generate_pad(8, 16, generator, a);
    const auto pad_b = qpp::generate_pad(8, 16, generator, b);
    CHECK(pad_a == pad_b);
    CHECK(a.bits_consumed() == qpp::required_key_bits(8, 16));
    CHECK(pad_a.length() == 16);
    CHECK(pad_a.word_size() == 8);
    CHECK(pad_a.generator() == generator);
  }

  for (const auto [n, m] : std::vector<std::pair<unsigned, std::uint32_t>>{{3, 5}, {5, 3}, {8, 2}}) {
    KeyMaterial key(bytes);
    qpp::generate_pad(n, m, GeneratorId::naive_shuffle, key);
    CHECK(key.bits_consumed() == qpp::required_key_bits(n, m));
    KeyMaterial key2(bytes);
    qpp::generate_pad(n, m, GeneratorId::rc4_ksa, key2);
    CHECK(key2.bits_consumed() == qpp::required_key_bits(n, m));
  }
}

TEST_CASE("generate_pad with the all-zero key repeats the zero-key table") {
  KeyMaterial key(zero_bytes(6)); // 48 bits = two tables at n = 3
  const auto pad = qpp::generate_pad(3, 2, GeneratorId::naive_shuffle, key);
  const std::vector<Word> expected = {1, 2, 3, 4, 5, 6, 7, 0};
  for (std::uint32_t i = 0; i < 2; ++i) {
    CHECK(std::equal(pad.table(i).mapping().begin(), pad.table(i).mapping().end(),
                     expected.begin(), expected.end()));
  }
}

TEST_CASE("generate_pad names the table where key ran out") {
  KeyMaterial key(zero_bytes(5)); // 40 bits: table 0 takes 24, table 1 fails
  try {
    qpp::generate_pad(3, 2, GeneratorId::naive_shuffle, key);
    FAIL("expected insufficient_key");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::insufficient_key);
    CHECK(std::string(e.what()).find("table 1") != std::string::npos);
  }
}

TEST_CASE("pad construction validates word sizes") {
  std::vector<PermutationTable> tables;
  tables.push_back(PermutationTable::identity(3));
  tables.push_back(PermutationTable::identity(4));
  CHECK_THROWS_AS(QuantumPermutationPad(3, std::move(tables), GeneratorId::naive_shuffle), Error);
  CHECK_THROWS_AS(QuantumPermutationPad(3, {}, GeneratorId::naive_shuffle), Error);
}

TEST_CASE("inverted pad undoes the original, table by table") {
  PrngBitSource prng(8);
  const auto pad = qpp::generate_pad(4, 5, GeneratorId::unbiased, prng);
  const auto inv = pad.inverted();
  CHECK(inv.length() == pad.length());
  CHECK(inv.word_size() == pad.word_size());
  for (std::uint32_t i = 0; i < pad.length(); ++i) {
    for (std::uint32_t m = 0; m < qpp::domain_size(4); ++m) {
      CHECK(inv.table(i).apply(pad.table(i).apply(static_cast<Word>(m))) == m);
    }
  }
  CHECK(inv.inverted() == pad);
}

TEST_CASE("a pad of xor tables is its own inverse") {
  std::vector<PermutationTable> tables;
  for (Word k = 0; k < 8; ++k) {
    tables.push_back(PermutationTable::from_xor_key(3, k));
  }
  const QuantumPermutationPad pad(3, std::move(tables), GeneratorId::naive_shuffle);
  CHECK(pad.inverted() == pad);
}

TEST_CASE("inverting the worked-example pad gives the transpose table") {
  std::vector<PermutationTable> tables;
  tables.push_back(PermutationTable::from_mapping(3, {1, 4, 2, 5, 3, 0, 7, 6}));
  const QuantumPermutationPad pad(3, std::move(tables), GeneratorId::naive_shuffle);
  const auto inv = pad.inverted();
  const std::vector<Word> expected = {5, 0, 2, 4, 1, 3, 7, 6};
  CHECK(std::equal(inv.table(0).mapping().begin(), inv.table(0).mapping().end(),
                   expected.begin(), expected.end()));
}
