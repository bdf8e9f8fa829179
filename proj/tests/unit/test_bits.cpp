#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "qpp/bits.hpp"

using qpp::BitReader;
using qpp::BitWriter;
using qpp::Errc;
using qpp::Error;

TEST_CASE("reader walks MSB-first") {
  const std::vector<std::uint8_t> bytes = {0b01101101, 0b10100000};
  BitReader r(bytes, 16);
  CHECK(r.read(3) == 0b011);
  CHECK(r.read(3) == 0b011);
  CHECK(r.read(3) == 0b011); // crosses the byte boundary: 01|1
  CHECK(r.read(7) == 0b0100000);
  CHECK(r.remaining() == 0);
}

TEST_CASE("reader respects the declared bit count") {
  const std::vector<std::uint8_t> bytes = {0xFF};
  BitReader r(bytes, 5);
  CHECK(r.read(5) == 0b11111);
  CHECK_THROWS_AS(r.read(1), Error);

  CHECK_THROWS_AS(BitReader(bytes, 9), Error); // more bits than the buffer holds
}

TEST_CASE("writer zero-pads the final byte") {
  BitWriter w;
  w.write(0b011, 3);
  w.write(0b011, 3);
  w.write(0b01, 2);
  w.write(0b1, 1);
  CHECK(w.bit_count() == 9);
  const auto bytes = w.take();
  REQUIRE(bytes.size() == 2);
  CHECK(bytes[0] == 0b01101101);
  CHECK(bytes[1] == 0b10000000);
}

TEST_CASE("random round trips across widths") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint32_t> values;
    std::vector<unsigned> widths;
    BitWriter w;
    const int count = 1 + static_cast<int>(rng() % 64);
    for (int i = 0; i < count; ++i) {
      const unsigned width = 1 + static_cast<unsigned>(rng() % 32);
      const std::uint32_t value =
          static_cast<std::uint32_t>(rng()) & (width == 32 ? 0xFFFFFFFFu : ((1u << width) - 1));
      w.write(value, width);
      values.push_back(value);
      widths.push_back(width);
    }
    const auto total = w.bit_count();
    const auto bytes = w.take();
    BitReader r(bytes, total);
    for (std::size_t i = 0; i < values.size(); ++i) {
      CHECK(r.read(widths[i]) == values[i]);
    }
    CHECK(r.remaining() == 0);
  }
}

TEST_CASE("width limits") {
  BitWriter w;
  CHECK_THROWS_AS(w.write(0, 0), Error);
  CHECK_THROWS_AS(w.write(0, 33), Error);
  const std::vector<std::uint8_t> bytes = {0, 0, 0, 0, 0};
  BitReader r(bytes, 40);
  CHECK_THROWS_AS(r.read(0), Error);
  CHECK_THROWS_AS(r.read(33), Error);
}
