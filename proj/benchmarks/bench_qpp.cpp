#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "qpp/cipher.hpp"
#include "qpp/padgen.hpp"

namespace {

qpp::QuantumPermutationPad make_pad(unsigned n, std::uint32_t tables,
                                    qpp::GeneratorId generator) {
  qpp::PrngBitSource key(12345);
  return qpp::generate_pad(n, tables, generator, key);
}

void BM_Apply(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  qpp::PrngBitSource key(1);
  const auto table = qpp::shuffle_naive(n, key);
  std::mt19937_64 rng(2);
  std::vector<qpp::Word> words(4096);
  for (auto& w : words) {
    w = static_cast<qpp::Word>(rng() & (qpp::domain_size(n) - 1));
  }
  for (auto _ : state) {
    for (const auto w : words) {
      benchmark::DoNotOptimize(table.apply(w));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}
BENCHMARK(BM_Apply)->Arg(8)->Arg(16);

void BM_Compose(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  qpp::PrngBitSource key(3);
  const auto a = qpp::shuffle_naive(n, key);
  const auto b = qpp::shuffle_naive(n, key);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpp::compose(a, b));
  }
}
BENCHMARK(BM_Compose)->Arg(8)->Arg(16);

void BM_ShufflePaper(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  qpp::PrngBitSource key(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpp::shuffle_naive(n, key));
  }
}
BENCHMARK(BM_ShufflePaper)->Arg(3)->Arg(8)->Arg(16);

void BM_ShuffleUnbiased(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  qpp::PrngBitSource key(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpp::shuffle_unbiased(n, key));
  }
}
BENCHMARK(BM_ShuffleUnbiased)->Arg(3)->Arg(8)->Arg(16);

void BM_ShuffleRc4(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  qpp::PrngBitSource key(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpp::shuffle_rc4ksa(n, key));
  }
}
BENCHMARK(BM_ShuffleRc4)->Arg(8);

void BM_EncryptStream(benchmark::State& state) {
  const auto pad = make_pad(8, 16, qpp::GeneratorId::naive_shuffle);
  std::mt19937_64 rng(7);
  std::vector<std::uint8_t> plain(static_cast<std::size_t>(state.range(0)));
  for (auto& b : plain) {
    b = static_cast<std::uint8_t>(rng());
  }
  const auto stream = qpp::pack_bits(8, plain, std::uint64_t{plain.size()} * 8);
  qpp::CipherSession session(pad);
  for (auto _ : state) {
    benchmark::DoNotOptimize(session.encrypt_stream(stream));
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(plain.size()));
}
BENCHMARK(BM_EncryptStream)->Range(1 << 10, 1 << 20);

void BM_PackBits(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  std::mt19937_64 rng(8);
  std::vector<std::uint8_t> bytes(1 << 16);
  for (auto& b : bytes) {
    b = static_cast<std::uint8_t>(rng());
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpp::pack_bits(n, bytes, std::uint64_t{bytes.size()} * 8));
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(bytes.size()));
}
BENCHMARK(BM_PackBits)->Arg(3)->Arg(8)->Arg(16);

} // namespace

BENCHMARK_MAIN();
