#include "qpp/padgen.hpp"

#include <bit>
#include <numeric>
#include <string>
#include <utility>

namespace qpp {

namespace {

void check_word_size(unsigned n) {
  if (n < kMinWordSize || n > kMaxWordSize) {
    throw Error(Errc::invalid_argument,
                "word size " + std::to_string(n) + " outside [1, 16]");
  }
}

std::vector<Word> iota_states(std::uint32_t size) {
  std::vector<Word> s(size);
  std::iota(s.begin(), s.end(), Word{0});
  return s;
}

} // namespace

const char* generator_name(GeneratorId id) {
  switch (id) {
    case GeneratorId::naive_shuffle: return "naive";
    case GeneratorId::unbiased: return "unbiased";
    case GeneratorId::rc4_ksa: return "rc4";
  }
  return "unknown";
}

std::uint64_t required_key_bits(unsigned n, std::uint64_t pad_length) {
  check_word_size(n);
  if (pad_length < 1) {
    throw Error(Errc::invalid_argument, "pad length must be >= 1");
  }
  const std::uint64_t per_table = std::uint64_t{n} * domain_size(n);
  if (pad_length > UINT64_MAX / per_table) {
    throw Error(Errc::overflow, "key bit count M*n*2^n overflows 64 bits");
  }
  return pad_length * per_table;
}

PermutationTable shuffle_naive(unsigned n, BitSource& key) {
  check_word_size(n);
  const std::uint32_t size = domain_size(n);
  // All 2^n key words are charged even though the loop never reads k[0].
  std::vector<Word> k(size);
  for (auto& w : k) {
    w = static_cast<Word>(key.take_word(n));
  }
  std::vector<Word> s = iota_states(size);
  for (std::uint32_t i = size - 1; i >= 1; --i) {
    std::swap(s[k[i]], s[i]);
  }
  return PermutationTable::from_mapping(n, std::move(s));
}

PermutationTable shuffle_unbiased(unsigned n, BitSource& key) {
  check_word_size(n);
  const std::uint32_t size = domain_size(n);
  std::vector<Word> s = iota_states(size);
  for (std::uint32_t i = size - 1; i >= 1; --i) {
    const unsigned draw_bits = static_cast<unsigned>(std::bit_width(i));
    std::uint32_t j;
    do {
      j = key.take_word(draw_bits);
    } while (j > i);
    std::swap(s[j], s[i]);
  }
  return PermutationTable::from_mapping(n, std::move(s));
}

PermutationTable shuffle_rc4ksa(unsigned n, BitSource& key) {
  check_word_size(n);
  const std::uint32_t size = domain_size(n);
  std::vector<Word> k(size);
  for (auto& w : k) {
    w = static_cast<Word>(key.take_word(n));
  }
  std::vector<Word> s = iota_states(size);
  std::uint32_t j = 0;
  for (std::uint32_t i = 0; i < size; ++i) {
    j = (j + s[i] + k[i]) & (size - 1);
    std::swap(s[i], s[j]);
  }
  return PermutationTable::from_mapping(n, std::move(s));
}

PermutationTable shuffle(GeneratorId id, unsigned n, BitSource& key) {
  switch (id) {
    case GeneratorId::naive_shuffle: return shuffle_naive(n, key);
    case GeneratorId::unbiased: return shuffle_unbiased(n, key);
    case GeneratorId::rc4_ksa: return shuffle_rc4ksa(n, key);
  }
  throw Error(Errc::invalid_argument, "unknown generator id");
}

QuantumPermutationPad::QuantumPermutationPad(unsigned n,
                                             std::vector<PermutationTable> tables,
                                             GeneratorId generator)
    : n_(n), generator_(generator), tables_(std::move(tables)) {
  check_word_size(n_);
  if (tables_.empty()) {
    throw Error(Errc::invalid_argument, "a pad needs at least one table");
  }
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    if (tables_[i].word_size() != n_) {
      throw Error(Errc::word_size_mismatch,
                  "pad table " + std::to_string(i) + " has word size " +
                      std::to_string(tables_[i].word_size()) + ", pad has " +
                      std::to_string(n_));
    }
  }
}

QuantumPermutationPad QuantumPermutationPad::inverted() const {
  std::vector<PermutationTable> inv;
  inv.reserve(tables_.size());
  for (const auto& t : tables_) {
    inv.push_back(t.inverse());
  }
  return QuantumPermutationPad(n_, std::move(inv), generator_);
}

QuantumPermutationPad generate_pad(unsigned n, std::uint32_t pad_length,
                                   GeneratorId generator, BitSource& key) {
  check_word_size(n);
  if (pad_length < 1) {
    throw Error(Errc::invalid_argument, "pad length must be >= 1");
  }
  std::vector<PermutationTable> tables;
  tables.reserve(pad_length);
  for (std::uint32_t i = 0; i < pad_length; ++i) {
    try {
      tables.push_back(shuffle(generator, n, key));
    } catch (const Error& e) {
      if (e.code() == Errc::insufficient_key) {
        throw Error(Errc::insufficient_key,
                    "key ran out at table " + std::to_string(i) + " of " +
                        std::to_string(pad_length) + ": " + e.what());
      }
      throw;
    }
  }
  return QuantumPermutationPad(n, std::move(tables), generator);
}

} // namespace qpp
