#include "qpp/permutation.hpp"

#include <numeric>
#include <string>

namespace qpp {

namespace {

void check_word_size(unsigned n) {
  if (n < kMinWordSize || n > kMaxWordSize) {
    throw Error(Errc::invalid_argument,
                "word size " + std::to_string(n) + " outside [1, 16]");
  }
}

unsigned check_dense_word_size(unsigned n) {
  if (n > kMaxDenseWordSize) {
    throw Error(Errc::too_large, "dense matrix view capped at word size " +
                                     std::to_string(kMaxDenseWordSize) + ", got " +
                                     std::to_string(n));
  }
  return n;
}

} // namespace

PermutationTable PermutationTable::identity(unsigned n) {
  check_word_size(n);
  std::vector<Word> map(domain_size(n));
  std::iota(map.begin(), map.end(), Word{0});
  return PermutationTable(Unchecked{}, n, std::move(map));
}

PermutationTable PermutationTable::from_mapping(unsigned n, std::vector<Word> entries) {
  check_word_size(n);
  const std::uint32_t size = domain_size(n);
  if (entries.size() != size) {
    throw Error(Errc::wrong_length, "mapping has " + std::to_string(entries.size()) +
                                        " entries, expected " + std::to_string(size));
  }
  std::vector<bool> seen(size, false);
  for (std::uint32_t i = 0; i < size; ++i) {
    const Word v = entries[i];
    if (v >= size) {
      throw Error(Errc::value_out_of_range,
                  "mapping entry " + std::to_string(i) + " is " + std::to_string(v) +
                      ", outside [0, " + std::to_string(size - 1) + "]");
    }
    if (seen[v]) {
      throw Error(Errc::duplicate_value,
                  "mapping value " + std::to_string(v) + " appears more than once");
    }
    seen[v] = true;
  }
  return PermutationTable(Unchecked{}, n, std::move(entries));
}

PermutationTable PermutationTable::from_xor_key(unsigned n, Word k) {
  check_word_size(n);
  const std::uint32_t size = domain_size(n);
  if (k >= size) {
    throw Error(Errc::value_out_of_range,
                "xor key " + std::to_string(k) + " outside [0, " + std::to_string(size - 1) + "]");
  }
  std::vector<Word> map(size);
  for (std::uint32_t i = 0; i < size; ++i) {
    map[i] = static_cast<Word>(i ^ k);
  }
  return PermutationTable(Unchecked{}, n, std::move(map));
}

Word PermutationTable::apply(Word m) const {
  if (m >= map_.size()) {
    throw Error(Errc::value_out_of_range,
                "word " + std::to_string(m) + " outside [0, " + std::to_string(map_.size() - 1) + "]");
  }
  return map_[m];
}

PermutationTable PermutationTable::inverse() const {
  std::vector<Word> inv(map_.size());
  for (std::uint32_t i = 0; i < map_.size(); ++i) {
    inv[map_[i]] = static_cast<Word>(i);
  }
  return PermutationTable(Unchecked{}, n_, std::move(inv));
}

bool PermutationTable::is_involution() const noexcept {
  for (std::uint32_t i = 0; i < map_.size(); ++i) {
    if (map_[map_[i]] != i) {
      return false;
    }
  }
  return true;
}

DenseMatrix PermutationTable::to_dense() const {
  return DenseMatrix(*this);
}

PermutationTable compose(const PermutationTable& outer, const PermutationTable& inner) {
  if (outer.word_size() != inner.word_size()) {
    throw Error(Errc::word_size_mismatch,
                "compose: word sizes " + std::to_string(outer.word_size()) + " and " +
                    std::to_string(inner.word_size()) + " differ");
  }
  std::vector<Word> map(inner.map_.size());
  for (std::uint32_t m = 0; m < map.size(); ++m) {
    map[m] = outer.map_[inner.map_[m]];
  }
  return PermutationTable(PermutationTable::Unchecked{}, outer.word_size(), std::move(map));
}

bool commutes(const PermutationTable& p, const PermutationTable& q) {
  if (p.word_size() != q.word_size()) {
    throw Error(Errc::word_size_mismatch,
                "commutes: word sizes " + std::to_string(p.word_size()) + " and " +
                    std::to_string(q.word_size()) + " differ");
  }
  const auto pm = p.mapping();
  const auto qm = q.mapping();
  for (std::uint32_t m = 0; m < pm.size(); ++m) {
    if (pm[qm[m]] != qm[pm[m]]) {
      return false;
    }
  }
  return true;
}

DenseMatrix::DenseMatrix(const PermutationTable& table)
    : DenseMatrix(check_dense_word_size(table.word_size()), table.size()) {
  const auto map = table.mapping();
  for (std::uint32_t i = 0; i < dim_; ++i) {
    bits_[std::size_t{i} * dim_ + map[i]] = 1;
  }
}

std::uint8_t DenseMatrix::at(std::uint32_t row, std::uint32_t col) const {
  if (row >= dim_ || col >= dim_) {
    throw Error(Errc::value_out_of_range, "matrix index outside " + std::to_string(dim_) +
                                              "x" + std::to_string(dim_));
  }
  return bits_[std::size_t{row} * dim_ + col];
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(n_, dim_);
  for (std::uint32_t i = 0; i < dim_; ++i) {
    for (std::uint32_t j = 0; j < dim_; ++j) {
      t.bits_[std::size_t{j} * dim_ + i] = bits_[std::size_t{i} * dim_ + j];
    }
  }
  return t;
}

} // namespace qpp
