#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qpp/error.hpp"

namespace qpp {

/// An n-bit word, n in [1, 16].
using Word = std::uint16_t;

inline constexpr unsigned kMinWordSize = 1;
inline constexpr unsigned kMaxWordSize = 16;
/// Dense 2^n x 2^n matrices are capped at n = 10 (a 1 Mi-bit matrix).
inline constexpr unsigned kMaxDenseWordSize = 10;

/// 2^n, the number of distinct n-bit words.
constexpr std::uint32_t domain_size(unsigned n) {
  return std::uint32_t{1} << n;
}

class DenseMatrix;
class PermutationTable;

/// outer after inner: result.apply(m) == outer.apply(inner.apply(m)).
PermutationTable compose(const PermutationTable& outer, const PermutationTable& inner);

/// A bijection on {0, ..., 2^n - 1} stored as a mapping array, i -> map[i].
/// Immutable after construction; all operations are pure and safe to run
/// concurrently on shared tables.
class PermutationTable {
public:
  static PermutationTable identity(unsigned n);

  /// Validated constructor. Rejects wrong length, out-of-range entries and
  /// duplicates with distinct error codes.
  static PermutationTable from_mapping(unsigned n, std::vector<Word> entries);

  /// The XOR table i -> i ^ k. Self-inverse for every k.
  static PermutationTable from_xor_key(unsigned n, Word k);

  unsigned word_size() const noexcept { return n_; }
  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(map_.size()); }
  std::span<const Word> mapping() const noexcept { return map_; }

  Word apply(Word m) const;

  /// Table Q with Q[map[i]] = i; compose(*this, inverse()) is the identity.
  PermutationTable inverse() const;

  bool is_involution() const noexcept;

  /// 0/1 matrix view with row i carrying its single 1 at column map[i].
  /// Requires n <= 10.
  DenseMatrix to_dense() const;

  friend bool operator==(const PermutationTable&, const PermutationTable&) = default;

private:
  struct Unchecked {};
  PermutationTable(Unchecked, unsigned n, std::vector<Word> map)
      : n_(n), map_(std::move(map)) {}

  friend PermutationTable compose(const PermutationTable&, const PermutationTable&);

  unsigned n_ = 0;
  std::vector<Word> map_;
};

bool commutes(const PermutationTable& p, const PermutationTable& q);

/// Binary permutation matrix: exactly one 1 per row and per column.
class DenseMatrix {
public:
  explicit DenseMatrix(const PermutationTable& table);

  unsigned word_size() const noexcept { return n_; }
  std::uint32_t dim() const noexcept { return dim_; }
  std::uint8_t at(std::uint32_t row, std::uint32_t col) const;

  DenseMatrix transposed() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
  DenseMatrix(unsigned n, std::uint32_t dim)
      : n_(n), dim_(dim), bits_(std::size_t{dim} * dim, 0) {}

  unsigned n_;
  std::uint32_t dim_;
  std::vector<std::uint8_t> bits_;
};

} // namespace qpp
