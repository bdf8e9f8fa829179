#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qpp/padgen.hpp"

namespace qpp {

/// Shannon entropy of an OTP versus a QPP with the same geometry.
struct EntropyReport {
  unsigned n = 0;
  std::uint64_t pad_length = 0;    // M
  std::uint64_t otp_bits = 0;      // M * n
  double qpp_bits = 0.0;           // M * log2(2^n !)
  double log10_group_order = 0.0;  // log10(2^n !)
};

/// log2(count!) = sum_{i=2}^{count} log2(i), accumulated in long double.
double log2_factorial(std::uint64_t count);

/// k! as an exact integer; k <= 20.
std::uint64_t factorial_exact(unsigned k);

EntropyReport entropy_report(unsigned n, std::uint64_t pad_length);

/// Every element of S_{2^n} in lexicographic order of mapping arrays.
/// Exact enumeration is capped at n <= 3 (40320 tables).
std::vector<PermutationTable> enumerate_group(unsigned n);

/// |{sigma in S_{2^n} : sigma(m) = c}| by exhaustive enumeration. n <= 3.
std::uint64_t count_mappings(unsigned n, Word m, Word c);

/// One enumeration sweep tallying sigma(m) = c counts for all (m, c) pairs.
struct DegeneracyReport {
  unsigned n = 0;
  std::uint64_t group_order = 0;        // tables enumerated
  std::uint64_t expected_per_pair = 0;  // (2^n - 1)!
  std::uint64_t min_count = 0;
  std::uint64_t max_count = 0;
  std::uint64_t pair_count = 0;         // 2^n * 2^n
  bool all_pairs_equal = false;

  bool passed() const { return all_pairs_equal; }
};
DegeneracyReport degeneracy_report(unsigned n);

/// Structural checks on {from_xor_key(n, k)}: size 2^n, every member an
/// involution, every pair commuting, closure X_a . X_b = X_{a xor b}. n <= 8.
struct XorSubgroupReport {
  unsigned n = 0;
  std::uint32_t size = 0;             // distinct tables found; must be 2^n
  std::uint64_t pair_count = 0;       // unordered pairs
  std::uint64_t commuting_pairs = 0;
  bool all_involutions = false;
  bool all_commute = false;
  bool closure_holds = false;

  bool passed() const {
    return size == domain_size(n) && all_involutions && all_commute && closure_holds;
  }
};
XorSubgroupReport xor_subgroup_report(unsigned n);

enum class CommuteMode { exact, sampled };

struct CommutingReport {
  unsigned n = 0;
  CommuteMode mode = CommuteMode::exact;
  std::uint64_t pairs = 0;      // ordered pairs examined
  std::uint64_t commuting = 0;
  double fraction = 0.0;
  std::uint64_t seed = 0;       // sampled mode only
};

/// Exact mode enumerates all ordered pairs of S_{2^n} (n <= 2); sampled
/// mode draws `samples` pairs of unbiased-shuffle tables from a seeded
/// generator.
CommutingReport commuting_fraction(unsigned n, CommuteMode mode,
                                   std::uint64_t samples = 0,
                                   std::uint64_t seed = 0);

/// 99.9th percentile of the chi-square distribution, embedded for the
/// degrees of freedom this suite uses: 1, 3, 7, 23 and 255.
double chi_square_critical_999(unsigned dof);

struct UniformityReport {
  unsigned n = 0;
  Word word = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  GeneratorId generator = GeneratorId::unbiased;
  unsigned dof = 0;
  double statistic = 0.0;
  double critical_value = 0.0;
  /// statistic < critical_value. Only meaningful as an assertion for the
  /// unbiased generator; for the biased naive shuffle the statistic is
  /// reported, not asserted.
  bool below_critical = false;
  std::vector<std::uint64_t> histogram;
};

/// Encrypts `m` with `samples` freshly drawn permutations and tests the
/// ciphertext histogram against uniform at significance 0.001.
/// Requires samples >= 100 * 2^n and n in {1, 2, 3, 8}.
UniformityReport uniformity_chi_square(unsigned n, Word m, std::uint64_t samples,
                                       std::uint64_t seed,
                                       GeneratorId generator = GeneratorId::unbiased);

/// Aggregate result of the verification suites for one word size.
struct SecrecyReport {
  unsigned n = 0;
  std::optional<std::uint64_t> group_order;          // exact for n <= 3
  std::optional<std::uint64_t> degeneracy_per_pair;  // (2^n - 1)!, n <= 3
  double log10_group_order = 0.0;
  bool uniform = false;
  double chi_square_statistic = 0.0;
  double commuting_pair_fraction = 0.0;
};

} // namespace qpp
