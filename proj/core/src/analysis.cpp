#include "qpp/analysis.hpp"

#include <algorithm>
#include <cmath>
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

void check_enumerable(unsigned n) {
  check_word_size(n);
  if (n > 3) {
    throw Error(Errc::too_large,
                "exact enumeration of S_{2^n} capped at n = 3 (2^3! = 40320), got n = " +
                    std::to_string(n));
  }
}

} // namespace

double log2_factorial(std::uint64_t count) {
  if (count < 1) {
    throw Error(Errc::invalid_argument, "log2_factorial needs a positive count");
  }
  long double acc = 0.0L;
  for (std::uint64_t i = 2; i <= count; ++i) {
    acc += std::log2(static_cast<long double>(i));
  }
  return static_cast<double>(acc);
}

std::uint64_t factorial_exact(unsigned k) {
  if (k > 20) {
    throw Error(Errc::overflow, "exact factorial overflows 64 bits past 20!");
  }
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= k; ++i) {
    f *= i;
  }
  return f;
}

EntropyReport entropy_report(unsigned n, std::uint64_t pad_length) {
  check_word_size(n);
  if (pad_length < 1) {
    throw Error(Errc::invalid_argument, "pad length must be >= 1");
  }
  if (pad_length > UINT64_MAX / n) {
    throw Error(Errc::overflow, "otp bit count M*n overflows 64 bits");
  }
  EntropyReport report;
  report.n = n;
  report.pad_length = pad_length;
  report.otp_bits = pad_length * n;
  const double group_bits = log2_factorial(domain_size(n));
  report.qpp_bits = static_cast<double>(pad_length) * group_bits;
  report.log10_group_order = group_bits * std::log10(2.0);
  return report;
}

std::vector<PermutationTable> enumerate_group(unsigned n) {
  check_enumerable(n);
  const std::uint32_t size = domain_size(n);
  std::vector<Word> map(size);
  std::iota(map.begin(), map.end(), Word{0});
  std::vector<PermutationTable> tables;
  tables.reserve(factorial_exact(size));
  do {
    tables.push_back(PermutationTable::from_mapping(n, map));
  } while (std::next_permutation(map.begin(), map.end()));
  return tables;
}

std::uint64_t count_mappings(unsigned n, Word m, Word c) {
  check_enumerable(n);
  const std::uint32_t size = domain_size(n);
  if (m >= size || c >= size) {
    throw Error(Errc::value_out_of_range, "word outside [0, " + std::to_string(size - 1) + "]");
  }
  std::vector<Word> map(size);
  std::iota(map.begin(), map.end(), Word{0});
  std::uint64_t count = 0;
  do {
    if (map[m] == c) {
      ++count;
    }
  } while (std::next_permutation(map.begin(), map.end()));
  return count;
}

DegeneracyReport degeneracy_report(unsigned n) {
  check_enumerable(n);
  const std::uint32_t size = domain_size(n);
  std::vector<std::uint64_t> counts(std::size_t{size} * size, 0);
  std::vector<Word> map(size);
  std::iota(map.begin(), map.end(), Word{0});
  std::uint64_t order = 0;
  do {
    ++order;
    for (std::uint32_t m = 0; m < size; ++m) {
      ++counts[std::size_t{m} * size + map[m]];
    }
  } while (std::next_permutation(map.begin(), map.end()));

  DegeneracyReport report;
  report.n = n;
  report.group_order = order;
  report.expected_per_pair = factorial_exact(size - 1);
  report.pair_count = std::uint64_t{size} * size;
  const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
  report.min_count = *lo;
  report.max_count = *hi;
  report.all_pairs_equal =
      (*lo == report.expected_per_pair) && (*hi == report.expected_per_pair);
  return report;
}

XorSubgroupReport xor_subgroup_report(unsigned n) {
  check_word_size(n);
  if (n > 8) {
    throw Error(Errc::too_large, "pairwise xor subgroup checks capped at n = 8, got n = " +
                                     std::to_string(n));
  }
  const std::uint32_t size = domain_size(n);
  std::vector<PermutationTable> xors;
  xors.reserve(size);
  for (std::uint32_t k = 0; k < size; ++k) {
    xors.push_back(PermutationTable::from_xor_key(n, static_cast<Word>(k)));
  }

  XorSubgroupReport report;
  report.n = n;
  // Distinct images of 0 certify the tables are pairwise distinct.
  std::vector<bool> seen(size, false);
  report.size = 0;
  for (const auto& t : xors) {
    const Word image = t.apply(0);
    if (!seen[image]) {
      seen[image] = true;
      ++report.size;
    }
  }
  report.all_involutions =
      std::all_of(xors.begin(), xors.end(), [](const auto& t) { return t.is_involution(); });

  report.pair_count = std::uint64_t{size} * (size - 1) / 2;
  report.commuting_pairs = 0;
  for (std::uint32_t a = 0; a < size; ++a) {
    for (std::uint32_t b = a + 1; b < size; ++b) {
      if (commutes(xors[a], xors[b])) {
        ++report.commuting_pairs;
      }
    }
  }
  report.all_commute = report.commuting_pairs == report.pair_count;

  report.closure_holds = true;
  for (std::uint32_t a = 0; a < size && report.closure_holds; ++a) {
    for (std::uint32_t b = 0; b < size; ++b) {
      if (compose(xors[a], xors[b]) != xors[a ^ b]) {
        report.closure_holds = false;
        break;
      }
    }
  }
  return report;
}

CommutingReport commuting_fraction(unsigned n, CommuteMode mode, std::uint64_t samples,
                                   std::uint64_t seed) {
  check_word_size(n);
  CommutingReport report;
  report.n = n;
  report.mode = mode;
  report.seed = seed;

  if (mode == CommuteMode::exact) {
    if (n > 2) {
      throw Error(Errc::too_large,
                  "exact commuting-pair enumeration capped at n = 2 (S_4), got n = " +
                      std::to_string(n));
    }
    const auto group = enumerate_group(n);
    report.pairs = std::uint64_t{group.size()} * group.size();
    for (const auto& p : group) {
      for (const auto& q : group) {
        if (commutes(p, q)) {
          ++report.commuting;
        }
      }
    }
  } else {
    if (samples < 1) {
      throw Error(Errc::invalid_argument, "sampled mode needs samples >= 1");
    }
    PrngBitSource source(seed);
    report.pairs = samples;
    for (std::uint64_t i = 0; i < samples; ++i) {
      const PermutationTable p = shuffle_unbiased(n, source);
      const PermutationTable q = shuffle_unbiased(n, source);
      if (commutes(p, q)) {
        ++report.commuting;
      }
    }
  }
  report.fraction = static_cast<double>(report.commuting) / static_cast<double>(report.pairs);
  return report;
}

double chi_square_critical_999(unsigned dof) {
  // 99.9th percentile of chi-square, significance 0.001.
  switch (dof) {
    case 1: return 10.827566170662733;
    case 3: return 16.26623619623813;
    case 7: return 24.321886347856854;
    case 23: return 49.7282324664315;
    case 255: return 330.51974363400586;
  }
  throw Error(Errc::invalid_argument,
              "no embedded chi-square critical value for dof " + std::to_string(dof));
}

UniformityReport uniformity_chi_square(unsigned n, Word m, std::uint64_t samples,
                                       std::uint64_t seed, GeneratorId generator) {
  check_word_size(n);
  const std::uint32_t size = domain_size(n);
  if (m >= size) {
    throw Error(Errc::value_out_of_range, "word outside [0, " + std::to_string(size - 1) + "]");
  }
  const unsigned dof = size - 1;
  const double critical = chi_square_critical_999(dof); // rejects unsupported n
  if (samples < std::uint64_t{100} * size) {
    throw Error(Errc::invalid_argument,
                "need at least 100 * 2^n = " + std::to_string(std::uint64_t{100} * size) +
                    " samples, got " + std::to_string(samples));
  }

  UniformityReport report;
  report.n = n;
  report.word = m;
  report.samples = samples;
  report.seed = seed;
  report.generator = generator;
  report.dof = dof;
  report.critical_value = critical;
  report.histogram.assign(size, 0);

  PrngBitSource source(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const PermutationTable table = shuffle(generator, n, source);
    ++report.histogram[table.apply(m)];
  }

  const double expected = static_cast<double>(samples) / size;
  double stat = 0.0;
  for (const std::uint64_t observed : report.histogram) {
    const double d = static_cast<double>(observed) - expected;
    stat += d * d / expected;
  }
  report.statistic = stat;
  report.below_critical = stat < critical;
  return report;
}

} // namespace qpp
