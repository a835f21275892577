#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lexintel/aggregate.hpp"
#include "lexintel/language.hpp"

namespace lexintel {

inline constexpr std::size_t kDefaultPermutations = 100000;
inline constexpr std::size_t kMinPermutations = 1000;
inline constexpr std::uint64_t kDefaultSeed = 20240521;

// 1-based ranks; tied values share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> values);

// Pearson correlation of the average ranks. Throws Error on length mismatch,
// fewer than 3 observations, or a constant input.
double spearman(std::span<const double> x, std::span<const double> y);

// One-sided permutation estimate (1 + #{rho_perm >= rho}) / (1 + n_perm). Each
// permutation draws from its own engine derived from (seed, index), so the
// result is identical for any worker count.
double permutation_p_value(std::span<const double> x, std::span<const double> y, std::size_t n_perm,
                           std::uint64_t seed, unsigned workers = 1);

// Two-sided p-value from the t distribution with n - 2 degrees of freedom.
double t_approximation_p_value(double rho, std::size_t n);

// Human cloze accuracies in percent, keyed by (speaker, listener).
struct ClozeResults {
  std::map<std::pair<LanguageId, LanguageId>, double> scores;

  // CSV with header speaker,listener,score.
  static ClozeResults load(const std::filesystem::path& path);
};

struct CorrelationReport {
  ChannelConfig config;
  double rho = 0.0;
  double p_permutation = 1.0;
  double p_t_approximation = 1.0;
  std::size_t n = 0;
  std::size_t n_permutations = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<LanguageId, LanguageId>> used;
  std::vector<std::pair<LanguageId, LanguageId>> dropped;  // present on one side only
};

// Correlates matrix scores with cloze accuracies over the ordered pairs both
// cover, in (speaker, listener) order. Throws Error with fewer than 3 pairs.
CorrelationReport evaluate_against_cloze(const IntelligibilityMatrix& matrix, ChannelConfig config,
                                         const ClozeResults& cloze, std::size_t n_perm = kDefaultPermutations,
                                         std::uint64_t seed = kDefaultSeed, unsigned workers = 1);

void write_report_json(std::span<const CorrelationReport> reports, std::ostream& out);

}  // namespace lexintel
