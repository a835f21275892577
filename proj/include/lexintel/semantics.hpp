#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lexintel/language.hpp"
#include "lexintel/stemmer.hpp"

namespace lexintel {

enum class Resolution { exact, fallback, missing };

std::string_view to_string(Resolution r) noexcept;

struct ResolvedVector {
  Resolution kind = Resolution::missing;
  std::string_view word;         // store key that supplied the vector
  std::span<const float> vector;
};

// Static word vectors in word2vec text format. Keys are indexed verbatim, by
// accent-stripped form, by stem and by three-letter prefix.
class EmbeddingStore {
 public:
  static EmbeddingStore load(const std::filesystem::path& path, LanguageId lang);

  // Builds a store from in-memory rows (first occurrence of a word wins).
  static EmbeddingStore from_rows(LanguageId lang, std::size_t dim,
                                  std::span<const std::pair<std::string, std::vector<float>>> rows);

  LanguageId language() const noexcept { return lang_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return words_.size(); }
  std::size_t duplicates() const noexcept { return duplicates_; }

  std::span<const float> vector(std::size_t index) const { return {data_.data() + index * dim_, dim_}; }
  const std::string& word(std::size_t index) const { return words_.at(index); }

  // Exact or accent-stripped key match only.
  std::optional<std::size_t> find(std::string_view word) const;

  // Exact match; else the closest word (edit distance, then lexicographic) with
  // the same stem; else the closest word sharing the first three letters within
  // distance 3; else missing.
  ResolvedVector resolve(std::string_view word) const;

 private:
  void add(std::string word, std::span<const float> values);
  void build_indices();
  std::optional<std::size_t> closest(std::span<const std::size_t> candidates, const std::u32string& query,
                                     std::size_t max_distance) const;

  LanguageId lang_;
  std::size_t dim_ = 0;
  std::size_t duplicates_ = 0;
  std::vector<std::string> words_;
  std::vector<float> data_;
  std::unordered_map<std::string, std::size_t> exact_;
  std::unordered_map<std::string, std::size_t> normalized_;
  // Distinct normalized keys, as indices of their first row.
  std::unordered_map<std::string, std::vector<std::size_t>> by_stem_;
  std::unordered_map<std::u32string, std::vector<std::size_t>> by_prefix_;
  std::optional<Stemmer> stemmer_;
};

// dot(u, v) / (|u| |v|). Throws on dimension mismatch or a zero vector.
double raw_cosine(std::span<const float> u, std::span<const float> v);
double raw_cosine(std::span<const double> u, std::span<const double> v);
// raw_cosine clamped to [0, 1].
double cosine_similarity(std::span<const float> u, std::span<const float> v);
double cosine_similarity(std::span<const double> u, std::span<const double> v);

struct AffinityPropagationParams {
  double damping = 0.5;
  int max_iter = 200;
  int convergence_iter = 15;
  // Tiny Gaussian jitter added to the similarities to break exact ties, drawn
  // like numpy's RandomState(jitter_seed).standard_normal.
  bool jitter = true;
  std::uint32_t jitter_seed = 0;
};

struct AffinityPropagationResult {
  std::vector<std::size_t> exemplars;  // sorted point indices
  std::vector<std::size_t> labels;     // index into exemplars, per point
  int iterations = 0;
  bool converged = false;
};

// Affinity Propagation on negative squared Euclidean similarities with the
// median off-diagonal similarity as preference. Deterministic for fixed params.
// `points` holds n rows of `dim` values. Exemplars are empty when the run did
// not converge.
AffinityPropagationResult affinity_propagation(std::span<const double> points, std::size_t dim,
                                               const AffinityPropagationParams& params = {});

struct ClusterSet {
  std::vector<std::vector<double>> centers;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> labels;  // cluster of each input vector
  bool fallback = false;            // single global-mean cluster used
};

// Clusters occurrence vectors; centers are member means. Falls back to one
// global-mean cluster when clustering fails. Throws on empty input.
ClusterSet cluster_vectors(std::span<const std::vector<float>> vectors, const AffinityPropagationParams& params = {});

// Mean cosine over all cross pairs of centers, clamped to [0, 1]. A zero-length
// center contributes 0.
double contextual_similarity(const ClusterSet& a, const ClusterSet& b);

struct Occurrence {
  std::size_t sent_id = 0;
  std::size_t token_index = 0;
  std::vector<float> vector;
};

struct OccurrenceVectors {
  LanguageId lang;
  std::string word;
  std::vector<Occurrence> entries;
};

ClusterSet cluster_occurrences(const OccurrenceVectors& occ, const AffinityPropagationParams& params = {});

// Per-occurrence contextual vectors read from JSON lines
// {"lang","word","sent_id","token_index","vector"}.
class ContextualStore {
 public:
  static constexpr std::size_t kDefaultMaxOccurrences = 200;

  // Words with more than `max_occurrences` records keep the ones with the
  // smallest (sent_id, token_index); the excess is counted in truncated().
  static ContextualStore load(const std::filesystem::path& path,
                              std::size_t max_occurrences = kDefaultMaxOccurrences);

  void add(LanguageId lang, std::string_view word, Occurrence occurrence);
  void finalize(std::size_t max_occurrences = kDefaultMaxOccurrences);

  const OccurrenceVectors* find(LanguageId lang, std::string_view word) const;
  std::size_t dim() const noexcept { return dim_; }
  std::size_t words() const noexcept { return entries_.size(); }
  std::size_t records() const noexcept;
  std::size_t truncated() const noexcept { return truncated_; }

 private:
  std::map<std::pair<LanguageId, std::string>, OccurrenceVectors, std::less<>> entries_;
  std::size_t dim_ = 0;
  std::size_t truncated_ = 0;
};

struct Neighbor {
  std::string word;
  double score = 0.0;  // raw cosine
};

// Candidate with the highest cosine to the source word's vector; ties go to the
// lexicographically smaller word. Candidates without a vector are skipped.
// Throws when the source word is unresolvable or no candidate has a vector.
Neighbor nearest_semantic_neighbor(const EmbeddingStore& source, std::string_view word,
                                   const EmbeddingStore& target, std::span<const std::string> candidates);

}  // namespace lexintel
