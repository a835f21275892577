#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "lexintel/corpus.hpp"
#include "lexintel/dli.hpp"
#include "lexintel/similarity.hpp"

namespace lexintel {

struct TokenIndex {
  double value = 0.0;
  bool scored = false;
};

// Best index among the pairs matched at one token position. Pairs without an
// index for `config` are ignored; if none has one the token is unscored.
TokenIndex token_index(std::span<const PairId> pair_ids, std::span<const PairSimilarity> similarities,
                       ChannelConfig config);

// Per-sentence totals for one speaker side and one configuration.
struct SentenceScore {
  double index_sum = 0.0;
  std::uint64_t content_tokens = 0;
  std::uint64_t scored_tokens = 0;

  // index_sum / content_tokens, or 0 for a sentence without content tokens.
  double value() const noexcept {
    return content_tokens == 0 ? 0.0 : index_sum / static_cast<double>(content_tokens);
  }
};

// Scores the `speaker` side of a sentence from its matched occurrences.
SentenceScore sentence_score(const SentencePair& sp, Side speaker, std::span<const MatchedOccurrence> occurrences,
                             std::span<const PairSimilarity> similarities, ChannelConfig config);

struct DirectionalScore {
  LanguageId speaker;
  LanguageId listener;
  ChannelConfig config;
  double score = 0.0;
  double index_sum = 0.0;
  std::uint64_t n_sentences = 0;
  std::uint64_t n_empty_sentences = 0;
  std::uint64_t n_content_tokens = 0;
  std::uint64_t n_scored_tokens = 0;
};

// Pools sentences into one text: the score is the sum of all token indices over
// the total number of speaker-side content tokens.
class CorpusAccumulator {
 public:
  void add(const SentenceScore& s) noexcept;
  void merge(const CorpusAccumulator& other) noexcept;

  // Throws Error for an empty corpus or one without content tokens.
  DirectionalScore result(LanguageId speaker, LanguageId listener, ChannelConfig config) const;

  std::uint64_t sentences() const noexcept { return n_sentences_; }

 private:
  double index_sum_ = 0.0;
  std::uint64_t n_sentences_ = 0;
  std::uint64_t n_empty_ = 0;
  std::uint64_t n_content_ = 0;
  std::uint64_t n_scored_ = 0;
};

struct CorpusFiles {
  std::filesystem::path path_a;
  std::filesystem::path path_b;
  std::string name;
};

// Resolves "<prefix>.<lang>.txt" for both languages.
CorpusFiles corpus_files(const std::filesystem::path& prefix, LanguageId a, LanguageId b);

struct PairCorpus {
  LanguageId lang_a;
  LanguageId lang_b;
  CorpusFiles files;
};

struct PairResult {
  PairCorpus corpus;
  CorpusStats stats;
  // [direction][config index]; direction 0 is a -> b.
  std::array<std::array<CorpusAccumulator, kChannelConfigs>, 2> scores;
};

struct MatrixOptions {
  unsigned workers = 1;
  std::size_t block_size = 2048;
  std::vector<ChannelConfig> configs;
};

// One streaming pass over a corpus, scoring both directions in every
// configuration. Results do not depend on the worker count.
PairResult process_corpus(const PairCorpus& corpus, const Lexicon& lex, const StopWords& stopwords,
                          std::span<const PairSimilarity> similarities, const MatrixOptions& options);

// Statistics only (no scoring).
CorpusStats corpus_statistics(const PairCorpus& corpus, const Lexicon& lex, const StopWords& stopwords,
                              unsigned workers = 1, std::size_t block_size = 2048);

struct IntelligibilityMatrix {
  std::vector<LanguageId> languages;  // sorted
  std::vector<ChannelConfig> configs;
  // Keyed by (config index, speaker, listener).
  std::map<std::tuple<int, LanguageId, LanguageId>, DirectionalScore> scores;
  std::map<std::string, CorpusStats> stats;  // by pair label
  CoverageReport coverage;

  const DirectionalScore& at(ChannelConfig c, LanguageId speaker, LanguageId listener) const {
    return scores.at({c.index(), speaker, listener});
  }
};

// Runs every configured corpus. Each unordered pair of `languages` needs
// exactly one corpus.
IntelligibilityMatrix build_matrix(std::span<const LanguageId> languages, std::span<const PairCorpus> corpora,
                                   const Lexicon& lex, const StopWords& stopwords,
                                   const SimilarityTable& similarities, const MatrixOptions& options);

// Percentage with one decimal, e.g. 0.30349 -> "30.3".
std::string format_percent(double score);

void write_matrix_csv(const IntelligibilityMatrix& m, std::ostream& out);
void write_heatmap_csv(const IntelligibilityMatrix& m, ChannelConfig config, std::ostream& out);
void write_matrix_json(const IntelligibilityMatrix& m, std::ostream& out);
void write_stats_json(const PairCorpus& corpus, const CorpusStats& stats, std::ostream& out);
void write_pairsim_csv(const Lexicon& lex, const SimilarityTable& table, std::span<const ChannelConfig> configs,
                       std::ostream& out);

}  // namespace lexintel
