#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lexintel/io.hpp"
#include "lexintel/language.hpp"
#include "lexintel/lexicon.hpp"
#include "lexintel/stemmer.hpp"

namespace lexintel {

struct Token {
  std::string surface;     // lowercased, accents kept
  std::string normalized;  // accents stripped
  std::string stem;
  std::size_t offset = 0;  // code points from line start
};

struct SentencePair {
  std::size_t sent_id = 0;
  LanguageId lang_a;
  LanguageId lang_b;
  std::vector<Token> tokens_a;
  std::vector<Token> tokens_b;
};

enum class Side : std::uint8_t { a, b };

struct MatchedOccurrence {
  std::size_t sent_id = 0;
  Side side = Side::a;
  std::uint32_t token_index = 0;
  PairId pair_id = 0;
  bool aligned = false;

  bool operator==(const MatchedOccurrence&) const = default;
};

struct CorpusStats {
  std::uint64_t n_sentences = 0;
  std::uint64_t total_words_a = 0;
  std::uint64_t total_words_b = 0;
  std::uint64_t related_words = 0;
  std::uint64_t aligned_pairs = 0;

  CorpusStats& operator+=(const CorpusStats& other) noexcept;
  bool operator==(const CorpusStats&) const = default;
};

// Per-language stop-word sets, stored accent-stripped.
class StopWords {
 public:
  // Reads <dir>/<lang>.txt for every language; a missing file is a ConfigError.
  static StopWords load(const std::filesystem::path& dir, std::span<const LanguageId> languages);

  void add(LanguageId lang, std::string_view word);
  bool contains(LanguageId lang, std::string_view normalized) const;
  std::size_t size(LanguageId lang) const;

 private:
  std::unordered_map<LanguageId, std::unordered_set<std::string>> words_;
};

// Turns raw lines of one language into content tokens. Keeps a bounded cache of
// stems; one instance per thread.
class TextProcessor {
 public:
  static constexpr std::size_t kDefaultCacheSize = 1 << 18;

  TextProcessor(LanguageId lang, const StopWords& stopwords, std::size_t cache_size = kDefaultCacheSize);

  LanguageId language() const noexcept { return stemmer_.language(); }
  std::vector<Token> process(std::string_view line);

 private:
  struct Entry {
    std::string normalized;
    std::string stem;
    bool stop = false;
  };

  const Entry& lookup(const std::string& surface);

  Stemmer stemmer_;
  const StopWords* stopwords_;
  std::size_t cache_size_;
  std::unordered_map<std::string, Entry> cache_;
  Entry scratch_;
};

struct RawSentencePair {
  std::size_t sent_id = 0;
  std::string text_a;
  std::string text_b;
};

// Reads two line-aligned files in lockstep. Line counts are compared up front.
class ParallelReader {
 public:
  ParallelReader(const std::filesystem::path& path_a, const std::filesystem::path& path_b);

  std::size_t size() const noexcept { return lines_; }

  // Returns false at end of input. Throws ParseError on invalid UTF-8.
  bool next(RawSentencePair& out);

  // Appends up to `max_pairs` pairs; returns the number read.
  std::size_t read_block(std::vector<RawSentencePair>& out, std::size_t max_pairs);

 private:
  std::size_t lines_ = 0;
  std::size_t next_id_ = 0;
  LineReader reader_a_;
  LineReader reader_b_;
};

// Streaming SentencePair source.
class ParallelCorpus {
 public:
  ParallelCorpus(const std::filesystem::path& path_a, const std::filesystem::path& path_b, LanguageId lang_a,
                 LanguageId lang_b, const StopWords& stopwords);

  std::size_t size() const noexcept { return reader_.size(); }
  bool next(SentencePair& out);

 private:
  ParallelReader reader_;
  TextProcessor proc_a_;
  TextProcessor proc_b_;
  LanguageId lang_a_;
  LanguageId lang_b_;
  RawSentencePair raw_;
};

// Tokenized lines read from the two files, held in memory. Test helper and
// convenience for small corpora.
std::vector<SentencePair> load_parallel(const std::filesystem::path& path_a, const std::filesystem::path& path_b,
                                        LanguageId lang_a, LanguageId lang_b, const StopWords& stopwords);

SentencePair make_sentence_pair(std::size_t sent_id, std::string_view text_a, std::string_view text_b,
                                TextProcessor& proc_a, TextProcessor& proc_b);

// Lexicon matches for both sides, side a first, each in token order. Only pairs
// linking the sentence's two languages are considered.
std::vector<MatchedOccurrence> match_occurrences(const SentencePair& sp, const Lexicon& lex);
void match_occurrences(const SentencePair& sp, const Lexicon& lex, std::vector<MatchedOccurrence>& out);

CorpusStats sentence_stats(const SentencePair& sp, std::span<const MatchedOccurrence> occurrences);
CorpusStats corpus_stats(std::span<const SentencePair> sentences, std::span<const MatchedOccurrence> occurrences);

}  // namespace lexintel
