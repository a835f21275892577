#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lexintel/language.hpp"

namespace lexintel {

using PairId = std::uint32_t;

enum class Relation { cognate, borrowing };

std::string_view to_string(Relation relation) noexcept;
Relation parse_relation(std::string_view text);

// One cognate or borrowing pair. Words are stored normalized (lowercase,
// accents stripped); pair_id is the pair's index in Lexicon::pairs().
struct RelatedPair {
  LanguageId lang_a;
  LanguageId lang_b;
  std::string word_a;
  std::string word_b;
  Relation relation = Relation::cognate;
  PairId pair_id = 0;

  const std::string& word_in(LanguageId lang) const { return lang == lang_a ? word_a : word_b; }
  LanguageId partner_of(LanguageId lang) const { return lang == lang_a ? lang_b : lang_a; }
  bool links(LanguageId a, LanguageId b) const {
    return (lang_a == a && lang_b == b) || (lang_a == b && lang_b == a);
  }
};

// A raw row prior to normalization.
struct LexiconRow {
  std::string lang_a;
  std::string lang_b;
  std::string word_a;
  std::string word_b;
  std::string relation;
};

// Related-word database with a (language, stem) index. Immutable after
// construction and safe to share between threads.
class Lexicon {
 public:
  static constexpr std::string_view kHeader = "lang_a\tlang_b\tword_a\tword_b\trelation";

  // Reads the five-column TSV. Rows whose languages are not both in
  // `languages` are skipped. Throws ParseError for malformed rows and Error
  // when nothing remains.
  static Lexicon load(const std::filesystem::path& path, std::span<const LanguageId> languages);

  // Normalizes, de-duplicates and indexes in-memory rows. Rows are validated
  // like file rows; `row_offset` is added to indices in error messages.
  static Lexicon from_rows(std::span<const LexiconRow> rows, std::span<const LanguageId> languages,
                           const std::string& source = "<rows>", std::size_t row_offset = 1);

  const std::vector<RelatedPair>& pairs() const noexcept { return pairs_; }
  const RelatedPair& pair(PairId id) const { return pairs_.at(id); }
  std::size_t size() const noexcept { return pairs_.size(); }
  const std::vector<LanguageId>& languages() const noexcept { return languages_; }

  // Pairs linking `a` and `b`, reoriented so that lang_a == a.
  std::vector<RelatedPair> pairs_for_language_pair(LanguageId a, LanguageId b) const;

  // Pair ids whose word in `lang` has this stem. Empty when absent.
  std::span<const PairId> stem_lookup(LanguageId lang, std::string_view stem) const;

  // As above, restricted to pairs whose other language is `partner`.
  std::span<const PairId> stem_lookup(LanguageId lang, LanguageId partner, std::string_view stem) const;

  // Stem of the pair's word on the `lang` side.
  const std::string& stem_of(PairId id, LanguageId lang) const;

  void write_tsv(std::ostream& out) const;

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
  };
  using StemIndex = std::unordered_map<std::string, std::vector<PairId>, StringHash, std::equal_to<>>;

  static std::string index_key(LanguageId lang, LanguageId partner);

  std::vector<LanguageId> languages_;
  std::vector<RelatedPair> pairs_;
  std::vector<std::string> stems_a_;
  std::vector<std::string> stems_b_;
  std::unordered_map<LanguageId, StemIndex> by_language_;
  std::unordered_map<std::string, StemIndex> by_language_pair_;
};

}  // namespace lexintel
