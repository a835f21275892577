#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexintel/error.hpp"
#include "lexintel/language.hpp"

namespace lexintel {

// Unit-cost edit distance over any sequences with equality-comparable elements.
// Two-row dynamic programme, O(|a|·|b|) time and O(min) memory.
template <typename Seq>
std::size_t levenshtein(const Seq& a, const Seq& b) {
  const auto& shorter = a.size() <= b.size() ? a : b;
  const auto& longer = a.size() <= b.size() ? b : a;
  const std::size_t n = shorter.size();
  std::vector<std::size_t> row(n + 1);
  for (std::size_t j = 0; j <= n; ++j) row[j] = j;
  std::size_t i = 0;
  for (const auto& x : longer) {
    ++i;
    std::size_t diagonal = row[0];
    row[0] = i;
    std::size_t j = 0;
    for (const auto& y : shorter) {
      ++j;
      const std::size_t above = row[j];
      row[j] = std::min({above + 1, row[j - 1] + 1, diagonal + (x == y ? 0 : 1)});
      diagonal = above;
    }
  }
  return row[n];
}

// 1 - levenshtein / max length. Throws Error("undefined similarity") when both are empty.
template <typename Seq>
double surface_similarity(const Seq& a, const Seq& b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) throw Error("undefined similarity: both sequences are empty");
  return 1.0 - static_cast<double>(levenshtein(a, b)) / static_cast<double>(longest);
}

// Orthographic similarity of two UTF-8 words, compared code point by code point
// after accent stripping.
double orthographic_similarity(std::string_view word_a, std::string_view word_b);

using PhonemeSequence = std::vector<std::string>;

// Splits a transcription on whitespace.
PhonemeSequence parse_phonemes(std::string_view text);

class PhoneticLexicon {
 public:
  static constexpr std::string_view kHeader = "lang\tword\tphonemes";

  // Reads `lang<TAB>word<TAB>phonemes`. A header row is optional. Words are
  // accent-stripped; a repeated key keeps its first transcription.
  static PhoneticLexicon load(const std::filesystem::path& path);

  void add(LanguageId lang, std::string_view word, PhonemeSequence phonemes);
  const PhonemeSequence* find(LanguageId lang, std::string_view word) const;
  bool contains(LanguageId lang, std::string_view word) const { return find(lang, word) != nullptr; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t duplicates() const noexcept { return duplicates_; }

 private:
  std::map<std::pair<LanguageId, std::string>, PhonemeSequence, std::less<>> entries_;
  std::size_t duplicates_ = 0;
};

}  // namespace lexintel
