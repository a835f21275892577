#include "lexintel/surface.hpp"

#include "lexintel/io.hpp"
#include "lexintel/text.hpp"

namespace lexintel {

double orthographic_similarity(std::string_view word_a, std::string_view word_b) {
  return surface_similarity(decode_utf8(strip_accents(word_a)), decode_utf8(strip_accents(word_b)));
}

PhonemeSequence parse_phonemes(std::string_view text) {
  PhonemeSequence out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    const auto start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

PhoneticLexicon PhoneticLexicon::load(const std::filesystem::path& path) {
  PhoneticLexicon lex;
  LineReader reader(path);
  std::string line;
  while (reader.next(line)) {
    if (reader.line_number() == 1 && line == kHeader) continue;
    if (trim(line).empty()) continue;
    const auto fail = [&](const std::string& what) {
      throw ParseError(path.string(), reader.line_number(), what);
    };
    if (!is_valid_utf8(line)) fail("invalid UTF-8");
    const auto fields = split(line, '\t');
    if (fields.size() != 3) fail("expected 3 tab-separated columns, found " + std::to_string(fields.size()));
    if (!LanguageId::is_valid(fields[0])) fail("unknown language code '" + std::string(fields[0]) + "'");
    const auto word = strip_accents(trim(fields[1]));
    if (word.empty()) fail("empty word");
    auto phonemes = parse_phonemes(fields[2]);
    if (phonemes.empty()) fail("empty phoneme field");
    lex.add(LanguageId(fields[0]), word, std::move(phonemes));
  }
  return lex;
}

void PhoneticLexicon::add(LanguageId lang, std::string_view word, PhonemeSequence phonemes) {
  if (phonemes.empty()) throw Error("empty phoneme sequence for '" + std::string(word) + "'");
  auto key = std::make_pair(lang, strip_accents(word));
  if (!entries_.emplace(std::move(key), std::move(phonemes)).second) ++duplicates_;
}

const PhonemeSequence* PhoneticLexicon::find(LanguageId lang, std::string_view word) const {
  const auto it = entries_.find(std::make_pair(lang, std::string(word)));
  return it == entries_.end() ? nullptr : &it->second;
}

}  // namespace lexintel
