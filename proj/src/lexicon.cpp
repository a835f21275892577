#include "lexintel/lexicon.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <tuple>

#include "lexintel/error.hpp"
#include "lexintel/io.hpp"
#include "lexintel/stemmer.hpp"
#include "lexintel/text.hpp"

namespace lexintel {

std::string_view to_string(Relation relation) noexcept {
  return relation == Relation::cognate ? "cognate" : "borrowing";
}

Relation parse_relation(std::string_view text) {
  if (text == "cognate") return Relation::cognate;
  if (text == "borrowing") return Relation::borrowing;
  throw Error("unknown relation '" + std::string(text) + "' (expected cognate or borrowing)");
}

Lexicon Lexicon::load(const std::filesystem::path& path, std::span<const LanguageId> languages) {
  LineReader reader(path);
  std::string line;
  if (!reader.next(line)) throw Error(path.string() + ": empty lexicon");
  if (line != kHeader) {
    throw ParseError(path.string(), 1, "expected header '" + std::string(kHeader) + "'");
  }

  std::vector<LexiconRow> rows;
  while (reader.next(line)) {
    if (line.empty()) continue;
    if (!is_valid_utf8(line)) throw ParseError(path.string(), reader.line_number(), "invalid UTF-8");
    auto fields = split(line, '\t');
    if (fields.size() != 5) {
      throw ParseError(path.string(), reader.line_number(),
                       "expected 5 tab-separated columns, found " + std::to_string(fields.size()));
    }
    // Validate here so errors carry the physical line number.
    for (int i = 0; i < 2; ++i) {
      if (!LanguageId::is_valid(fields[i])) {
        throw ParseError(path.string(), reader.line_number(),
                         "unknown language code '" + std::string(fields[i]) + "'");
      }
    }
    try {
      parse_relation(fields[4]);
    } catch (const Error& e) {
      throw ParseError(path.string(), reader.line_number(), e.what());
    }
    const LanguageId a(fields[0]);
    const LanguageId b(fields[1]);
    const auto configured = [&](LanguageId id) {
      return std::find(languages.begin(), languages.end(), id) != languages.end();
    };
    if (!configured(a) || !configured(b)) continue;
    if (a == b) throw ParseError(path.string(), reader.line_number(), "lang_a equals lang_b");
    if (strip_accents(trim(fields[2])).empty() || strip_accents(trim(fields[3])).empty()) {
      throw ParseError(path.string(), reader.line_number(), "empty word");
    }
    rows.push_back({std::string(fields[0]), std::string(fields[1]), std::string(fields[2]),
                    std::string(fields[3]), std::string(fields[4])});
  }
  return from_rows(rows, languages, path.string(), 2);
}

Lexicon Lexicon::from_rows(std::span<const LexiconRow> rows, std::span<const LanguageId> languages,
                           const std::string& source, std::size_t row_offset) {
  Lexicon lex;
  lex.languages_.assign(languages.begin(), languages.end());

  std::unordered_map<LanguageId, Stemmer> stemmers;
  for (auto lang : languages) stemmers.emplace(lang, Stemmer(lang));

  using Key = std::tuple<LanguageId, LanguageId, std::string, std::string, Relation>;
  std::set<Key> seen;

  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const auto fail = [&](const std::string& what) { throw ParseError(source, i + row_offset, what); };
    if (!LanguageId::is_valid(row.lang_a)) fail("unknown language code '" + row.lang_a + "'");
    if (!LanguageId::is_valid(row.lang_b)) fail("unknown language code '" + row.lang_b + "'");
    RelatedPair pair;
    pair.lang_a = LanguageId(row.lang_a);
    pair.lang_b = LanguageId(row.lang_b);
    if (!stemmers.contains(pair.lang_a) || !stemmers.contains(pair.lang_b)) continue;
    if (pair.lang_a == pair.lang_b) fail("lang_a equals lang_b");
    try {
      pair.relation = parse_relation(row.relation);
    } catch (const Error& e) {
      fail(e.what());
    }
    pair.word_a = strip_accents(trim(row.word_a));
    pair.word_b = strip_accents(trim(row.word_b));
    if (pair.word_a.empty() || pair.word_b.empty()) fail("empty word");

    // A reversed row describes the same pair.
    Key key = pair.lang_a < pair.lang_b
                  ? Key{pair.lang_a, pair.lang_b, pair.word_a, pair.word_b, pair.relation}
                  : Key{pair.lang_b, pair.lang_a, pair.word_b, pair.word_a, pair.relation};
    if (!seen.insert(std::move(key)).second) continue;

    pair.pair_id = static_cast<PairId>(lex.pairs_.size());
    lex.stems_a_.push_back(stemmers.at(pair.lang_a).stem(pair.word_a));
    lex.stems_b_.push_back(stemmers.at(pair.lang_b).stem(pair.word_b));
    lex.pairs_.push_back(std::move(pair));
  }

  if (lex.pairs_.empty()) throw Error(source + ": empty lexicon");

  for (const auto& pair : lex.pairs_) {
    const auto& sa = lex.stems_a_[pair.pair_id];
    const auto& sb = lex.stems_b_[pair.pair_id];
    lex.by_language_[pair.lang_a][sa].push_back(pair.pair_id);
    lex.by_language_[pair.lang_b][sb].push_back(pair.pair_id);
    lex.by_language_pair_[index_key(pair.lang_a, pair.lang_b)][sa].push_back(pair.pair_id);
    lex.by_language_pair_[index_key(pair.lang_b, pair.lang_a)][sb].push_back(pair.pair_id);
  }
  return lex;
}

std::string Lexicon::index_key(LanguageId lang, LanguageId partner) {
  return lang.str() + partner.str();
}

std::vector<RelatedPair> Lexicon::pairs_for_language_pair(LanguageId a, LanguageId b) const {
  std::vector<RelatedPair> out;
  for (const auto& pair : pairs_) {
    if (!pair.links(a, b)) continue;
    auto oriented = pair;
    if (oriented.lang_a != a) {
      std::swap(oriented.lang_a, oriented.lang_b);
      std::swap(oriented.word_a, oriented.word_b);
    }
    out.push_back(std::move(oriented));
  }
  return out;
}

std::span<const PairId> Lexicon::stem_lookup(LanguageId lang, std::string_view stem) const {
  const auto by_lang = by_language_.find(lang);
  if (by_lang == by_language_.end()) return {};
  const auto it = by_lang->second.find(stem);
  if (it == by_lang->second.end()) return {};
  return it->second;
}

std::span<const PairId> Lexicon::stem_lookup(LanguageId lang, LanguageId partner,
                                             std::string_view stem) const {
  const auto by_pair = by_language_pair_.find(index_key(lang, partner));
  if (by_pair == by_language_pair_.end()) return {};
  const auto it = by_pair->second.find(stem);
  if (it == by_pair->second.end()) return {};
  return it->second;
}

const std::string& Lexicon::stem_of(PairId id, LanguageId lang) const {
  const auto& pair = pairs_.at(id);
  if (lang == pair.lang_a) return stems_a_[id];
  if (lang == pair.lang_b) return stems_b_[id];
  throw Error("pair " + std::to_string(id) + " has no word in language " + lang.str());
}

void Lexicon::write_tsv(std::ostream& out) const {
  out << kHeader << '\n';
  for (const auto& p : pairs_) {
    out << p.lang_a.code() << '\t' << p.lang_b.code() << '\t' << p.word_a << '\t' << p.word_b << '\t'
        << to_string(p.relation) << '\n';
  }
}

}  // namespace lexintel
