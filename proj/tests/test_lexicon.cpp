#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "lexintel/error.hpp"
#include "lexintel/lexicon.hpp"
#include "test_support.hpp"

using namespace lexintel;
using testutil::TempDir;

namespace {

const LanguageId es("es"), ro("ro"), fr("fr"), it("it"), pt("pt");
const std::vector<LanguageId> kAll{es, fr, it, pt, ro};

Lexicon make(std::initializer_list<LexiconRow> rows) {
  const std::vector<LexiconRow> v(rows);
  return Lexicon::from_rows(v, kAll);
}

std::set<std::tuple<std::string, std::string, std::string, std::string, std::string>> pair_set(const Lexicon& lex) {
  std::set<std::tuple<std::string, std::string, std::string, std::string, std::string>> out;
  for (const auto& p : lex.pairs()) {
    out.emplace(p.lang_a.str(), p.lang_b.str(), p.word_a, p.word_b, std::string(to_string(p.relation)));
  }
  return out;
}

}  // namespace

TEST(Lexicon, NormalizesWords) {
  TempDir dir;
  const auto path = dir.write("lex.tsv", "lang_a\tlang_b\tword_a\tword_b\trelation\nes\tro\tpadre\tpărinte\tcognate\n");
  const auto lex = Lexicon::load(path, kAll);
  ASSERT_EQ(lex.size(), 1u);
  EXPECT_EQ(lex.pair(0).word_a, "padre");
  EXPECT_EQ(lex.pair(0).word_b, "parinte");
  EXPECT_EQ(lex.pair(0).relation, Relation::cognate);
}

TEST(Lexicon, EmptyIsAnError) {
  TempDir dir;
  const auto path = dir.write("lex.tsv", "lang_a\tlang_b\tword_a\tword_b\trelation\n");
  try {
    Lexicon::load(path, kAll);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("empty lexicon"), std::string::npos);
  }
}

TEST(Lexicon, DuplicateRowsDropped) {
  const auto lex = make({{"es", "ro", "luna", "lună", "cognate"},
                         {"es", "ro", "luna", "lună", "cognate"},
                         {"ro", "es", "lună", "luna", "cognate"}});
  EXPECT_EQ(lex.size(), 1u);
}

TEST(Lexicon, MalformedRowsCarryLineNumbers) {
  TempDir dir;
  const auto path = dir.write("lex.tsv",
                              "lang_a\tlang_b\tword_a\tword_b\trelation\n"
                              "es\tro\tluna\tlună\tcognate\n"
                              "es\tro\tsol\tsoare\n");
  try {
    Lexicon::load(path, kAll);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(make({{"es", "ro", "luna", "lună", "synonym"}}), ParseError);
  EXPECT_THROW(make({{"es", "es", "luna", "luna", "cognate"}}), ParseError);
  EXPECT_THROW(make({{"es", "ro", "", "lună", "cognate"}}), ParseError);
}

TEST(Lexicon, SkipsUnconfiguredLanguages) {
  const std::vector<LexiconRow> rows{{"es", "ro", "luna", "lună", "cognate"}, {"es", "de", "luna", "mond", "cognate"}};
  const std::vector<LanguageId> langs{es, ro};
  EXPECT_EQ(Lexicon::from_rows(rows, langs).size(), 1u);
}

TEST(Lexicon, PairsForLanguagePair) {
  const auto lex = make({{"es", "ro", "luna", "lună", "cognate"},
                         {"es", "ro", "padre", "părinte", "cognate"},
                         {"ro", "es", "timp", "tiempo", "cognate"},
                         {"es", "fr", "luna", "lune", "cognate"},
                         {"es", "fr", "tiempo", "temps", "cognate"}});
  const auto es_ro = lex.pairs_for_language_pair(es, ro);
  ASSERT_EQ(es_ro.size(), 3u);
  for (const auto& p : es_ro) EXPECT_EQ(p.lang_a, es);

  const auto ro_es = lex.pairs_for_language_pair(ro, es);
  ASSERT_EQ(ro_es.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(ro_es[i].lang_a, ro);
    EXPECT_EQ(ro_es[i].word_a, es_ro[i].word_b);
    EXPECT_EQ(ro_es[i].word_b, es_ro[i].word_a);
    EXPECT_EQ(ro_es[i].pair_id, es_ro[i].pair_id);
  }
  EXPECT_TRUE(lex.pairs_for_language_pair(it, pt).empty());
}

TEST(Lexicon, StemLookup) {
  const auto lex = make({{"es", "ro", "luna", "luna", "cognate"},
                         {"es", "ro", "casa", "casă", "cognate"},
                         {"es", "ro", "casa", "acasă", "cognate"},
                         {"es", "fr", "casa", "case", "cognate"}});
  const auto luna = lex.stem_lookup(es, "lun");
  ASSERT_EQ(luna.size(), 1u);
  EXPECT_EQ(lex.pair(luna[0]).word_a, "luna");
  EXPECT_TRUE(lex.stem_lookup(es, "zzz").empty());

  EXPECT_EQ(lex.stem_lookup(es, lex.stem_of(1, es)).size(), 3u);
  EXPECT_EQ(lex.stem_lookup(es, ro, lex.stem_of(1, es)).size(), 2u);
  EXPECT_EQ(lex.stem_lookup(es, fr, lex.stem_of(1, es)).size(), 1u);
}

TEST(Lexicon, RoundTrip) {
  TempDir dir;
  const auto src = make({{"es", "ro", "luna", "lună", "cognate"},
                         {"es", "ro", "tren", "tren", "borrowing"},
                         {"fr", "it", "temps", "tempo", "cognate"},
                         {"pt", "es", "ação", "acción", "cognate"}});
  {
    std::ofstream out(dir / "lex.tsv");
    src.write_tsv(out);
  }
  const auto back = Lexicon::load(dir / "lex.tsv", kAll);
  EXPECT_EQ(pair_set(back), pair_set(src));
  EXPECT_EQ(back.size(), src.size());
}

TEST(Lexicon, Relation) {
  EXPECT_EQ(parse_relation("borrowing"), Relation::borrowing);
  EXPECT_EQ(to_string(Relation::cognate), "cognate");
  EXPECT_THROW(parse_relation("loan"), Error);
}
