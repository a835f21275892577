#include <gtest/gtest.h>

#include "lexintel/corpus.hpp"
#include "lexintel/error.hpp"
#include "test_support.hpp"

using namespace lexintel;
using testutil::TempDir;

namespace {

const LanguageId es("es"), ro("ro"), fr("fr");

std::vector<std::string> normalized(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.normalized);
  return out;
}

Lexicon luna_lexicon() {
  const std::vector<LexiconRow> rows{{"es", "ro", "luna", "luna", "cognate"},
                                     {"es", "ro", "casa", "casă", "cognate"},
                                     {"es", "ro", "casa", "acasă", "cognate"},
                                     {"es", "fr", "luna", "lune", "cognate"}};
  const std::vector<LanguageId> langs{es, fr, ro};
  return Lexicon::from_rows(rows, langs);
}

struct Sides {
  StopWords stop;
  TextProcessor pa{es, stop};
  TextProcessor pb{ro, stop};

  explicit Sides(StopWords s = {}) : stop(std::move(s)) {}
  SentencePair pair(std::string_view a, std::string_view b, std::size_t id = 0) {
    return make_sentence_pair(id, a, b, pa, pb);
  }
};

}  // namespace

TEST(ParallelCorpus, SentenceIds) {
  TempDir dir;
  const auto a = dir.write("c.es.txt", "uno\ndos\ntres\n");
  const auto b = dir.write("c.ro.txt", "unu\ndoi\ntrei\n");
  const StopWords stop;
  const auto pairs = load_parallel(a, b, es, ro, stop);
  ASSERT_EQ(pairs.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(pairs[i].sent_id, i);
  EXPECT_EQ(pairs[2].tokens_b[0].surface, "trei");
}

TEST(ParallelCorpus, LineCountMismatch) {
  TempDir dir;
  const auto a = dir.write("c.es.txt", "uno\ndos\ntres\n");
  const auto b = dir.write("c.ro.txt", "unu\ndoi\ntrei\npatru\n");
  try {
    ParallelReader reader(a, b);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line count mismatch 3 vs 4"), std::string::npos) << e.what();
  }
}

TEST(ParallelCorpus, MissingTrailingNewlineAndCrlf) {
  TempDir dir;
  const auto a = dir.write("c.es.txt", "uno\r\ndos");
  const auto b = dir.write("c.ro.txt", "unu\ndoi\n");
  const StopWords stop;
  const auto pairs = load_parallel(a, b, es, ro, stop);
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0].tokens_a[0].surface, "uno");
  EXPECT_EQ(pairs[1].tokens_a[0].surface, "dos");
}

TEST(ParallelCorpus, InvalidUtf8) {
  TempDir dir;
  const auto a = dir.write("c.es.txt", "uno\nd\xffos\n");
  const auto b = dir.write("c.ro.txt", "unu\ndoi\n");
  const StopWords stop;
  try {
    load_parallel(a, b, es, ro, stop);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(TextProcessor, DropsStopWords) {
  StopWords stop;
  stop.add(es, "el");
  TextProcessor proc(es, stop);
  EXPECT_EQ(normalized(proc.process("El tiempo pasa.")), (std::vector<std::string>{"tiempo", "pasa"}));
  const auto tokens = proc.process("Él azúcar");
  ASSERT_EQ(tokens.size(), 1u);
  EXPECT_EQ(tokens[0].surface, "azúcar");
  EXPECT_EQ(tokens[0].normalized, "azucar");
  EXPECT_EQ(tokens[0].offset, 3u);
}

TEST(TextProcessor, SmallCacheGivesSameTokens) {
  const StopWords stop;
  TextProcessor big(es, stop);
  TextProcessor tiny(es, stop, 2);
  const std::string line = "las lunas y la luna brillan sobre las casas de la ciudad lunar";
  for (int i = 0; i < 3; ++i) {
    const auto x = big.process(line);
    const auto y = tiny.process(line);
    ASSERT_EQ(x.size(), y.size());
    for (std::size_t k = 0; k < x.size(); ++k) EXPECT_EQ(x[k].stem, y[k].stem);
  }
}

TEST(StopWords, LoadsPerLanguageFiles) {
  TempDir dir;
  dir.write("sw/es.txt", "# comment\nel\n\nLa\n");
  dir.write("sw/ro.txt", "și\n");
  const std::vector<LanguageId> langs{es, ro};
  const auto stop = StopWords::load(dir / "sw", langs);
  EXPECT_TRUE(stop.contains(es, "el"));
  EXPECT_TRUE(stop.contains(es, "la"));
  EXPECT_TRUE(stop.contains(ro, "si"));
  EXPECT_FALSE(stop.contains(ro, "el"));
  EXPECT_EQ(stop.size(es), 2u);
  const std::vector<LanguageId> with_fr{es, fr};
  EXPECT_THROW(StopWords::load(dir / "sw", with_fr), ConfigError);
}

TEST(Match, BothSidesAligned) {
  const auto lex = luna_lexicon();
  Sides s;
  const auto sp = s.pair("la luna", "luna");
  const auto occ = match_occurrences(sp, lex);
  ASSERT_EQ(occ.size(), 2u);
  EXPECT_EQ(occ[0].side, Side::a);
  EXPECT_EQ(occ[0].token_index, 1u);
  EXPECT_EQ(occ[1].side, Side::b);
  EXPECT_TRUE(occ[0].aligned);
  EXPECT_TRUE(occ[1].aligned);
  EXPECT_EQ(occ[0].pair_id, occ[1].pair_id);
}

TEST(Match, OneSideOnly) {
  const auto lex = luna_lexicon();
  Sides s;
  const auto occ = match_occurrences(s.pair("luna", "soare"), lex);
  ASSERT_EQ(occ.size(), 1u);
  EXPECT_FALSE(occ[0].aligned);
}

TEST(Match, TokenMatchingTwoPairs) {
  const auto lex = luna_lexicon();
  Sides s;
  const auto occ = match_occurrences(s.pair("casa", "nimic"), lex);
  ASSERT_EQ(occ.size(), 2u);
  EXPECT_EQ(occ[0].token_index, occ[1].token_index);
  EXPECT_NE(occ[0].pair_id, occ[1].pair_id);
}

TEST(Match, InflectedFormsAndAccents) {
  const auto lex = luna_lexicon();
  Sides s;
  // "lunas" stems like "luna"; "casă" and "case" share the ro stem of "casă".
  const auto occ = match_occurrences(s.pair("lunas", "casă"), lex);
  ASSERT_EQ(occ.size(), 2u);
  EXPECT_EQ(lex.pair(occ[0].pair_id).word_a, "luna");
  EXPECT_EQ(lex.pair(occ[1].pair_id).word_b, "casa");
  EXPECT_FALSE(occ[0].aligned);
}

TEST(CorpusStats, HandCountedFixture) {
  const auto lex = luna_lexicon();
  StopWords stop;
  stop.add(es, "la");
  stop.add(ro, "e");
  Sides s(std::move(stop));
  // content tokens: [luna brilla] [luna stralucește] [casa oscura] [noaptea]
  std::vector<SentencePair> sps{s.pair("La luna brilla", "Luna strălucește", 0),
                                s.pair("la casa oscura", "noaptea e", 1)};
  std::vector<MatchedOccurrence> occ;
  for (const auto& sp : sps) match_occurrences(sp, lex, occ);
  ASSERT_EQ(occ.size(), 4u);  // luna, luna, casa->casă, casa->acasă
  const auto stats = corpus_stats(sps, occ);
  EXPECT_EQ(stats.n_sentences, 2u);
  EXPECT_EQ(stats.total_words_a + stats.total_words_b, 7u);
  EXPECT_EQ(stats.related_words, 4u);
  EXPECT_EQ(stats.aligned_pairs, 2u);
}

TEST(CorpusStats, NineTokensThreeOccurrences) {
  const std::vector<LexiconRow> rows{{"es", "ro", "luna", "luna", "cognate"},
                                     {"es", "ro", "tiempo", "timp", "cognate"}};
  const std::vector<LanguageId> langs{es, ro};
  const auto lex = Lexicon::from_rows(rows, langs);
  StopWords stop;
  stop.add(es, "el");
  stop.add(es, "la");
  Sides s(std::move(stop));
  std::vector<SentencePair> sps{s.pair("La luna sale", "Luna răsare", 0),
                                s.pair("El tiempo pasa rápido", "Ora trece", 1)};
  std::vector<MatchedOccurrence> occ;
  for (const auto& sp : sps) match_occurrences(sp, lex, occ);
  const auto stats = corpus_stats(sps, occ);
  EXPECT_EQ(stats.n_sentences, 2u);
  EXPECT_EQ(stats.total_words_a, 5u);
  EXPECT_EQ(stats.total_words_b, 4u);
  EXPECT_EQ(stats.related_words, 3u);
  EXPECT_EQ(stats.aligned_pairs, 2u);
}

TEST(CorpusStats, EmptyCorpus) {
  const std::vector<SentencePair> none;
  const std::vector<MatchedOccurrence> no_occ;
  EXPECT_EQ(corpus_stats(none, no_occ), CorpusStats{});
}

TEST(CorpusStats, Deterministic) {
  const auto lex = luna_lexicon();
  const auto run = [&] {
    Sides s;
    std::vector<SentencePair> sps{s.pair("luna casa", "casă luna", 0), s.pair("casa", "acasă", 1)};
    std::vector<MatchedOccurrence> occ;
    for (const auto& sp : sps) match_occurrences(sp, lex, occ);
    return std::make_pair(occ, corpus_stats(sps, occ));
  };
  EXPECT_EQ(run(), run());
}
