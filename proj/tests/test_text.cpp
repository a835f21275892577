#include <gtest/gtest.h>

#include "lexintel/error.hpp"
#include "lexintel/language.hpp"
#include "lexintel/text.hpp"

using namespace lexintel;
using Tokens = std::vector<std::string>;

TEST(StripAccents, Examples) {
  EXPECT_EQ(strip_accents("azúcar"), "azucar");
  EXPECT_EQ(strip_accents("pregăti"), "pregati");
  EXPECT_EQ(strip_accents("abc"), "abc");
  EXPECT_EQ(strip_accents("ȘCOALĂ"), "scoala");
  EXPECT_EQ(strip_accents("pâine"), "paine");
}

TEST(StripAccents, Idempotent) {
  for (const char* w : {"azúcar", "pregăti", "être", "ação", "țară", "Ñandú", "l'été"}) {
    const auto once = strip_accents(w);
    EXPECT_EQ(strip_accents(once), once) << w;
  }
}

TEST(Tokenize, Examples) {
  EXPECT_EQ(tokenize("Temps, temps!"), (Tokens{"temps", "temps"}));
  EXPECT_TRUE(tokenize("").empty());
  EXPECT_EQ(tokenize("l'homme"), (Tokens{"l'homme"}));
}

TEST(Tokenize, Separators) {
  EXPECT_EQ(tokenize("  El tiempo pasa. "), (Tokens{"el", "tiempo", "pasa"}));
  EXPECT_EQ(tokenize("porta-voz 42 abc"), (Tokens{"porta-voz", "abc"}));
  EXPECT_EQ(tokenize("--a--b--"), (Tokens{"a", "b"}));
  EXPECT_EQ(tokenize("l’homme"), (Tokens{"l'homme"}));
  EXPECT_EQ(tokenize("word' 'quoted'"), (Tokens{"word", "quoted"}));
  EXPECT_EQ(tokenize("¿Qué?¡Sí!"), (Tokens{"qué", "sí"}));
}

TEST(Tokenize, CombiningMarksStayInToken) {
  // "a" followed by U+0301 COMBINING ACUTE ACCENT
  const auto tokens = tokenize("ma\xcc\x81s");
  ASSERT_EQ(tokens.size(), 1u);
  EXPECT_EQ(strip_accents(tokens[0]), "mas");
}

TEST(Tokenize, Offsets) {
  const auto spans = tokenize_spans("Ça va, très bien");
  ASSERT_EQ(spans.size(), 4u);
  EXPECT_EQ(spans[0].offset, 0u);
  EXPECT_EQ(spans[1].offset, 3u);
  EXPECT_EQ(spans[2].offset, 7u);
  EXPECT_EQ(spans[3].offset, 12u);
}

TEST(Utf8, RejectsMalformed) {
  EXPECT_FALSE(is_valid_utf8("\xc3"));
  EXPECT_FALSE(is_valid_utf8("\xff"));
  EXPECT_TRUE(is_valid_utf8("plain"));
  EXPECT_THROW(decode_utf8("ab\xc3"), Error);
  EXPECT_EQ(encode_utf8(decode_utf8("pregăti")), "pregăti");
}

TEST(LanguageId, Validation) {
  EXPECT_EQ(LanguageId("es").str(), "es");
  EXPECT_THROW(LanguageId("ES"), Error);
  EXPECT_THROW(LanguageId("spa"), Error);
  const auto langs = parse_language_list(" es, ro ,fr");
  ASSERT_EQ(langs.size(), 3u);
  EXPECT_EQ(langs[1].str(), "ro");
  EXPECT_THROW(parse_language_list("es,es"), Error);
  EXPECT_EQ(pair_label(LanguageId("ro"), LanguageId("es")), "es-ro");
}
