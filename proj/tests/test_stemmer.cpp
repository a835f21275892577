#include <gtest/gtest.h>

#include <string>

#include "lexintel/io.hpp"
#include "lexintel/stemmer.hpp"
#include "lexintel/text.hpp"
#include "test_support.hpp"

using namespace lexintel;

namespace {

// word<TAB>stem rows produced by the reference Snowball implementation.
class StemFixture : public ::testing::TestWithParam<std::string> {};

TEST_P(StemFixture, MatchesReference) {
  const LanguageId lang(GetParam());
  const Stemmer stemmer(lang);
  LineReader reader(testutil::fixtures() / "stems" / (GetParam() + ".tsv"));
  std::string line;
  std::size_t rows = 0;
  std::size_t mismatches = 0;
  while (reader.next(line)) {
    const auto fields = split(line, '\t');
    ASSERT_EQ(fields.size(), 2u) << reader.line_number();
    const auto got = stemmer.stem(fields[0]);
    if (got != fields[1] && ++mismatches <= 10) {
      ADD_FAILURE() << GetParam() << " " << fields[0] << ": got " << got << ", want " << fields[1];
    }
    ++rows;
  }
  EXPECT_GT(rows, 1000u);
  EXPECT_EQ(mismatches, 0u);
}

INSTANTIATE_TEST_SUITE_P(Languages, StemFixture, ::testing::Values("es", "fr", "it", "pt", "ro"));

}  // namespace

TEST(Stemmer, Examples) {
  EXPECT_EQ(Stemmer(LanguageId("es")).stem("luna"), "lun");
  EXPECT_EQ(Stemmer(LanguageId("it")).stem("preparare"), "prepar");
  EXPECT_EQ(Stemmer(LanguageId("it")).stem("preparato"), "prepar");
  EXPECT_EQ(Stemmer(LanguageId("es")).stem(""), "");
}

TEST(Stemmer, Supports) {
  for (const char* code : {"es", "fr", "it", "pt", "ro"}) EXPECT_TRUE(Stemmer::supports(LanguageId(code)));
  EXPECT_FALSE(Stemmer::supports(LanguageId("de")));
}
