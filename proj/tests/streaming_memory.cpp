// Peak memory while scanning a large synthetic corpus must not grow with the
// corpus. Prints the measured numbers; exits non-zero on failure.
#include <sys/resource.h>

#include <cstdio>
#include <filesystem>

#include "lexintel/aggregate.hpp"
#include "lexintel/pipeline.hpp"
#include "synthetic.hpp"
#include "test_support.hpp"

namespace {

long peak_rss_kb() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return usage.ru_maxrss;
}

}  // namespace

int main() {
  using namespace lexintel;
  testutil::TempDir dir;
  const auto config = testutil::write_synthetic_project(dir.path(), 400000);
  const auto corpus_bytes = std::filesystem::file_size(dir / "corpus.es.txt") +
                            std::filesystem::file_size(dir / "corpus.pt.txt");

  const auto lex = Lexicon::load(config.lexicon, config.languages);
  const auto stopwords = StopWords::load(config.stopwords, config.languages);
  const auto corpora = pair_corpora(config);
  const long before = peak_rss_kb();
  const auto stats = corpus_statistics(corpora[0], lex, stopwords, 2, 2048);
  const long after = peak_rss_kb();

  const double growth_mb = (after - before) / 1024.0;
  const double corpus_mb = static_cast<double>(corpus_bytes) / (1024.0 * 1024.0);
  std::printf("sentences %llu, corpus %.1f MB, peak RSS growth %.1f MB\n",
              static_cast<unsigned long long>(stats.n_sentences), corpus_mb, growth_mb);
  if (stats.n_sentences != 400000) return 1;
  // Well under the size of the text itself.
  return growth_mb < 0.25 * corpus_mb ? 0 : 1;
}
