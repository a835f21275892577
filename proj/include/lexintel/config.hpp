#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexintel/evaluation.hpp"
#include "lexintel/language.hpp"
#include "lexintel/semantics.hpp"
#include "lexintel/similarity.hpp"

namespace lexintel {

// Declarative run description. The file format is one `key = value` per line,
// `#` starts a comment, relative paths are taken from the file's directory:
//
//   languages = es,ro
//   lexicon = lexicon.tsv
//   stopwords = stopwords            # directory with <lang>.txt
//   corpus.es-ro = corpora/romcro    # corpora/romcro.es.txt, corpora/romcro.ro.txt
//   embeddings.es = vectors/es.vec
//   phonetic = phonetic.tsv
//   contextual.es-ro = contextual/es-ro.jsonl
//   channels = orthographic,phonetic,static,contextual
//   output = out
//   seed = 7
//   workers = 4
//   permutations = 100000
//   max_occurrences = 200
//   block_size = 2048
//   plot_command = python3 -m lexintel.heatmap
struct RunConfig {
  std::vector<LanguageId> languages;
  std::filesystem::path lexicon;
  std::filesystem::path stopwords;
  std::filesystem::path phonetic;
  std::filesystem::path output = "out";
  std::map<std::string, std::filesystem::path> corpora;     // pair label -> prefix
  std::map<LanguageId, std::filesystem::path> embeddings;
  std::map<std::string, std::filesystem::path> contextual;  // pair label -> file
  std::optional<ChannelSelection> channels;                 // unset: chosen from resources
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
  std::size_t permutations = kDefaultPermutations;
  std::size_t max_occurrences = ContextualStore::kDefaultMaxOccurrences;
  std::size_t block_size = 2048;
  std::string plot_command;

  static RunConfig parse(std::string_view text, const std::filesystem::path& base_dir,
                         const std::string& source = "<config>");
  static RunConfig load(const std::filesystem::path& path);

  // Applies one setting; throws ConfigError for unknown keys or bad values.
  void set(std::string_view key, std::string_view value, const std::filesystem::path& base_dir);

  // Sorted unordered language pairs among `languages`.
  std::vector<std::pair<LanguageId, LanguageId>> language_pairs() const;

  // The explicit selection, or every channel whose resources are configured.
  ChannelSelection effective_channels() const;
};

}  // namespace lexintel
