#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lexintel/aggregate.hpp"
#include "lexintel/config.hpp"
#include "lexintel/corpus.hpp"
#include "lexintel/evaluation.hpp"
#include "lexintel/lexicon.hpp"
#include "lexintel/semantics.hpp"
#include "lexintel/similarity.hpp"
#include "lexintel/surface.hpp"

namespace lexintel {

enum class Command { stats, pairsim, matrix, eval, needs_transcription, export_requests };

// Checks, before any loading, that everything `command` needs is configured
// and present on disk. Throws ConfigError naming the first problem.
void validate_config(const RunConfig& config, Command command, const std::filesystem::path& cloze = {});

struct Resources {
  std::optional<Lexicon> lexicon;
  std::optional<StopWords> stopwords;
  std::map<LanguageId, EmbeddingStore> embeddings;
  std::optional<PhoneticLexicon> phonetic;
  std::map<std::string, ContextualStore> contextual;  // by pair label
};

// Loads what the channel selection needs (lexicon and stop-words always).
Resources load_resources(const RunConfig& config, const ChannelSelection& channels);

std::vector<PairCorpus> pair_corpora(const RunConfig& config);

SimilarityTable compute_similarities(const RunConfig& config, const Resources& resources,
                                     const ChannelSelection& channels);

struct ExportRequest {
  LanguageId lang;
  std::string word;
  std::size_t sent_id = 0;
  std::size_t token_index = 0;
  std::string sentence;
};

// Occurrences of lexicon words to embed, at most `cap` per (language, word),
// chosen by reservoir sampling from a seeded engine. Sorted by language, word,
// sentence and token.
std::vector<ExportRequest> collect_export_requests(const PairCorpus& corpus, const Lexicon& lex,
                                                   const StopWords& stopwords, std::size_t cap, std::uint64_t seed);
void write_export_requests(const std::vector<ExportRequest>& requests, std::ostream& out);

// Lexicon words without a transcription, sorted by language then word.
std::vector<std::pair<LanguageId, std::string>> words_needing_transcription(const Lexicon& lex,
                                                                            const PhoneticLexicon* phonetic);

// Reads back the matrix written by write_matrix_json.
IntelligibilityMatrix read_matrix_json(const std::filesystem::path& path);

// Subcommands. Each validates first, writes into config.output and returns the
// files it wrote. Progress goes to `log`.
std::vector<std::filesystem::path> run_stats(const RunConfig& config, std::ostream& log);
std::vector<std::filesystem::path> run_pairsim(const RunConfig& config, std::ostream& log);
std::vector<std::filesystem::path> run_matrix(const RunConfig& config, std::ostream& log);
std::vector<std::filesystem::path> run_eval(const RunConfig& config, const std::filesystem::path& cloze,
                                            const std::filesystem::path& matrix_json, std::ostream& log);
std::vector<std::filesystem::path> run_needs_transcription(const RunConfig& config, std::ostream& log);
std::vector<std::filesystem::path> run_export_requests(const RunConfig& config, std::ostream& log);

}  // namespace lexintel
