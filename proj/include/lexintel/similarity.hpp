#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lexintel/dli.hpp"
#include "lexintel/language.hpp"
#include "lexintel/lexicon.hpp"
#include "lexintel/semantics.hpp"
#include "lexintel/surface.hpp"

namespace lexintel {

struct ChannelSelection {
  bool orthographic = true;
  bool phonetic = false;
  bool static_vectors = true;
  bool contextual = false;

  bool has(SurfaceChannel c) const noexcept {
    return c == SurfaceChannel::orthographic ? orthographic : phonetic;
  }
  bool has(SemanticChannel c) const noexcept {
    return c == SemanticChannel::static_vectors ? static_vectors : contextual;
  }
  // Selected surface x semantic combinations, in ChannelConfig::index order.
  std::vector<ChannelConfig> configs() const;
};

// Parses "orthographic,static,contextual". At least one surface and one
// semantic channel must be named.
ChannelSelection parse_channels(std::string_view csv);
std::string to_string(const ChannelSelection& channels);

struct CoverageCounts {
  std::size_t exact = 0;
  std::size_t fallback = 0;
  std::size_t missing = 0;
};

struct CoverageReport {
  // Distinct lexicon words per language, by static-vector resolution outcome.
  std::map<LanguageId, CoverageCounts> static_vectors;
  // Pairs left without a score in each channel.
  std::size_t static_skipped = 0;
  std::size_t phonetic_skipped = 0;
  std::size_t contextual_skipped = 0;
  // Pairs without a contextual file for their language pair at all.
  std::size_t contextual_unavailable = 0;
};

struct SimilarityInputs {
  const Lexicon* lexicon = nullptr;
  std::map<LanguageId, const EmbeddingStore*> static_vectors;
  const PhoneticLexicon* phonetic = nullptr;
  // Keyed by pair_label(a, b).
  std::map<std::string, const ContextualStore*> contextual;
  ChannelSelection channels;
  AffinityPropagationParams clustering;
  unsigned workers = 1;
};

struct SimilarityTable {
  std::vector<PairSimilarity> pairs;  // indexed by pair_id
  CoverageReport coverage;
};

// Channel scores and indices for every lexicon pair. Throws ConfigError when a
// selected channel lacks its resource (a missing contextual file for one
// language pair only marks those pairs unavailable).
SimilarityTable compute_pair_similarities(const SimilarityInputs& inputs);

}  // namespace lexintel
