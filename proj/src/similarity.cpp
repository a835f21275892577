#include "lexintel/similarity.hpp"

#include <cstdint>
#include <set>
#include <utility>

#include "lexintel/error.hpp"
#include "lexintel/io.hpp"
#include "lexintel/parallel.hpp"

namespace lexintel {

std::vector<ChannelConfig> ChannelSelection::configs() const {
  std::vector<ChannelConfig> out;
  for (int i = 0; i < kChannelConfigs; ++i) {
    const auto config = ChannelConfig::from_index(i);
    if (has(config.surface) && has(config.semantic)) out.push_back(config);
  }
  return out;
}

ChannelSelection parse_channels(std::string_view csv) {
  ChannelSelection sel{false, false, false, false};
  for (auto part : split(csv, ',')) {
    part = trim(part);
    if (part == "orthographic") sel.orthographic = true;
    else if (part == "phonetic") sel.phonetic = true;
    else if (part == "static") sel.static_vectors = true;
    else if (part == "contextual") sel.contextual = true;
    else throw ConfigError("unknown channel '" + std::string(part) + "'");
  }
  if (!sel.orthographic && !sel.phonetic) throw ConfigError("channels: no surface channel selected");
  if (!sel.static_vectors && !sel.contextual) throw ConfigError("channels: no semantic channel selected");
  return sel;
}

std::string to_string(const ChannelSelection& channels) {
  std::string out;
  const auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(channels.orthographic, "orthographic");
  add(channels.phonetic, "phonetic");
  add(channels.static_vectors, "static");
  add(channels.contextual, "contextual");
  return out;
}

namespace {

void validate(const SimilarityInputs& in) {
  if (in.lexicon == nullptr) throw ConfigError("no lexicon");
  const auto& langs = in.lexicon->languages();
  if (in.channels.static_vectors) {
    std::size_t dim = 0;
    for (auto lang : langs) {
      const auto it = in.static_vectors.find(lang);
      if (it == in.static_vectors.end() || it->second == nullptr) {
        throw ConfigError("static channel selected but no embeddings for language " + lang.str());
      }
      if (dim != 0 && it->second->dim() != dim) {
        throw ConfigError("embedding dimensions differ across languages (" + std::to_string(dim) + " vs " +
                          std::to_string(it->second->dim()) + " for " + lang.str() + ")");
      }
      dim = it->second->dim();
    }
  }
  if (in.channels.phonetic && in.phonetic == nullptr) {
    throw ConfigError("phonetic channel selected but no phonetic lexicon");
  }
  if (in.channels.contextual && in.contextual.empty()) {
    throw ConfigError("contextual channel selected but no contextual vectors");
  }
}

}  // namespace

SimilarityTable compute_pair_similarities(const SimilarityInputs& in) {
  validate(in);
  const auto& lex = *in.lexicon;
  SimilarityTable table;
  table.pairs.resize(lex.size());

  // Static vectors are resolved once per distinct (language, word).
  std::map<std::pair<LanguageId, std::string>, ResolvedVector> resolved;
  if (in.channels.static_vectors) {
    for (const auto& pair : lex.pairs()) {
      for (const auto lang : {pair.lang_a, pair.lang_b}) {
        auto key = std::make_pair(lang, pair.word_in(lang));
        if (resolved.contains(key)) continue;
        const auto r = in.static_vectors.at(lang)->resolve(key.second);
        auto& counts = table.coverage.static_vectors[lang];
        switch (r.kind) {
          case Resolution::exact: ++counts.exact; break;
          case Resolution::fallback: ++counts.fallback; break;
          case Resolution::missing: ++counts.missing; break;
        }
        resolved.emplace(std::move(key), r);
      }
    }
  }

  // Contextual clusters, one per distinct (language pair, language, word).
  struct ClusterJob {
    const OccurrenceVectors* occurrences;
    ClusterSet clusters;
  };
  std::vector<ClusterJob> jobs;
  std::map<std::pair<const ContextualStore*, const OccurrenceVectors*>, std::size_t> job_index;
  std::vector<std::pair<std::size_t, std::size_t>> pair_jobs(lex.size(), {SIZE_MAX, SIZE_MAX});
  if (in.channels.contextual) {
    for (const auto& pair : lex.pairs()) {
      const auto it = in.contextual.find(pair_label(pair.lang_a, pair.lang_b));
      if (it == in.contextual.end()) {
        ++table.coverage.contextual_unavailable;
        continue;
      }
      const auto* occ_a = it->second->find(pair.lang_a, pair.word_a);
      const auto* occ_b = it->second->find(pair.lang_b, pair.word_b);
      if (occ_a == nullptr || occ_b == nullptr) continue;
      const auto job_for = [&](const OccurrenceVectors* occ) {
        const auto [pos, inserted] = job_index.emplace(std::make_pair(it->second, occ), jobs.size());
        if (inserted) jobs.push_back({occ, {}});
        return pos->second;
      };
      pair_jobs[pair.pair_id] = {job_for(occ_a), job_for(occ_b)};
    }
    parallel_for(jobs.size(), in.workers, [&](std::size_t i) {
      jobs[i].clusters = cluster_occurrences(*jobs[i].occurrences, in.clustering);
    });
  }

  const auto usable = [](const ResolvedVector& r) {
    if (r.kind == Resolution::missing) return false;
    for (const float x : r.vector) {
      if (x != 0.0f) return true;
    }
    return false;
  };

  for (const auto& pair : lex.pairs()) {
    auto& sim = table.pairs[pair.pair_id];
    sim.pair_id = pair.pair_id;
    if (in.channels.orthographic) sim.s_l_orthographic = orthographic_similarity(pair.word_a, pair.word_b);
    if (in.channels.phonetic) {
      const auto* pa = in.phonetic->find(pair.lang_a, pair.word_a);
      const auto* pb = in.phonetic->find(pair.lang_b, pair.word_b);
      if (pa != nullptr && pb != nullptr) {
        sim.s_l_phonetic = surface_similarity(*pa, *pb);
      } else {
        ++table.coverage.phonetic_skipped;
      }
    }
    if (in.channels.static_vectors) {
      const auto& ra = resolved.at({pair.lang_a, pair.word_a});
      const auto& rb = resolved.at({pair.lang_b, pair.word_b});
      if (usable(ra) && usable(rb)) {
        sim.s_s_static = cosine_similarity(ra.vector, rb.vector);
      } else {
        ++table.coverage.static_skipped;
      }
    }
    if (in.channels.contextual) {
      const auto [ja, jb] = pair_jobs[pair.pair_id];
      if (ja != SIZE_MAX) {
        sim.s_s_contextual = contextual_similarity(jobs[ja].clusters, jobs[jb].clusters);
      } else {
        ++table.coverage.contextual_skipped;
      }
    }
    sim.compute_indices();
  }
  return table;
}

}  // namespace lexintel
