#include "lexintel/aggregate.hpp"

#include <algorithm>
#include <ostream>

#include <nlohmann/json.hpp>

#include "lexintel/error.hpp"
#include "lexintel/io.hpp"
#include "lexintel/parallel.hpp"

namespace lexintel {

TokenIndex token_index(std::span<const PairId> pair_ids, std::span<const PairSimilarity> similarities,
                       ChannelConfig config) {
  TokenIndex out;
  for (const PairId id : pair_ids) {
    const auto& d = similarities[id].index(config);
    if (!d) continue;
    if (!out.scored || *d > out.value) out.value = *d;
    out.scored = true;
  }
  return out;
}

SentenceScore sentence_score(const SentencePair& sp, Side speaker, std::span<const MatchedOccurrence> occurrences,
                             std::span<const PairSimilarity> similarities, ChannelConfig config) {
  SentenceScore score;
  score.content_tokens = speaker == Side::a ? sp.tokens_a.size() : sp.tokens_b.size();
  std::vector<PairId> ids;
  std::size_t i = 0;
  while (i < occurrences.size()) {
    const auto& first = occurrences[i];
    std::size_t j = i;
    ids.clear();
    while (j < occurrences.size() && occurrences[j].side == first.side &&
           occurrences[j].token_index == first.token_index && occurrences[j].sent_id == first.sent_id) {
      ids.push_back(occurrences[j].pair_id);
      ++j;
    }
    if (first.side == speaker && first.sent_id == sp.sent_id) {
      const auto t = token_index(ids, similarities, config);
      score.index_sum += t.value;
      if (t.scored) ++score.scored_tokens;
    }
    i = j;
  }
  return score;
}

void CorpusAccumulator::add(const SentenceScore& s) noexcept {
  ++n_sentences_;
  if (s.content_tokens == 0) ++n_empty_;
  index_sum_ += s.index_sum;
  n_content_ += s.content_tokens;
  n_scored_ += s.scored_tokens;
}

void CorpusAccumulator::merge(const CorpusAccumulator& other) noexcept {
  index_sum_ += other.index_sum_;
  n_sentences_ += other.n_sentences_;
  n_empty_ += other.n_empty_;
  n_content_ += other.n_content_;
  n_scored_ += other.n_scored_;
}

DirectionalScore CorpusAccumulator::result(LanguageId speaker, LanguageId listener, ChannelConfig config) const {
  const auto label = speaker.str() + "->" + listener.str();
  if (n_sentences_ == 0) throw Error("empty corpus for " + label);
  if (n_content_ == 0) throw Error("no content tokens on the speaker side for " + label);
  DirectionalScore d;
  d.speaker = speaker;
  d.listener = listener;
  d.config = config;
  d.index_sum = index_sum_;
  d.score = index_sum_ / static_cast<double>(n_content_);
  d.n_sentences = n_sentences_;
  d.n_empty_sentences = n_empty_;
  d.n_content_tokens = n_content_;
  d.n_scored_tokens = n_scored_;
  return d;
}

CorpusFiles corpus_files(const std::filesystem::path& prefix, LanguageId a, LanguageId b) {
  CorpusFiles files;
  files.name = prefix.filename().string();
  files.path_a = prefix;
  files.path_a += "." + a.str() + ".txt";
  files.path_b = prefix;
  files.path_b += "." + b.str() + ".txt";
  return files;
}

namespace {

struct BlockResult {
  CorpusStats stats;
  std::array<std::array<CorpusAccumulator, kChannelConfigs>, 2> scores;
};

struct Slot {
  TextProcessor a;
  TextProcessor b;
  std::vector<MatchedOccurrence> occurrences;
};

template <typename PerSentence>
void stream_blocks(const PairCorpus& corpus, const StopWords& stopwords, unsigned workers, std::size_t block_size,
                   std::vector<BlockResult>& partials, PerSentence&& per_sentence, BlockResult& total,
                   auto&& reduce) {
  if (block_size == 0) throw Error("block size must be positive");
  workers = std::max(1u, workers);
  ParallelReader reader(corpus.files.path_a, corpus.files.path_b);
  std::vector<Slot> slots;
  slots.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) slots.push_back({{corpus.lang_a, stopwords}, {corpus.lang_b, stopwords}, {}});
  std::vector<std::vector<RawSentencePair>> blocks(workers);
  partials.assign(workers, {});
  while (true) {
    std::size_t n_blocks = 0;
    for (auto& block : blocks) {
      block.clear();
      if (reader.read_block(block, block_size) == 0) break;
      ++n_blocks;
    }
    if (n_blocks == 0) break;
    parallel_for(n_blocks, workers, [&](std::size_t i) {
      partials[i] = {};
      auto& slot = slots[i];
      for (const auto& raw : blocks[i]) {
        const auto sp = make_sentence_pair(raw.sent_id, raw.text_a, raw.text_b, slot.a, slot.b);
        per_sentence(sp, slot.occurrences, partials[i]);
      }
    });
    // Fixed-order reduction keeps floating-point sums independent of scheduling.
    for (std::size_t i = 0; i < n_blocks; ++i) reduce(total, partials[i]);
    if (n_blocks < blocks.size()) break;
  }
}

}  // namespace

PairResult process_corpus(const PairCorpus& corpus, const Lexicon& lex, const StopWords& stopwords,
                          std::span<const PairSimilarity> similarities, const MatrixOptions& options) {
  if (similarities.size() != lex.size()) throw Error("similarity table does not match the lexicon");
  std::vector<BlockResult> partials;
  BlockResult total;
  const auto per_sentence = [&](const SentencePair& sp, std::vector<MatchedOccurrence>& occ, BlockResult& out) {
    occ.clear();
    match_occurrences(sp, lex, occ);
    out.stats += sentence_stats(sp, occ);
    for (const auto config : options.configs) {
      for (int dir = 0; dir < 2; ++dir) {
        const auto side = dir == 0 ? Side::a : Side::b;
        out.scores[dir][config.index()].add(sentence_score(sp, side, occ, similarities, config));
      }
    }
  };
  const auto reduce = [](BlockResult& into, const BlockResult& part) {
    into.stats += part.stats;
    for (int dir = 0; dir < 2; ++dir) {
      for (int c = 0; c < kChannelConfigs; ++c) into.scores[dir][c].merge(part.scores[dir][c]);
    }
  };
  stream_blocks(corpus, stopwords, options.workers, options.block_size, partials, per_sentence, total, reduce);
  if (total.stats.aligned_pairs > total.stats.related_words) throw Error("inconsistent corpus statistics");
  PairResult result;
  result.corpus = corpus;
  result.stats = total.stats;
  result.scores = total.scores;
  return result;
}

CorpusStats corpus_statistics(const PairCorpus& corpus, const Lexicon& lex, const StopWords& stopwords,
                              unsigned workers, std::size_t block_size) {
  std::vector<BlockResult> partials;
  BlockResult total;
  const auto per_sentence = [&](const SentencePair& sp, std::vector<MatchedOccurrence>& occ, BlockResult& out) {
    occ.clear();
    match_occurrences(sp, lex, occ);
    out.stats += sentence_stats(sp, occ);
  };
  const auto reduce = [](BlockResult& into, const BlockResult& part) { into.stats += part.stats; };
  stream_blocks(corpus, stopwords, workers, block_size, partials, per_sentence, total, reduce);
  if (total.stats.aligned_pairs > total.stats.related_words) throw Error("inconsistent corpus statistics");
  return total.stats;
}

IntelligibilityMatrix build_matrix(std::span<const LanguageId> languages, std::span<const PairCorpus> corpora,
                                   const Lexicon& lex, const StopWords& stopwords,
                                   const SimilarityTable& similarities, const MatrixOptions& options) {
  IntelligibilityMatrix m;
  m.languages.assign(languages.begin(), languages.end());
  std::sort(m.languages.begin(), m.languages.end());
  m.configs = options.configs;
  m.coverage = similarities.coverage;
  if (m.languages.size() < 2) throw ConfigError("at least two languages are needed");
  if (m.configs.empty()) throw ConfigError("no channel configuration selected");

  std::map<std::string, const PairCorpus*> by_label;
  for (const auto& c : corpora) {
    if (!by_label.emplace(pair_label(c.lang_a, c.lang_b), &c).second) {
      throw ConfigError("more than one corpus for " + pair_label(c.lang_a, c.lang_b));
    }
  }
  std::vector<const PairCorpus*> ordered;
  for (std::size_t i = 0; i < m.languages.size(); ++i) {
    for (std::size_t j = i + 1; j < m.languages.size(); ++j) {
      const auto label = pair_label(m.languages[i], m.languages[j]);
      const auto it = by_label.find(label);
      if (it == by_label.end()) throw ConfigError("no corpus configured for " + label);
      ordered.push_back(it->second);
    }
  }
  for (const auto* c : ordered) {
    for (const auto& path : {c->files.path_a, c->files.path_b}) {
      if (!std::filesystem::is_regular_file(path)) throw ConfigError("corpus file not found: " + path.string());
    }
  }

  for (const auto* c : ordered) {
    const auto result = process_corpus(*c, lex, stopwords, similarities.pairs, options);
    m.stats[pair_label(c->lang_a, c->lang_b)] = result.stats;
    for (const auto config : m.configs) {
      m.scores[{config.index(), c->lang_a, c->lang_b}] =
          result.scores[0][config.index()].result(c->lang_a, c->lang_b, config);
      m.scores[{config.index(), c->lang_b, c->lang_a}] =
          result.scores[1][config.index()].result(c->lang_b, c->lang_a, config);
    }
  }
  return m;
}

std::string format_percent(double score) { return format_fixed(score * 100.0, 1); }

void write_matrix_csv(const IntelligibilityMatrix& m, std::ostream& out) {
  out << "speaker,listener,surface_channel,semantic_channel,score_pct,n_sentences,n_content_tokens,n_scored_tokens\n";
  for (const auto config : m.configs) {
    for (const auto speaker : m.languages) {
      for (const auto listener : m.languages) {
        if (speaker == listener) continue;
        const auto& d = m.at(config, speaker, listener);
        out << speaker.code() << ',' << listener.code() << ',' << to_string(config.surface) << ','
            << to_string(config.semantic) << ',' << format_percent(d.score) << ',' << d.n_sentences << ','
            << d.n_content_tokens << ',' << d.n_scored_tokens << '\n';
      }
    }
  }
}

void write_heatmap_csv(const IntelligibilityMatrix& m, ChannelConfig config, std::ostream& out) {
  out << "speaker";
  for (const auto listener : m.languages) out << ',' << listener.code();
  out << '\n';
  for (const auto speaker : m.languages) {
    out << speaker.code();
    for (const auto listener : m.languages) {
      out << ',';
      if (speaker != listener) out << format_percent(m.at(config, speaker, listener).score);
    }
    out << '\n';
  }
}

namespace {

using Json = nlohmann::ordered_json;

Json stats_json(const CorpusStats& s) {
  return Json{{"n_sentences", s.n_sentences},
              {"total_words_a", s.total_words_a},
              {"total_words_b", s.total_words_b},
              {"related_words", s.related_words},
              {"aligned_pairs", s.aligned_pairs}};
}

}  // namespace

void write_matrix_json(const IntelligibilityMatrix& m, std::ostream& out) {
  Json doc;
  doc["languages"] = Json::array();
  for (const auto lang : m.languages) doc["languages"].push_back(lang.str());

  doc["configurations"] = Json::array();
  for (const auto config : m.configs) {
    Json entry{{"surface_channel", to_string(config.surface)}, {"semantic_channel", to_string(config.semantic)}};
    entry["scores"] = Json::array();
    for (const auto speaker : m.languages) {
      for (const auto listener : m.languages) {
        if (speaker == listener) continue;
        const auto& d = m.at(config, speaker, listener);
        entry["scores"].push_back(Json{{"speaker", speaker.str()},
                                       {"listener", listener.str()},
                                       {"score", d.score},
                                       {"score_pct", format_percent(d.score)},
                                       {"index_sum", d.index_sum},
                                       {"n_sentences", d.n_sentences},
                                       {"n_empty_sentences", d.n_empty_sentences},
                                       {"n_content_tokens", d.n_content_tokens},
                                       {"n_scored_tokens", d.n_scored_tokens}});
      }
    }
    entry["asymmetry"] = Json::array();
    for (std::size_t i = 0; i < m.languages.size(); ++i) {
      for (std::size_t j = i + 1; j < m.languages.size(); ++j) {
        const auto a = m.languages[i];
        const auto b = m.languages[j];
        const double ab = m.at(config, a, b).score;
        const double ba = m.at(config, b, a).score;
        entry["asymmetry"].push_back(Json{{"pair", pair_label(a, b)},
                                          {"a_to_b", ab},
                                          {"b_to_a", ba},
                                          {"delta", ab - ba}});
      }
    }
    doc["configurations"].push_back(std::move(entry));
  }

  doc["corpus_stats"] = Json::object();
  for (const auto& [label, s] : m.stats) doc["corpus_stats"][label] = stats_json(s);

  Json coverage;
  coverage["static"] = Json::object();
  for (const auto& [lang, c] : m.coverage.static_vectors) {
    coverage["static"][lang.str()] = Json{{"exact", c.exact}, {"fallback", c.fallback}, {"missing", c.missing}};
  }
  coverage["static_skipped_pairs"] = m.coverage.static_skipped;
  coverage["phonetic_skipped_pairs"] = m.coverage.phonetic_skipped;
  coverage["contextual_skipped_pairs"] = m.coverage.contextual_skipped;
  coverage["contextual_unavailable_pairs"] = m.coverage.contextual_unavailable;
  doc["coverage"] = std::move(coverage);

  // Phonetic against orthographic scores, reported rather than enforced.
  Json diagnostic = Json::array();
  for (const auto semantic : {SemanticChannel::static_vectors, SemanticChannel::contextual}) {
    const ChannelConfig ortho{SurfaceChannel::orthographic, semantic};
    const ChannelConfig phon{SurfaceChannel::phonetic, semantic};
    if (std::find(m.configs.begin(), m.configs.end(), ortho) == m.configs.end() ||
        std::find(m.configs.begin(), m.configs.end(), phon) == m.configs.end()) {
      continue;
    }
    for (const auto speaker : m.languages) {
      for (const auto listener : m.languages) {
        if (speaker == listener) continue;
        const double o = m.at(ortho, speaker, listener).score;
        const double p = m.at(phon, speaker, listener).score;
        diagnostic.push_back(Json{{"speaker", speaker.str()},
                                  {"listener", listener.str()},
                                  {"semantic_channel", to_string(semantic)},
                                  {"orthographic", o},
                                  {"phonetic", p},
                                  {"phonetic_lower", p < o}});
      }
    }
  }
  doc["phonetic_vs_orthographic"] = std::move(diagnostic);
  out << doc.dump(2) << '\n';
}

void write_stats_json(const PairCorpus& corpus, const CorpusStats& stats, std::ostream& out) {
  Json doc{{"corpus", corpus.files.name},
           {"lang_a", corpus.lang_a.str()},
           {"lang_b", corpus.lang_b.str()}};
  doc.update(stats_json(stats));
  out << doc.dump(2) << '\n';
}

void write_pairsim_csv(const Lexicon& lex, const SimilarityTable& table, std::span<const ChannelConfig> configs,
                       std::ostream& out) {
  out << "pair_id,lang_a,lang_b,word_a,word_b,relation,surface_channel,semantic_channel,s_l,s_s,d_li,available\n";
  const auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  for (const auto& pair : lex.pairs()) {
    const auto& sim = table.pairs.at(pair.pair_id);
    for (const auto config : configs) {
      const auto& d = sim.index(config);
      out << pair.pair_id << ',' << pair.lang_a.code() << ',' << pair.lang_b.code() << ',' << csv_escape(pair.word_a)
          << ',' << csv_escape(pair.word_b) << ',' << to_string(pair.relation) << ',' << to_string(config.surface) << ','
          << to_string(config.semantic) << ',' << opt(sim.surface(config.surface)) << ','
          << opt(sim.semantic(config.semantic)) << ',' << opt(d) << ',' << (d ? 1 : 0) << '\n';
    }
  }
}

}  // namespace lexintel
