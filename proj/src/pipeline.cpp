#include "lexintel/pipeline.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <tuple>

#include <nlohmann/json.hpp>

#include "lexintel/error.hpp"
#include "lexintel/io.hpp"
#include "lexintel/random.hpp"

namespace lexintel {

namespace {

namespace fs = std::filesystem;

void require_file(const fs::path& path, const std::string& what) {
  if (path.empty()) throw ConfigError(what + " is not configured");
  if (!fs::is_regular_file(path)) throw ConfigError(what + " not found: " + path.string());
}

void require_languages(const RunConfig& config) {
  if (config.languages.size() < 2) throw ConfigError("languages: at least two languages are required");
}

void require_corpora(const RunConfig& config) {
  if (config.stopwords.empty()) throw ConfigError("stopwords directory is not configured");
  for (const auto lang : config.languages) require_file(config.stopwords / (lang.str() + ".txt"), "stop-word list");
  for (const auto& [a, b] : config.language_pairs()) {
    const auto label = pair_label(a, b);
    const auto it = config.corpora.find(label);
    if (it == config.corpora.end()) throw ConfigError("no corpus configured for " + label);
    const auto files = corpus_files(it->second, a, b);
    require_file(files.path_a, "corpus file");
    require_file(files.path_b, "corpus file");
  }
}

void require_channels(const RunConfig& config, const ChannelSelection& channels) {
  if (!channels.orthographic && !channels.phonetic) throw ConfigError("no surface channel available");
  if (!channels.static_vectors && !channels.contextual) {
    throw ConfigError("no semantic channel available (configure embeddings.<lang> or contextual.<a>-<b>)");
  }
  if (channels.static_vectors) {
    for (const auto lang : config.languages) {
      const auto it = config.embeddings.find(lang);
      if (it == config.embeddings.end()) throw ConfigError("static channel: no embeddings." + lang.str());
      require_file(it->second, "embeddings for " + lang.str());
    }
  }
  if (channels.phonetic) require_file(config.phonetic, "phonetic lexicon");
  if (channels.contextual) {
    bool any = false;
    for (const auto& [a, b] : config.language_pairs()) {
      const auto it = config.contextual.find(pair_label(a, b));
      if (it == config.contextual.end()) continue;
      require_file(it->second, "contextual vectors for " + pair_label(a, b));
      any = true;
    }
    if (!any) throw ConfigError("contextual channel: no contextual.<a>-<b> file for the configured languages");
  }
}

void prepare_output(const RunConfig& config) {
  std::error_code ec;
  fs::create_directories(config.output, ec);
  if (ec || !fs::is_directory(config.output)) {
    throw ConfigError("cannot create output directory " + config.output.string());
  }
}

fs::path write_file(const fs::path& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path.string());
  body(out);
  out.flush();
  if (!out) throw Error("failed writing " + path.string());
  return path;
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (const char c : s) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

std::string config_suffix(ChannelConfig c) {
  return std::string(to_string(c.surface)) + "_" + std::string(to_string(c.semantic));
}

}  // namespace

void validate_config(const RunConfig& config, Command command, const fs::path& cloze) {
  require_languages(config);
  require_file(config.lexicon, "lexicon");
  switch (command) {
    case Command::stats:
    case Command::export_requests:
      require_corpora(config);
      break;
    case Command::pairsim:
      require_channels(config, config.effective_channels());
      break;
    case Command::matrix:
      require_corpora(config);
      require_channels(config, config.effective_channels());
      break;
    case Command::eval:
      require_file(cloze, "cloze file");
      if (config.permutations < kMinPermutations) {
        throw ConfigError("insufficient permutations: " + std::to_string(config.permutations));
      }
      break;
    case Command::needs_transcription:
      if (!config.phonetic.empty()) require_file(config.phonetic, "phonetic lexicon");
      break;
  }
}

Resources load_resources(const RunConfig& config, const ChannelSelection& channels) {
  Resources r;
  r.lexicon = Lexicon::load(config.lexicon, config.languages);
  if (!config.stopwords.empty()) r.stopwords = StopWords::load(config.stopwords, config.languages);
  if (channels.static_vectors) {
    for (const auto lang : config.languages) r.embeddings.emplace(lang, EmbeddingStore::load(config.embeddings.at(lang), lang));
  }
  if (channels.phonetic) r.phonetic = PhoneticLexicon::load(config.phonetic);
  if (channels.contextual) {
    for (const auto& [a, b] : config.language_pairs()) {
      const auto label = pair_label(a, b);
      if (const auto it = config.contextual.find(label); it != config.contextual.end()) {
        r.contextual.emplace(label, ContextualStore::load(it->second, config.max_occurrences));
      }
    }
  }
  return r;
}

std::vector<PairCorpus> pair_corpora(const RunConfig& config) {
  std::vector<PairCorpus> out;
  for (const auto& [a, b] : config.language_pairs()) {
    const auto label = pair_label(a, b);
    const auto it = config.corpora.find(label);
    if (it == config.corpora.end()) throw ConfigError("no corpus configured for " + label);
    out.push_back({a, b, corpus_files(it->second, a, b)});
  }
  return out;
}

SimilarityTable compute_similarities(const RunConfig& config, const Resources& resources,
                                     const ChannelSelection& channels) {
  SimilarityInputs in;
  in.lexicon = &*resources.lexicon;
  for (const auto& [lang, store] : resources.embeddings) in.static_vectors[lang] = &store;
  in.phonetic = resources.phonetic ? &*resources.phonetic : nullptr;
  for (const auto& [label, store] : resources.contextual) in.contextual[label] = &store;
  in.channels = channels;
  in.workers = config.workers;
  return compute_pair_similarities(in);
}

std::vector<ExportRequest> collect_export_requests(const PairCorpus& corpus, const Lexicon& lex,
                                                   const StopWords& stopwords, std::size_t cap, std::uint64_t seed) {
  if (cap == 0) throw Error("occurrence cap must be positive");
  struct Reservoir {
    std::uint64_t seen = 0;
    std::vector<ExportRequest> kept;
  };
  std::map<std::pair<LanguageId, std::string>, Reservoir> reservoirs;
  // One stream per language pair, derived from the label (FNV-1a) so it does
  // not depend on std::hash.
  std::uint64_t stream = 0xcbf29ce484222325ULL;
  for (const char c : "export:" + pair_label(corpus.lang_a, corpus.lang_b)) {
    stream = (stream ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  }
  auto engine = make_engine(seed, stream);

  ParallelReader reader(corpus.files.path_a, corpus.files.path_b);
  TextProcessor proc_a(corpus.lang_a, stopwords);
  TextProcessor proc_b(corpus.lang_b, stopwords);
  RawSentencePair raw;
  std::vector<MatchedOccurrence> occurrences;
  std::set<std::tuple<Side, std::uint32_t, std::string_view>> emitted;
  while (reader.next(raw)) {
    const auto sp = make_sentence_pair(raw.sent_id, raw.text_a, raw.text_b, proc_a, proc_b);
    occurrences.clear();
    match_occurrences(sp, lex, occurrences);
    emitted.clear();
    for (const auto& occ : occurrences) {
      const auto lang = occ.side == Side::a ? corpus.lang_a : corpus.lang_b;
      const auto& word = lex.pair(occ.pair_id).word_in(lang);
      if (!emitted.emplace(occ.side, occ.token_index, word).second) continue;
      auto& res = reservoirs[{lang, word}];
      ++res.seen;
      ExportRequest req{lang, word, sp.sent_id, occ.token_index, occ.side == Side::a ? raw.text_a : raw.text_b};
      if (res.kept.size() < cap) {
        res.kept.push_back(std::move(req));
      } else {
        const auto j = uniform_below(engine, res.seen);
        if (j < cap) res.kept[j] = std::move(req);
      }
    }
  }
  std::vector<ExportRequest> out;
  for (auto& [key, res] : reservoirs) {
    std::sort(res.kept.begin(), res.kept.end(), [](const ExportRequest& x, const ExportRequest& y) {
      return std::tie(x.sent_id, x.token_index) < std::tie(y.sent_id, y.token_index);
    });
    for (auto& r : res.kept) out.push_back(std::move(r));
  }
  return out;
}

void write_export_requests(const std::vector<ExportRequest>& requests, std::ostream& out) {
  for (const auto& r : requests) {
    nlohmann::ordered_json rec{{"lang", r.lang.str()},
                               {"word", r.word},
                               {"sent_id", r.sent_id},
                               {"token_index", r.token_index},
                               {"sentence", r.sentence}};
    out << rec.dump() << '\n';
  }
}

std::vector<std::pair<LanguageId, std::string>> words_needing_transcription(const Lexicon& lex,
                                                                            const PhoneticLexicon* phonetic) {
  std::set<std::pair<LanguageId, std::string>> words;
  for (const auto& pair : lex.pairs()) {
    for (const auto lang : {pair.lang_a, pair.lang_b}) {
      const auto& word = pair.word_in(lang);
      if (phonetic == nullptr || !phonetic->contains(lang, word)) words.emplace(lang, word);
    }
  }
  return {words.begin(), words.end()};
}

IntelligibilityMatrix read_matrix_json(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  IntelligibilityMatrix m;
  try {
    const auto doc = nlohmann::json::parse(in);
    for (const auto& lang : doc.at("languages")) m.languages.emplace_back(lang.get<std::string>());
    for (const auto& entry : doc.at("configurations")) {
      const ChannelConfig config{parse_surface_channel(entry.at("surface_channel").get<std::string>()),
                                 parse_semantic_channel(entry.at("semantic_channel").get<std::string>())};
      m.configs.push_back(config);
      for (const auto& s : entry.at("scores")) {
        DirectionalScore d;
        d.speaker = LanguageId(s.at("speaker").get<std::string>());
        d.listener = LanguageId(s.at("listener").get<std::string>());
        d.config = config;
        d.score = s.at("score").get<double>();
        d.index_sum = s.value("index_sum", 0.0);
        d.n_sentences = s.at("n_sentences").get<std::uint64_t>();
        d.n_empty_sentences = s.value("n_empty_sentences", std::uint64_t{0});
        d.n_content_tokens = s.at("n_content_tokens").get<std::uint64_t>();
        d.n_scored_tokens = s.at("n_scored_tokens").get<std::uint64_t>();
        m.scores[{config.index(), d.speaker, d.listener}] = d;
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string(), 0, std::string("bad matrix JSON: ") + e.what());
  }
  std::sort(m.languages.begin(), m.languages.end());
  return m;
}

std::vector<fs::path> run_stats(const RunConfig& config, std::ostream& log) {
  validate_config(config, Command::stats);
  prepare_output(config);
  const auto lex = Lexicon::load(config.lexicon, config.languages);
  const auto stopwords = StopWords::load(config.stopwords, config.languages);
  log << "lexicon: " << lex.size() << " pairs\n";
  std::vector<fs::path> written;
  for (const auto& corpus : pair_corpora(config)) {
    const auto stats = corpus_statistics(corpus, lex, stopwords, config.workers, config.block_size);
    const auto label = pair_label(corpus.lang_a, corpus.lang_b);
    log << label << ": " << stats.n_sentences << " sentences, " << stats.related_words << " related words, "
        << stats.aligned_pairs << " aligned\n";
    written.push_back(write_file(config.output / ("stats_" + label + ".json"),
                                 [&](std::ostream& out) { write_stats_json(corpus, stats, out); }));
  }
  return written;
}

namespace {

void write_coverage(const CoverageReport& c, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["static"] = nlohmann::ordered_json::object();
  for (const auto& [lang, counts] : c.static_vectors) {
    doc["static"][lang.str()] = {{"exact", counts.exact}, {"fallback", counts.fallback}, {"missing", counts.missing}};
  }
  doc["static_skipped_pairs"] = c.static_skipped;
  doc["phonetic_skipped_pairs"] = c.phonetic_skipped;
  doc["contextual_skipped_pairs"] = c.contextual_skipped;
  doc["contextual_unavailable_pairs"] = c.contextual_unavailable;
  out << doc.dump(2) << '\n';
}

}  // namespace

std::vector<fs::path> run_pairsim(const RunConfig& config, std::ostream& log) {
  validate_config(config, Command::pairsim);
  prepare_output(config);
  const auto channels = config.effective_channels();
  log << "channels: " << to_string(channels) << '\n';
  const auto resources = load_resources(config, channels);
  const auto table = compute_similarities(config, resources, channels);
  const auto configs = channels.configs();
  return {write_file(config.output / "pairsim.csv",
                     [&](std::ostream& out) { write_pairsim_csv(*resources.lexicon, table, configs, out); }),
          write_file(config.output / "coverage.json", [&](std::ostream& out) { write_coverage(table.coverage, out); })};
}

std::vector<fs::path> run_matrix(const RunConfig& config, std::ostream& log) {
  validate_config(config, Command::matrix);
  prepare_output(config);
  const auto channels = config.effective_channels();
  log << "channels: " << to_string(channels) << '\n';
  const auto resources = load_resources(config, channels);
  const auto table = compute_similarities(config, resources, channels);
  MatrixOptions options;
  options.workers = config.workers;
  options.block_size = config.block_size;
  options.configs = channels.configs();
  const auto corpora = pair_corpora(config);
  const auto matrix = build_matrix(config.languages, corpora, *resources.lexicon, *resources.stopwords, table, options);

  std::vector<fs::path> written;
  written.push_back(write_file(config.output / "matrix.csv", [&](std::ostream& out) { write_matrix_csv(matrix, out); }));
  written.push_back(write_file(config.output / "matrix.json", [&](std::ostream& out) { write_matrix_json(matrix, out); }));
  for (const auto c : matrix.configs) {
    const auto csv = config.output / ("heatmap_" + config_suffix(c) + ".csv");
    written.push_back(write_file(csv, [&](std::ostream& out) { write_heatmap_csv(matrix, c, out); }));
    if (!config.plot_command.empty()) {
      auto png = csv;
      png.replace_extension(".png");
      const auto command = config.plot_command + " " + shell_quote(csv.string()) + " " + shell_quote(png.string());
      if (std::system(command.c_str()) == 0 && fs::exists(png)) {
        written.push_back(png);
      } else {
        log << "warning: plot command failed for " << csv.string() << '\n';
      }
    }
  }
  for (const auto& [label, stats] : matrix.stats) {
    log << label << ": " << stats.n_sentences << " sentences, " << stats.related_words << " related words\n";
  }
  return written;
}

std::vector<fs::path> run_eval(const RunConfig& config, const fs::path& cloze_path, const fs::path& matrix_json,
                               std::ostream& log) {
  validate_config(config, Command::eval, cloze_path);
  IntelligibilityMatrix matrix;
  if (!matrix_json.empty()) {
    require_file(matrix_json, "matrix JSON");
    prepare_output(config);
    matrix = read_matrix_json(matrix_json);
  } else {
    validate_config(config, Command::matrix);
    run_matrix(config, log);
    matrix = read_matrix_json(config.output / "matrix.json");
  }
  const auto cloze = ClozeResults::load(cloze_path);
  std::vector<CorrelationReport> reports;
  for (const auto c : matrix.configs) {
    reports.push_back(evaluate_against_cloze(matrix, c, cloze, config.permutations, config.seed, config.workers));
    const auto& r = reports.back();
    log << config_suffix(c) << ": rho = " << format_fixed(r.rho, 4) << ", p = " << format_double(r.p_permutation)
        << ", n = " << r.n << '\n';
    if (!r.dropped.empty()) log << "warning: " << r.dropped.size() << " pairs without a counterpart were dropped\n";
  }
  return {write_file(config.output / "eval.json", [&](std::ostream& out) { write_report_json(reports, out); })};
}

std::vector<fs::path> run_needs_transcription(const RunConfig& config, std::ostream& log) {
  validate_config(config, Command::needs_transcription);
  prepare_output(config);
  const auto lex = Lexicon::load(config.lexicon, config.languages);
  std::optional<PhoneticLexicon> phonetic;
  if (!config.phonetic.empty()) phonetic = PhoneticLexicon::load(config.phonetic);
  const auto words = words_needing_transcription(lex, phonetic ? &*phonetic : nullptr);
  log << words.size() << " words need a transcription\n";
  return {write_file(config.output / "needs_transcription.tsv", [&](std::ostream& out) {
    for (const auto& [lang, word] : words) out << lang.code() << '\t' << word << '\n';
  })};
}

std::vector<fs::path> run_export_requests(const RunConfig& config, std::ostream& log) {
  validate_config(config, Command::export_requests);
  prepare_output(config);
  const auto lex = Lexicon::load(config.lexicon, config.languages);
  const auto stopwords = StopWords::load(config.stopwords, config.languages);
  std::vector<fs::path> written;
  for (const auto& corpus : pair_corpora(config)) {
    const auto requests = collect_export_requests(corpus, lex, stopwords, config.max_occurrences, config.seed);
    const auto label = pair_label(corpus.lang_a, corpus.lang_b);
    log << label << ": " << requests.size() << " occurrence requests\n";
    written.push_back(write_file(config.output / ("export_requests." + label + ".jsonl"),
                                 [&](std::ostream& out) { write_export_requests(requests, out); }));
  }
  return written;
}

}  // namespace lexintel
