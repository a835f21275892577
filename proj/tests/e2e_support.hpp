#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "lexintel/aggregate.hpp"
#include "lexintel/config.hpp"
#include "lexintel/pipeline.hpp"
#include "test_support.hpp"

namespace lexintel::testutil {

inline std::filesystem::path e2e_dir() { return fixtures() / "e2e"; }

inline nlohmann::json e2e_expected() {
  std::ifstream in(e2e_dir() / "expected.json");
  return nlohmann::json::parse(in);
}

inline std::string config_key(ChannelConfig c) {
  return std::string(to_string(c.surface)) + "_" + std::string(to_string(c.semantic));
}

struct E2eRun {
  RunConfig config;
  Resources resources;
  SimilarityTable table;
  IntelligibilityMatrix matrix;
};

inline E2eRun run_e2e(unsigned workers = 1, std::size_t block_size = 2048) {
  E2eRun run;
  run.config = RunConfig::load(e2e_dir() / "run.conf");
  run.config.workers = workers;
  const auto channels = run.config.effective_channels();
  run.resources = load_resources(run.config, channels);
  run.table = compute_similarities(run.config, run.resources, channels);
  MatrixOptions options;
  options.workers = workers;
  options.block_size = block_size;
  options.configs = channels.configs();
  const auto corpora = pair_corpora(run.config);
  run.matrix = build_matrix(run.config.languages, corpora, *run.resources.lexicon, *run.resources.stopwords,
                            run.table, options);
  return run;
}

// Largest absolute difference between the matrix and the oracle over every
// configuration and direction; -1 when a score is missing.
inline double e2e_max_error(const IntelligibilityMatrix& m, const nlohmann::json& expected) {
  const LanguageId es("es"), ro("ro");
  double worst = 0.0;
  for (int i = 0; i < kChannelConfigs; ++i) {
    const auto c = ChannelConfig::from_index(i);
    const auto& exp = expected.at("configurations").at(config_key(c));
    for (const auto& [s, l, key] : {std::tuple{es, ro, "es->ro"}, std::tuple{ro, es, "ro->es"}}) {
      const auto it = m.scores.find({c.index(), s, l});
      if (it == m.scores.end()) return -1.0;
      worst = std::max(worst, std::abs(it->second.score - exp.at(key).at("score").get<double>()));
    }
  }
  return worst;
}

inline std::string matrix_csv(const IntelligibilityMatrix& m) {
  std::ostringstream out;
  write_matrix_csv(m, out);
  return out.str();
}

}  // namespace lexintel::testutil
