#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lexintel/config.hpp"
#include "lexintel/error.hpp"
#include "lexintel/pipeline.hpp"

namespace {

constexpr int kExitComputation = 1;
constexpr int kExitConfig = 2;

struct Overrides {
  std::string config_path;
  std::vector<std::string> settings;
  std::string languages, lexicon, stopwords, phonetic, channels, output;
  std::string seed, workers, permutations;
};

lexintel::RunConfig make_config(const Overrides& o) {
  const auto cwd = std::filesystem::current_path();
  auto config = o.config_path.empty() ? lexintel::RunConfig{} : lexintel::RunConfig::load(o.config_path);
  if (o.config_path.empty()) config.output = cwd / "out";
  for (const auto& s : o.settings) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw lexintel::ConfigError("--set expects key=value, got '" + s + "'");
    config.set(s.substr(0, eq), s.substr(eq + 1), cwd);
  }
  const auto apply = [&](const char* key, const std::string& value) {
    if (!value.empty()) config.set(key, value, cwd);
  };
  apply("languages", o.languages);
  apply("lexicon", o.lexicon);
  apply("stopwords", o.stopwords);
  apply("phonetic", o.phonetic);
  apply("channels", o.channels);
  apply("output", o.output);
  apply("seed", o.seed);
  apply("workers", o.workers);
  apply("permutations", o.permutations);
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directional lexical intelligibility between related languages"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "lexintel 0.1.0");

  Overrides o;
  app.add_option("-c,--config", o.config_path, "Run configuration file (key = value)")->check(CLI::ExistingFile);
  app.add_option("--set", o.settings, "Override a configuration key: --set key=value (repeatable)");
  app.add_option("--languages", o.languages, "Comma-separated language codes, e.g. es,ro");
  app.add_option("--lexicon", o.lexicon, "Related-word lexicon TSV");
  app.add_option("--stopwords", o.stopwords, "Directory of <lang>.txt stop-word lists");
  app.add_option("--phonetic", o.phonetic, "Phonetic lexicon TSV");
  app.add_option("--channels", o.channels, "orthographic,phonetic,static,contextual or auto");
  app.add_option("-o,--output", o.output, "Output directory");
  app.add_option("--seed", o.seed, "Seed for sampling and permutation tests");
  app.add_option("-j,--workers", o.workers, "Worker threads");
  app.add_option("--permutations", o.permutations, "Permutations for the significance test");

  auto* stats = app.add_subcommand("stats", "Corpus statistics per language pair");
  auto* pairsim = app.add_subcommand("pairsim", "Channel scores and indices for every lexicon pair");
  auto* matrix = app.add_subcommand("matrix", "Directional score matrices and heatmap grids");
  auto* eval = app.add_subcommand("eval", "Spearman correlation against cloze-test results");
  std::string cloze;
  std::string matrix_json;
  eval->add_option("--cloze", cloze, "CSV with speaker,listener,score")->required();
  eval->add_option("--matrix", matrix_json, "Reuse a matrix.json instead of recomputing");
  auto* needs = app.add_subcommand("needs-transcription", "Lexicon words missing from the phonetic lexicon");
  auto* exports = app.add_subcommand("export-requests", "Sampled occurrences for the contextual-vector exporter");
  for (auto* sub : {stats, pairsim, matrix, eval, needs, exports}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    const auto config = make_config(o);
    auto& log = std::cerr;
    std::vector<std::filesystem::path> written;
    if (stats->parsed()) written = lexintel::run_stats(config, log);
    else if (pairsim->parsed()) written = lexintel::run_pairsim(config, log);
    else if (matrix->parsed()) written = lexintel::run_matrix(config, log);
    else if (eval->parsed()) written = lexintel::run_eval(config, cloze, matrix_json, log);
    else if (needs->parsed()) written = lexintel::run_needs_transcription(config, log);
    else if (exports->parsed()) written = lexintel::run_export_requests(config, log);
    for (const auto& path : written) std::cout << path.string() << '\n';
    return 0;
  } catch (const lexintel::ConfigError& e) {
    std::cerr << "lexintel: configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const lexintel::ParseError& e) {
    std::cerr << "lexintel: input error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "lexintel: error: " << e.what() << '\n';
    return kExitComputation;
  }
}
