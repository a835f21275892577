#include "lexintel/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "lexintel/error.hpp"
#include "lexintel/io.hpp"
#include "lexintel/stemmer.hpp"

namespace lexintel {

namespace {

template <typename T>
T parse_unsigned(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(std::string(key) + ": expected a non-negative integer, got '" + std::string(value) + "'");
  }
  return out;
}

std::string canonical_pair(std::string_view key, std::string_view label) {
  const auto parts = split(label, '-');
  if (parts.size() != 2 || !LanguageId::is_valid(parts[0]) || !LanguageId::is_valid(parts[1]) ||
      parts[0] == parts[1]) {
    throw ConfigError(std::string(key) + ": expected a language pair like 'es-ro'");
  }
  return pair_label(LanguageId(parts[0]), LanguageId(parts[1]));
}

std::filesystem::path resolve(const std::filesystem::path& base, std::string_view value) {
  std::filesystem::path p{std::string(value)};
  return p.is_absolute() || base.empty() ? p : base / p;
}

}  // namespace

void RunConfig::set(std::string_view key, std::string_view value, const std::filesystem::path& base_dir) {
  key = trim(key);
  value = trim(value);
  const auto rest = [&](std::string_view prefix) { return key.substr(prefix.size()); };
  try {
    if (key == "languages") {
      languages = parse_language_list(value);
      for (const auto lang : languages) {
        if (!Stemmer::supports(lang)) throw ConfigError("languages: no stemmer for '" + lang.str() + "'");
      }
    } else if (key == "lexicon") {
      lexicon = resolve(base_dir, value);
    } else if (key == "stopwords") {
      stopwords = resolve(base_dir, value);
    } else if (key == "phonetic") {
      phonetic = value.empty() ? std::filesystem::path() : resolve(base_dir, value);
    } else if (key == "output") {
      output = resolve(base_dir, value);
    } else if (key.starts_with("corpus.")) {
      corpora[canonical_pair(key, rest("corpus."))] = resolve(base_dir, value);
    } else if (key.starts_with("embeddings.")) {
      const auto code = rest("embeddings.");
      if (!LanguageId::is_valid(code)) throw ConfigError(std::string(key) + ": bad language code");
      embeddings[LanguageId(code)] = resolve(base_dir, value);
    } else if (key.starts_with("contextual.")) {
      contextual[canonical_pair(key, rest("contextual."))] = resolve(base_dir, value);
    } else if (key == "channels") {
      if (value.empty() || value == "auto") {
        channels.reset();
      } else {
        channels = parse_channels(value);
      }
    } else if (key == "seed") {
      seed = parse_unsigned<std::uint64_t>(key, value);
    } else if (key == "workers") {
      workers = parse_unsigned<unsigned>(key, value);
      if (workers == 0) throw ConfigError("workers must be at least 1");
    } else if (key == "permutations") {
      permutations = parse_unsigned<std::size_t>(key, value);
    } else if (key == "max_occurrences") {
      max_occurrences = parse_unsigned<std::size_t>(key, value);
      if (max_occurrences == 0) throw ConfigError("max_occurrences must be at least 1");
    } else if (key == "block_size") {
      block_size = parse_unsigned<std::size_t>(key, value);
      if (block_size == 0) throw ConfigError("block_size must be at least 1");
    } else if (key == "plot_command") {
      plot_command = std::string(value);
    } else {
      throw ConfigError("unknown configuration key '" + std::string(key) + "'");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string(key) + ": " + e.what());
  }
}

RunConfig RunConfig::parse(std::string_view text, const std::filesystem::path& base_dir, const std::string& source) {
  RunConfig config;
  std::size_t line_number = 0;
  for (auto line : split(text, '\n')) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(source + ":" + std::to_string(line_number) + ": expected 'key = value'");
    }
    try {
      config.set(line.substr(0, eq), line.substr(eq + 1), base_dir);
    } catch (const ConfigError& e) {
      throw ConfigError(source + ":" + std::to_string(line_number) + ": " + e.what());
    }
  }
  return config;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str(), path.parent_path(), path.string());
}

std::vector<std::pair<LanguageId, LanguageId>> RunConfig::language_pairs() const {
  auto sorted = languages;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<LanguageId, LanguageId>> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) out.emplace_back(sorted[i], sorted[j]);
  }
  return out;
}

ChannelSelection RunConfig::effective_channels() const {
  if (channels) return *channels;
  ChannelSelection sel;
  sel.orthographic = true;
  sel.phonetic = !phonetic.empty();
  sel.static_vectors = !languages.empty() && std::all_of(languages.begin(), languages.end(), [&](LanguageId l) {
    return embeddings.contains(l);
  });
  sel.contextual = false;
  for (const auto& [a, b] : language_pairs()) {
    if (contextual.contains(pair_label(a, b))) sel.contextual = true;
  }
  return sel;
}

}  // namespace lexintel
