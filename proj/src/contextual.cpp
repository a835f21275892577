#include <algorithm>
#include <cmath>
#include <tuple>

#include <nlohmann/json.hpp>

#include "lexintel/error.hpp"
#include "lexintel/io.hpp"
#include "lexintel/semantics.hpp"
#include "lexintel/text.hpp"

namespace lexintel {

ContextualStore ContextualStore::load(const std::filesystem::path& path, std::size_t max_occurrences) {
  ContextualStore store;
  LineReader reader(path);
  std::string line;
  while (reader.next(line)) {
    if (trim(line).empty()) continue;
    const auto fail = [&](const std::string& what) { throw ParseError(path.string(), reader.line_number(), what); };
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
      const auto lang = record.at("lang").get<std::string>();
      if (!LanguageId::is_valid(lang)) fail("unknown language code '" + lang + "'");
      Occurrence occ;
      occ.sent_id = record.at("sent_id").get<std::size_t>();
      occ.token_index = record.at("token_index").get<std::size_t>();
      const auto& vector = record.at("vector");
      if (!vector.is_array() || vector.empty()) fail("'vector' must be a non-empty array");
      occ.vector.reserve(vector.size());
      for (const auto& x : vector) {
        const double v = x.get<double>();
        if (!std::isfinite(v)) fail("non-finite vector component");
        occ.vector.push_back(static_cast<float>(v));
      }
      if (store.dim_ != 0 && occ.vector.size() != store.dim_) {
        fail("vector has " + std::to_string(occ.vector.size()) + " values, expected " + std::to_string(store.dim_));
      }
      store.add(LanguageId(lang), record.at("word").get<std::string>(), std::move(occ));
    } catch (const nlohmann::json::exception& e) {
      fail(std::string("bad record: ") + e.what());
    }
  }
  store.finalize(max_occurrences);
  return store;
}

void ContextualStore::add(LanguageId lang, std::string_view word, Occurrence occurrence) {
  if (occurrence.vector.empty()) throw Error("empty contextual vector");
  if (dim_ == 0) dim_ = occurrence.vector.size();
  if (occurrence.vector.size() != dim_) throw Error("contextual vectors differ in dimension");
  auto key = strip_accents(word);
  if (key.empty()) throw Error("empty word in contextual record");
  auto it = entries_.find(std::make_pair(lang, key));
  if (it == entries_.end()) {
    it = entries_.emplace(std::make_pair(lang, key), OccurrenceVectors{lang, key, {}}).first;
  }
  it->second.entries.push_back(std::move(occurrence));
}

void ContextualStore::finalize(std::size_t max_occurrences) {
  for (auto& [key, occ] : entries_) {
    std::stable_sort(occ.entries.begin(), occ.entries.end(), [](const Occurrence& x, const Occurrence& y) {
      return std::tie(x.sent_id, x.token_index) < std::tie(y.sent_id, y.token_index);
    });
    if (occ.entries.size() > max_occurrences) {
      truncated_ += occ.entries.size() - max_occurrences;
      occ.entries.resize(max_occurrences);
    }
  }
}

const OccurrenceVectors* ContextualStore::find(LanguageId lang, std::string_view word) const {
  const auto it = entries_.find(std::make_pair(lang, std::string(word)));
  return it == entries_.end() ? nullptr : &it->second;
}

std::size_t ContextualStore::records() const noexcept {
  std::size_t n = 0;
  for (const auto& [key, occ] : entries_) n += occ.entries.size();
  return n;
}

}  // namespace lexintel
