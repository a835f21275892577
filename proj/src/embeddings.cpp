#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cmath>

#include "lexintel/error.hpp"
#include "lexintel/io.hpp"
#include "lexintel/semantics.hpp"
#include "lexintel/surface.hpp"
#include "lexintel/text.hpp"

namespace lexintel {

std::string_view to_string(Resolution r) noexcept {
  switch (r) {
    case Resolution::exact: return "exact";
    case Resolution::fallback: return "fallback";
    case Resolution::missing: break;
  }
  return "missing";
}

namespace {

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view text, T& value) {
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end;
}

constexpr std::size_t kPrefixLength = 3;
constexpr std::size_t kPrefixMaxDistance = 3;

}  // namespace

EmbeddingStore EmbeddingStore::load(const std::filesystem::path& path, LanguageId lang) {
  LineReader reader(path);
  std::string line;
  const auto fail = [&](const std::string& what) { throw ParseError(path.string(), reader.line_number(), what); };
  if (!reader.next(line)) fail("missing '<count> <dim>' header");
  const auto header = split_spaces(line);
  std::size_t count = 0;
  std::size_t dim = 0;
  if (header.size() != 2 || !parse_number(header[0], count) || !parse_number(header[1], dim) || dim == 0) {
    fail("expected '<count> <dim>' header");
  }

  EmbeddingStore store;
  store.lang_ = lang;
  store.dim_ = dim;
  if (count * dim < (std::size_t{1} << 30)) {
    store.data_.reserve(count * dim);
    store.words_.reserve(count);
  }
  std::vector<float> values(dim);
  std::size_t rows = 0;
  while (reader.next(line)) {
    if (trim(line).empty()) continue;
    ++rows;
    if (!is_valid_utf8(line)) fail("invalid UTF-8");
    const auto fields = split_spaces(line);
    if (fields.size() != dim + 1) {
      fail("expected " + std::to_string(dim) + " values, found " + std::to_string(fields.size() - 1));
    }
    for (std::size_t i = 0; i < dim; ++i) {
      double v = 0.0;
      if (!parse_number(fields[i + 1], v) || !std::isfinite(v)) {
        fail("invalid number '" + std::string(fields[i + 1]) + "'");
      }
      values[i] = static_cast<float>(v);
    }
    store.add(std::string(fields[0]), values);
  }
  if (rows != count) {
    throw ParseError(path.string(), 1,
                     "header declares " + std::to_string(count) + " vectors, file has " + std::to_string(rows));
  }
  store.build_indices();
  return store;
}

EmbeddingStore EmbeddingStore::from_rows(LanguageId lang, std::size_t dim,
                                         std::span<const std::pair<std::string, std::vector<float>>> rows) {
  if (dim == 0) throw Error("embedding dimension must be positive");
  EmbeddingStore store;
  store.lang_ = lang;
  store.dim_ = dim;
  for (const auto& [word, values] : rows) {
    if (values.size() != dim) {
      throw Error("vector for '" + word + "' has " + std::to_string(values.size()) + " values, expected " +
                  std::to_string(dim));
    }
    store.add(word, values);
  }
  store.build_indices();
  return store;
}

void EmbeddingStore::add(std::string word, std::span<const float> values) {
  if (exact_.contains(word)) {
    ++duplicates_;
    return;
  }
  exact_.emplace(word, words_.size());
  words_.push_back(std::move(word));
  data_.insert(data_.end(), values.begin(), values.end());
}

void EmbeddingStore::build_indices() {
  stemmer_.emplace(lang_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto key = strip_accents(words_[i]);
    if (!normalized_.emplace(key, i).second) continue;
    by_stem_[stemmer_->stem(key)].push_back(i);
    const auto units = decode_utf8(key);
    if (units.size() >= kPrefixLength) by_prefix_[units.substr(0, kPrefixLength)].push_back(i);
  }
}

std::optional<std::size_t> EmbeddingStore::find(std::string_view word) const {
  if (const auto it = exact_.find(std::string(word)); it != exact_.end()) return it->second;
  if (const auto it = normalized_.find(strip_accents(word)); it != normalized_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> EmbeddingStore::closest(std::span<const std::size_t> candidates,
                                                    const std::u32string& query, std::size_t max_distance) const {
  std::optional<std::size_t> best;
  std::size_t best_distance = 0;
  std::string best_key;
  for (const auto index : candidates) {
    auto key = strip_accents(words_[index]);
    const auto distance = levenshtein(decode_utf8(key), query);
    if (distance > max_distance) continue;
    if (!best || distance < best_distance || (distance == best_distance && key < best_key)) {
      best = index;
      best_distance = distance;
      best_key = std::move(key);
    }
  }
  return best;
}

ResolvedVector EmbeddingStore::resolve(std::string_view word) const {
  const auto as_result = [&](Resolution kind, std::size_t index) {
    return ResolvedVector{kind, words_[index], vector(index)};
  };
  if (const auto hit = find(word)) return as_result(Resolution::exact, *hit);

  const auto normalized = strip_accents(word);
  const auto query = decode_utf8(normalized);
  if (query.empty()) return {};

  if (const auto it = by_stem_.find(stemmer_->stem(normalized)); it != by_stem_.end()) {
    if (const auto hit = closest(it->second, query, SIZE_MAX)) return as_result(Resolution::fallback, *hit);
  }
  if (query.size() >= kPrefixLength) {
    if (const auto it = by_prefix_.find(query.substr(0, kPrefixLength)); it != by_prefix_.end()) {
      if (const auto hit = closest(it->second, query, kPrefixMaxDistance)) {
        return as_result(Resolution::fallback, *hit);
      }
    }
  }
  return {};
}

namespace {

template <typename T>
double cosine_impl(std::span<const T> u, std::span<const T> v) {
  if (u.size() != v.size()) {
    throw Error("vector dimensions differ: " + std::to_string(u.size()) + " vs " + std::to_string(v.size()));
  }
  double dot = 0.0;
  double nu = 0.0;
  double nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double a = u[i];
    const double b = v[i];
    dot += a * b;
    nu += a * a;
    nv += b * b;
  }
  if (nu == 0.0 || nv == 0.0) throw Error("cosine of a zero vector");
  // sqrt of the product keeps cos(u, u) at exactly 1.
  return dot / std::sqrt(nu * nv);
}

double clamp_unit(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

}  // namespace

double raw_cosine(std::span<const float> u, std::span<const float> v) { return cosine_impl(u, v); }
double raw_cosine(std::span<const double> u, std::span<const double> v) { return cosine_impl(u, v); }
double cosine_similarity(std::span<const float> u, std::span<const float> v) { return clamp_unit(raw_cosine(u, v)); }
double cosine_similarity(std::span<const double> u, std::span<const double> v) {
  return clamp_unit(raw_cosine(u, v));
}

Neighbor nearest_semantic_neighbor(const EmbeddingStore& source, std::string_view word,
                                   const EmbeddingStore& target, std::span<const std::string> candidates) {
  const auto resolved = source.resolve(word);
  if (resolved.kind == Resolution::missing) throw Error("no vector for '" + std::string(word) + "'");
  std::optional<Neighbor> best;
  for (const auto& candidate : candidates) {
    const auto index = target.find(candidate);
    if (!index) continue;
    const auto vec = target.vector(*index);
    if (std::all_of(vec.begin(), vec.end(), [](float x) { return x == 0.0f; })) continue;
    const double score = raw_cosine(resolved.vector, vec);
    if (!best || score > best->score || (score == best->score && candidate < best->word)) {
      best = Neighbor{candidate, score};
    }
  }
  if (!best) throw Error("no candidate has a vector");
  return *best;
}

}  // namespace lexintel
