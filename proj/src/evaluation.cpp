#include "lexintel/evaluation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <ostream>

#include <boost/math/distributions/students_t.hpp>
#include <nlohmann/json.hpp>

#include "lexintel/error.hpp"
#include "lexintel/io.hpp"
#include "lexintel/parallel.hpp"
#include "lexintel/random.hpp"

namespace lexintel {

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    const double mean_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = mean_rank;
    i = j;
  }
  return ranks;
}

namespace {

void check_inputs(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error("spearman: length mismatch " + std::to_string(x.size()) + " vs " + std::to_string(y.size()));
  }
  if (x.size() < 3) throw Error("spearman: need at least 3 observations, got " + std::to_string(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) throw Error("spearman: non-finite value");
  }
}

// Ranks shifted to zero mean, plus their norm.
std::pair<std::vector<double>, double> centered_ranks(std::span<const double> values) {
  auto r = average_ranks(values);
  const double mean = (static_cast<double>(r.size()) + 1.0) / 2.0;
  double ss = 0.0;
  for (auto& v : r) {
    v -= mean;
    ss += v * v;
  }
  if (ss == 0.0) throw Error("spearman: constant input has no ranking");
  return {std::move(r), std::sqrt(ss)};
}

double correlate(const std::vector<double>& a, const std::vector<double>& b, double norm) {
  double dot = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  return std::clamp(dot / norm, -1.0, 1.0);
}

}  // namespace

double spearman(std::span<const double> x, std::span<const double> y) {
  check_inputs(x, y);
  const auto [rx, nx] = centered_ranks(x);
  const auto [ry, ny] = centered_ranks(y);
  return correlate(rx, ry, nx * ny);
}

double permutation_p_value(std::span<const double> x, std::span<const double> y, std::size_t n_perm,
                           std::uint64_t seed, unsigned workers) {
  check_inputs(x, y);
  if (n_perm < kMinPermutations) {
    throw Error("insufficient permutations: " + std::to_string(n_perm) + " < " + std::to_string(kMinPermutations));
  }
  const auto [rx, nx] = centered_ranks(x);
  const auto [ry, ny] = centered_ranks(y);
  const double norm = nx * ny;
  const double observed = correlate(rx, ry, norm);
  const double threshold = observed - 1e-12;

  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (n_perm + kChunk - 1) / kChunk;
  std::vector<std::size_t> hits(chunks, 0);
  parallel_for(chunks, workers, [&](std::size_t c) {
    std::vector<double> shuffled(ry.size());
    const std::size_t end = std::min(n_perm, (c + 1) * kChunk);
    for (std::size_t k = c * kChunk; k < end; ++k) {
      auto engine = make_engine(seed, k);
      shuffled = ry;
      for (std::size_t i = shuffled.size() - 1; i > 0; --i) {
        std::swap(shuffled[i], shuffled[uniform_below(engine, i + 1)]);
      }
      if (correlate(rx, shuffled, norm) >= threshold) ++hits[c];
    }
  });
  const auto total = std::accumulate(hits.begin(), hits.end(), std::size_t{0});
  return static_cast<double>(1 + total) / static_cast<double>(1 + n_perm);
}

double t_approximation_p_value(double rho, std::size_t n) {
  if (n < 3) throw Error("t approximation needs at least 3 observations");
  if (std::abs(rho) >= 1.0) return 0.0;
  const double df = static_cast<double>(n - 2);
  const double t = rho * std::sqrt(df / (1.0 - rho * rho));
  const boost::math::students_t dist(df);
  return std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t))));
}

ClozeResults ClozeResults::load(const std::filesystem::path& path) {
  ClozeResults cloze;
  LineReader reader(path);
  std::string line;
  if (!reader.next(line) || trim(line) != "speaker,listener,score") {
    throw ParseError(path.string(), 1, "expected header 'speaker,listener,score'");
  }
  while (reader.next(line)) {
    if (trim(line).empty()) continue;
    const auto fail = [&](const std::string& what) { throw ParseError(path.string(), reader.line_number(), what); };
    const auto fields = split(line, ',');
    if (fields.size() != 3) fail("expected 3 comma-separated columns");
    const auto sp = trim(fields[0]);
    const auto li = trim(fields[1]);
    if (!LanguageId::is_valid(sp) || !LanguageId::is_valid(li)) fail("unknown language code");
    if (sp == li) fail("speaker equals listener");
    const auto value = trim(fields[2]);
    double score = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), score);
    if (ec != std::errc() || ptr != value.data() + value.size()) fail("invalid score '" + std::string(value) + "'");
    if (!(score >= 0.0 && score <= 100.0)) fail("score outside [0, 100]");
    if (!cloze.scores.emplace(std::make_pair(LanguageId(sp), LanguageId(li)), score).second) {
      fail("duplicate pair " + std::string(sp) + "," + std::string(li));
    }
  }
  return cloze;
}

CorrelationReport evaluate_against_cloze(const IntelligibilityMatrix& matrix, ChannelConfig config,
                                         const ClozeResults& cloze, std::size_t n_perm, std::uint64_t seed,
                                         unsigned workers) {
  CorrelationReport report;
  report.config = config;
  report.n_permutations = n_perm;
  report.seed = seed;
  std::vector<double> computed;
  std::vector<double> human;
  for (const auto speaker : matrix.languages) {
    for (const auto listener : matrix.languages) {
      if (speaker == listener) continue;
      const auto key = std::make_pair(speaker, listener);
      const auto it = cloze.scores.find(key);
      if (it == cloze.scores.end()) {
        report.dropped.push_back(key);
        continue;
      }
      report.used.push_back(key);
      computed.push_back(matrix.at(config, speaker, listener).score);
      human.push_back(it->second);
    }
  }
  for (const auto& [key, score] : cloze.scores) {
    const bool in_matrix = matrix.scores.contains({config.index(), key.first, key.second});
    if (!in_matrix) report.dropped.push_back(key);
  }
  std::sort(report.dropped.begin(), report.dropped.end());
  report.n = computed.size();
  if (report.n < 3) throw Error("need at least 3 overlapping pairs, got " + std::to_string(report.n));
  report.rho = spearman(computed, human);
  report.p_permutation = permutation_p_value(computed, human, n_perm, seed, workers);
  report.p_t_approximation = t_approximation_p_value(report.rho, report.n);
  return report;
}

void write_report_json(std::span<const CorrelationReport> reports, std::ostream& out) {
  using Json = nlohmann::ordered_json;
  const auto pair_list = [](const std::vector<std::pair<LanguageId, LanguageId>>& pairs) {
    Json list = Json::array();
    for (const auto& [s, l] : pairs) list.push_back(s.str() + "-" + l.str());
    return list;
  };
  Json doc = Json::array();
  for (const auto& r : reports) {
    doc.push_back(Json{{"surface_channel", to_string(r.config.surface)},
                       {"semantic_channel", to_string(r.config.semantic)},
                       {"rho", r.rho},
                       {"p_permutation", r.p_permutation},
                       {"p_t_approximation", r.p_t_approximation},
                       {"n", r.n},
                       {"n_permutations", r.n_permutations},
                       {"seed", r.seed},
                       {"pairs", pair_list(r.used)},
                       {"dropped", pair_list(r.dropped)}});
  }
  out << doc.dump(2) << '\n';
}

}  // namespace lexintel
