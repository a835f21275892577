#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include "lexintel/error.hpp"
#include "lexintel/semantics.hpp"

namespace lexintel {

namespace {

using Matrix = std::vector<double>;  // row-major n x n

double median(std::vector<double> values) {
  const auto n = values.size();
  const auto mid = values.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::nth_element(values.begin(), mid, values.end());
  if (n % 2 == 1) return *mid;
  const double upper = *mid;
  const double lower = *std::max_element(values.begin(), mid);
  return (lower + upper) / 2.0;
}

// Index of the first maximum of row i restricted to `columns`.
std::size_t argmax_over(const Matrix& s, std::size_t n, std::size_t i, const std::vector<std::size_t>& columns) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < columns.size(); ++k) {
    if (s[i * n + columns[k]] > s[i * n + columns[best]]) best = k;
  }
  return best;
}

std::vector<std::size_t> assign(const Matrix& s, std::size_t n, const std::vector<std::size_t>& exemplars) {
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = argmax_over(s, n, i, exemplars);
  for (std::size_t k = 0; k < exemplars.size(); ++k) labels[exemplars[k]] = k;
  return labels;
}

// Standard normal deviates in the order numpy's legacy RandomState produces
// them: 53-bit doubles from MT19937 fed to the polar method, second value cached.
class LegacyGauss {
 public:
  explicit LegacyGauss(std::uint32_t seed) : engine_(seed) {}

  double operator()() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double x1 = 0.0;
    double x2 = 0.0;
    double r2 = 0.0;
    do {
      x1 = 2.0 * uniform() - 1.0;
      x2 = 2.0 * uniform() - 1.0;
      r2 = x1 * x1 + x2 * x2;
    } while (r2 >= 1.0 || r2 == 0.0);
    const double f = std::sqrt(-2.0 * std::log(r2) / r2);
    cached_ = f * x1;
    has_cached_ = true;
    return f * x2;
  }

 private:
  double uniform() {
    const auto a = static_cast<std::uint32_t>(engine_()) >> 5;
    const auto b = static_cast<std::uint32_t>(engine_()) >> 6;
    return (a * 67108864.0 + b) / 9007199254740992.0;
  }

  std::mt19937 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace

AffinityPropagationResult affinity_propagation(std::span<const double> points, std::size_t dim,
                                               const AffinityPropagationParams& params) {
  if (dim == 0 || points.empty() || points.size() % dim != 0) throw Error("affinity propagation: bad input shape");
  if (params.damping < 0.5 || params.damping >= 1.0) throw Error("affinity propagation: damping must be in [0.5, 1)");
  const std::size_t n = points.size() / dim;

  AffinityPropagationResult result;
  if (n == 1) {
    result.exemplars = {0};
    result.labels = {0};
    result.converged = true;
    return result;
  }

  Matrix s(n * n, 0.0);
  std::vector<double> off_diagonal;
  off_diagonal.reserve(n * (n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      double d = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        const double diff = points[i * dim + k] - points[j * dim + k];
        d += diff * diff;
      }
      s[i * n + j] = -d;
      off_diagonal.push_back(-d);
    }
  }
  const double preference = median(off_diagonal);

  // With all similarities equal the messages carry no information.
  if (std::all_of(off_diagonal.begin(), off_diagonal.end(), [&](double x) { return x == off_diagonal.front(); })) {
    result.converged = true;
    if (preference > s[n - 1]) {
      for (std::size_t i = 0; i < n; ++i) {
        result.exemplars.push_back(i);
        result.labels.push_back(i);
      }
    } else {
      result.exemplars = {0};
      result.labels.assign(n, 0);
    }
    return result;
  }

  for (std::size_t i = 0; i < n; ++i) s[i * n + i] = preference;
  if (params.jitter) {
    LegacyGauss gauss(params.jitter_seed);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double tiny = std::numeric_limits<double>::min();
    for (auto& v : s) v += (eps * v + tiny * 100.0) * gauss();
  }

  const double damping = params.damping;
  const auto window = static_cast<std::size_t>(params.convergence_iter);
  Matrix a(n * n, 0.0);
  Matrix r(n * n, 0.0);
  Matrix tmp(n * n, 0.0);
  std::vector<double> column_sum(n);
  std::vector<std::uint8_t> history(n * window, 0);
  std::vector<std::uint8_t> is_exemplar(n, 0);
  const double neg_inf = -std::numeric_limits<double>::infinity();

  for (int it = 0; it < params.max_iter; ++it) {
    result.iterations = it + 1;
    // Responsibilities.
    for (std::size_t i = 0; i < n; ++i) {
      const double* srow = &s[i * n];
      const double* arow = &a[i * n];
      std::size_t first = 0;
      double y1 = neg_inf;
      for (std::size_t k = 0; k < n; ++k) {
        const double v = arow[k] + srow[k];
        if (v > y1) {
          y1 = v;
          first = k;
        }
      }
      double y2 = neg_inf;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != first) y2 = std::max(y2, arow[k] + srow[k]);
      }
      double* rrow = &r[i * n];
      for (std::size_t k = 0; k < n; ++k) {
        const double fresh = srow[k] - (k == first ? y2 : y1);
        rrow[k] = damping * rrow[k] + (1.0 - damping) * fresh;
      }
    }
    // Availabilities.
    std::fill(column_sum.begin(), column_sum.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const double v = r[i * n + k];
        tmp[i * n + k] = i == k ? v : std::max(v, 0.0);
        column_sum[k] += tmp[i * n + k];
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const double neg_new = tmp[i * n + k] - column_sum[k];
        const double bounded = i == k ? neg_new : std::max(neg_new, 0.0);
        a[i * n + k] = damping * a[i * n + k] - (1.0 - damping) * bounded;
      }
    }
    // Convergence: the exemplar set has been stable for `window` iterations.
    std::size_t k_count = 0;
    const auto slot = static_cast<std::size_t>(it) % window;
    for (std::size_t i = 0; i < n; ++i) {
      is_exemplar[i] = (a[i * n + i] + r[i * n + i]) > 0.0;
      history[i * window + slot] = is_exemplar[i];
      k_count += is_exemplar[i];
    }
    if (static_cast<std::size_t>(it) >= window) {
      bool stable = true;
      for (std::size_t i = 0; i < n && stable; ++i) {
        std::size_t sum = 0;
        for (std::size_t w = 0; w < window; ++w) sum += history[i * window + w];
        stable = sum == 0 || sum == window;
      }
      if (stable && k_count > 0) {
        result.converged = true;
        break;
      }
    }
  }
  if (!result.converged) return result;

  std::vector<std::size_t> exemplars;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_exemplar[i]) exemplars.push_back(i);
  }
  // Refine: each cluster's exemplar becomes the member with the largest total
  // similarity to the other members.
  auto labels = assign(s, n, exemplars);
  for (std::size_t k = 0; k < exemplars.size(); ++k) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (labels[i] == k) members.push_back(i);
    }
    std::size_t chosen = members.front();
    double chosen_sum = neg_inf;
    for (const auto j : members) {
      double sum = 0.0;
      for (const auto i : members) sum += s[i * n + j];
      if (sum > chosen_sum) {
        chosen_sum = sum;
        chosen = j;
      }
    }
    exemplars[k] = chosen;
  }
  labels = assign(s, n, exemplars);

  // Relabel by sorted exemplar index, dropping exemplars left without members.
  std::vector<std::size_t> used;
  for (const auto label : labels) used.push_back(exemplars[label]);
  std::vector<std::size_t> unique = used;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  result.exemplars = unique;
  result.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    result.labels[i] =
        static_cast<std::size_t>(std::lower_bound(unique.begin(), unique.end(), used[i]) - unique.begin());
  }
  return result;
}

ClusterSet cluster_vectors(std::span<const std::vector<float>> vectors, const AffinityPropagationParams& params) {
  if (vectors.empty()) throw Error("cannot cluster an empty occurrence list");
  const std::size_t dim = vectors.front().size();
  if (dim == 0) throw Error("cannot cluster zero-length vectors");
  std::vector<double> points;
  points.reserve(vectors.size() * dim);
  for (const auto& v : vectors) {
    if (v.size() != dim) throw Error("occurrence vectors differ in dimension");
    points.insert(points.end(), v.begin(), v.end());
  }

  ClusterSet set;
  const auto ap = affinity_propagation(points, dim, params);
  if (ap.exemplars.empty()) {
    set.fallback = true;
    set.labels.assign(vectors.size(), 0);
  } else {
    set.labels = ap.labels;
  }
  const std::size_t k = set.fallback ? 1 : ap.exemplars.size();
  set.centers.assign(k, std::vector<double>(dim, 0.0));
  set.sizes.assign(k, 0);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    auto& center = set.centers[set.labels[i]];
    for (std::size_t d = 0; d < dim; ++d) center[d] += points[i * dim + d];
    ++set.sizes[set.labels[i]];
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (auto& x : set.centers[c]) x /= static_cast<double>(set.sizes[c]);
  }
  return set;
}

ClusterSet cluster_occurrences(const OccurrenceVectors& occ, const AffinityPropagationParams& params) {
  std::vector<std::vector<float>> vectors;
  vectors.reserve(occ.entries.size());
  for (const auto& e : occ.entries) vectors.push_back(e.vector);
  return cluster_vectors(vectors, params);
}

double contextual_similarity(const ClusterSet& a, const ClusterSet& b) {
  if (a.centers.empty() || b.centers.empty()) throw Error("contextual similarity needs non-empty cluster sets");
  const auto is_zero = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
  };
  double total = 0.0;
  for (const auto& ca : a.centers) {
    for (const auto& cb : b.centers) {
      if (!is_zero(ca) && !is_zero(cb)) total += raw_cosine(std::span<const double>(ca), std::span<const double>(cb));
    }
  }
  const double mean = total / static_cast<double>(a.centers.size() * b.centers.size());
  return std::clamp(mean, 0.0, 1.0);
}

}  // namespace lexintel
