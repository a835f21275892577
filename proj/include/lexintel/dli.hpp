#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "lexintel/lexicon.hpp"

namespace lexintel {

// Inputs this close outside [0, 1] are treated as rounding noise and clamped.
inline constexpr double kInputTolerance = 1e-9;
inline constexpr double kBoundsEpsilon = 1e-12;

// Lexical intelligibility index of a word pair with semantic similarity s_s and
// surface similarity s_l:
//   s_s * s_l * (2 - s_s - s_l) / (1 - s_s * s_l),  and 1 when s_s = s_l = 1.
// Throws Error for inputs outside [0, 1].
double dli(double s_s, double s_l);

struct AlphaBeta {
  double alpha;
  double beta;
};

// Weights with alpha * s_s + beta * s_l == dli(s_s, s_l). Throws Error when
// s_s * s_l == 1.
AlphaBeta alpha_beta(double s_s, double s_l);

// s_s * s_l - eps <= d <= min(s_s, s_l) + eps.
bool check_bounds(double s_s, double s_l, double d, double eps = kBoundsEpsilon) noexcept;

enum class SurfaceChannel { orthographic, phonetic };
enum class SemanticChannel { static_vectors, contextual };

std::string_view to_string(SurfaceChannel c) noexcept;
std::string_view to_string(SemanticChannel c) noexcept;
SurfaceChannel parse_surface_channel(std::string_view text);
SemanticChannel parse_semantic_channel(std::string_view text);

struct ChannelConfig {
  SurfaceChannel surface = SurfaceChannel::orthographic;
  SemanticChannel semantic = SemanticChannel::static_vectors;

  // 0..3, orthographic/static first.
  int index() const noexcept { return static_cast<int>(surface) * 2 + static_cast<int>(semantic); }
  static ChannelConfig from_index(int i) noexcept {
    return {static_cast<SurfaceChannel>(i / 2), static_cast<SemanticChannel>(i % 2)};
  }
  bool operator==(const ChannelConfig&) const = default;
};

inline constexpr int kChannelConfigs = 4;

// Per related pair: the four channel scores (absent when a resource lacks the
// pair) and the index for every configuration whose two channels are present.
struct PairSimilarity {
  PairId pair_id = 0;
  std::optional<double> s_l_orthographic;
  std::optional<double> s_l_phonetic;
  std::optional<double> s_s_static;
  std::optional<double> s_s_contextual;
  std::array<std::optional<double>, kChannelConfigs> d_li{};

  std::optional<double> surface(SurfaceChannel c) const {
    return c == SurfaceChannel::orthographic ? s_l_orthographic : s_l_phonetic;
  }
  std::optional<double> semantic(SemanticChannel c) const {
    return c == SemanticChannel::static_vectors ? s_s_static : s_s_contextual;
  }
  const std::optional<double>& index(ChannelConfig c) const { return d_li[static_cast<std::size_t>(c.index())]; }

  // Fills d_li from the channel scores.
  void compute_indices();
};

}  // namespace lexintel
