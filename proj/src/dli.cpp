#include "lexintel/dli.hpp"

#include <algorithm>
#include <string>

#include "lexintel/error.hpp"
#include "lexintel/io.hpp"

namespace lexintel {

namespace {

double checked_unit(double x, const char* name) {
  if (!(x >= -kInputTolerance && x <= 1.0 + kInputTolerance)) {
    throw Error(std::string(name) + " outside [0, 1]: " + format_double(x));
  }
  return std::clamp(x, 0.0, 1.0);
}

}  // namespace

double dli(double s_s, double s_l) {
  s_s = checked_unit(s_s, "s_s");
  s_l = checked_unit(s_l, "s_l");
  const double product = s_s * s_l;
  if (product == 1.0) return 1.0;
  // Written as a sum of complements so the result is symmetric bit for bit and
  // dli(x, 1) reduces to x exactly.
  return product * ((1.0 - s_s) + (1.0 - s_l)) / (1.0 - product);
}

AlphaBeta alpha_beta(double s_s, double s_l) {
  s_s = checked_unit(s_s, "s_s");
  s_l = checked_unit(s_l, "s_l");
  const double denom = 1.0 - s_s * s_l;
  if (denom == 0.0) throw Error("degenerate: both similarities maximal");
  return {s_l * (1.0 - s_s) / denom, s_s * (1.0 - s_l) / denom};
}

bool check_bounds(double s_s, double s_l, double d, double eps) noexcept {
  return s_s * s_l - eps <= d && d <= std::min(s_s, s_l) + eps;
}

std::string_view to_string(SurfaceChannel c) noexcept {
  return c == SurfaceChannel::orthographic ? "orthographic" : "phonetic";
}

std::string_view to_string(SemanticChannel c) noexcept {
  return c == SemanticChannel::static_vectors ? "static" : "contextual";
}

SurfaceChannel parse_surface_channel(std::string_view text) {
  if (text == "orthographic") return SurfaceChannel::orthographic;
  if (text == "phonetic") return SurfaceChannel::phonetic;
  throw ConfigError("unknown surface channel '" + std::string(text) + "'");
}

SemanticChannel parse_semantic_channel(std::string_view text) {
  if (text == "static") return SemanticChannel::static_vectors;
  if (text == "contextual") return SemanticChannel::contextual;
  throw ConfigError("unknown semantic channel '" + std::string(text) + "'");
}

void PairSimilarity::compute_indices() {
  for (int i = 0; i < kChannelConfigs; ++i) {
    const auto config = ChannelConfig::from_index(i);
    const auto s_l = surface(config.surface);
    const auto s_s = semantic(config.semantic);
    auto& slot = d_li[static_cast<std::size_t>(i)];
    slot.reset();
    if (s_l && s_s) slot = dli(*s_s, *s_l);
  }
}

}  // namespace lexintel
