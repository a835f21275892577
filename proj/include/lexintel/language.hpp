#pragma once

#include <array>
#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace lexintel {

// Two-letter lowercase language code ("es", "fr", "it", "pt", "ro").
class LanguageId {
 public:
  LanguageId() = default;

  // Throws lexintel::Error unless `code` is exactly two lowercase ASCII letters.
  explicit LanguageId(std::string_view code);

  static bool is_valid(std::string_view code) noexcept;

  std::string_view code() const noexcept { return {code_.data(), 2}; }
  std::string str() const { return std::string(code()); }

  auto operator<=>(const LanguageId&) const = default;

 private:
  std::array<char, 2> code_{'?', '?'};
};

// Parses "es,ro,fr"; whitespace around codes is ignored. Duplicates are an error.
std::vector<LanguageId> parse_language_list(std::string_view csv);

// Canonical "a-b" label for an unordered pair, with a < b.
std::string pair_label(LanguageId a, LanguageId b);

}  // namespace lexintel

template <>
struct std::hash<lexintel::LanguageId> {
  std::size_t operator()(const lexintel::LanguageId& id) const noexcept {
    auto c = id.code();
    return (static_cast<std::size_t>(static_cast<unsigned char>(c[0])) << 8) |
           static_cast<unsigned char>(c[1]);
  }
};
