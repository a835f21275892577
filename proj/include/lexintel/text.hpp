#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lexintel {

// UTF-8 <-> code points. decode_utf8 throws lexintel::Error on malformed input.
std::u32string decode_utf8(std::string_view utf8);
std::string encode_utf8(std::u32string_view text);
bool is_valid_utf8(std::string_view utf8) noexcept;

// Simple (one-to-one) Unicode case folding.
std::string fold_case(std::string_view utf8);

// Lowercases, applies canonical decomposition and drops every combining mark.
// "azúcar" -> "azucar", "pregăti" -> "pregati". Idempotent.
std::string strip_accents(std::string_view utf8);

struct TokenSpan {
  std::string text;     // lowercased, accents kept, U+2019 mapped to '\''
  std::size_t offset;   // code-point offset of the first character in the line
};

// A token is a maximal run of letters (with their combining marks), optionally
// joined by a single internal hyphen or apostrophe. Everything else separates.
std::vector<TokenSpan> tokenize_spans(std::string_view utf8);
std::vector<std::string> tokenize(std::string_view utf8);

}  // namespace lexintel
