#include "lexintel/text.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "lexintel/error.hpp"

namespace lexintel {
namespace {

bool is_ascii(std::string_view s) noexcept {
  for (unsigned char c : s) {
    if (c >= 0x80) return false;
  }
  return true;
}

bool is_mark(char32_t c) noexcept { return (U_GET_GC_MASK(c) & U_GC_M_MASK) != 0; }
bool is_letter(char32_t c) noexcept { return (U_GET_GC_MASK(c) & U_GC_L_MASK) != 0; }

bool is_joiner(char32_t c) noexcept {
  return c == U'-' || c == U'\'' || c == U'’' || c == U'‐';
}

const icu::Normalizer2& nfd() {
  static const icu::Normalizer2* instance = [] {
    UErrorCode status = U_ZERO_ERROR;
    const auto* n = icu::Normalizer2::getNFDInstance(status);
    if (U_FAILURE(status)) throw Error("ICU NFD normalizer unavailable");
    return n;
  }();
  return *instance;
}

}  // namespace

std::u32string decode_utf8(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  const auto* s = reinterpret_cast<const uint8_t*>(utf8.data());
  const auto length = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) throw Error("invalid UTF-8 byte sequence");
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    uint8_t buf[4];
    int32_t n = 0;
    UBool error = false;
    U8_APPEND(buf, n, 4, static_cast<UChar32>(c), error);
    if (error) throw Error("code point not encodable as UTF-8");
    out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(n));
  }
  return out;
}

bool is_valid_utf8(std::string_view utf8) noexcept {
  const auto* s = reinterpret_cast<const uint8_t*>(utf8.data());
  const auto length = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) return false;
  }
  return true;
}

std::string fold_case(std::string_view utf8) {
  if (is_ascii(utf8)) {
    std::string out(utf8);
    for (auto& c : out) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
  }
  auto cps = decode_utf8(utf8);
  for (auto& c : cps) c = static_cast<char32_t>(u_foldCase(static_cast<UChar32>(c), U_FOLD_CASE_DEFAULT));
  return encode_utf8(cps);
}

std::string strip_accents(std::string_view utf8) {
  if (is_ascii(utf8)) return fold_case(utf8);

  auto folded = fold_case(utf8);
  UErrorCode status = U_ZERO_ERROR;
  auto decomposed = nfd().normalize(icu::UnicodeString::fromUTF8(folded), status);
  if (U_FAILURE(status)) throw Error("canonical decomposition failed");

  icu::UnicodeString kept;
  for (int32_t i = 0; i < decomposed.length();) {
    UChar32 c = decomposed.char32At(i);
    if (!is_mark(static_cast<char32_t>(c))) kept.append(c);
    i += U16_LENGTH(c);
  }
  std::string out;
  kept.toUTF8String(out);
  return out;
}

std::vector<TokenSpan> tokenize_spans(std::string_view utf8) {
  std::vector<TokenSpan> tokens;
  const auto cps = decode_utf8(utf8);
  const std::size_t n = cps.size();

  std::size_t i = 0;
  while (i < n) {
    if (!is_letter(cps[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    std::u32string text;
    while (i < n) {
      const char32_t c = cps[i];
      if (is_letter(c) || (is_mark(c) && !text.empty())) {
        text.push_back(static_cast<char32_t>(u_foldCase(static_cast<UChar32>(c), U_FOLD_CASE_DEFAULT)));
        ++i;
      } else if (is_joiner(c) && i + 1 < n && is_letter(cps[i + 1])) {
        text.push_back(c == U'’' ? U'\'' : (c == U'‐' ? U'-' : c));
        ++i;
      } else {
        break;
      }
    }
    tokens.push_back({encode_utf8(text), start});
  }
  return tokens;
}

std::vector<std::string> tokenize(std::string_view utf8) {
  auto spans = tokenize_spans(utf8);
  std::vector<std::string> out;
  out.reserve(spans.size());
  for (auto& s : spans) out.push_back(std::move(s.text));
  return out;
}

}  // namespace lexintel
