#include "lexintel/stemmer.hpp"

#include "lexintel/error.hpp"
#include "lexintel/text.hpp"
#include "snowball/runtime.hpp"

namespace lexintel {
namespace {

using Algorithm = void (*)(snowball::Env&);

Algorithm algorithm_for(LanguageId lang) noexcept {
  const auto code = lang.code();
  if (code == "es") return snowball::stem_spanish;
  if (code == "fr") return snowball::stem_french;
  if (code == "it") return snowball::stem_italian;
  if (code == "pt") return snowball::stem_portuguese;
  if (code == "ro") return snowball::stem_romanian;
  return nullptr;
}

}  // namespace

Stemmer::Stemmer(LanguageId lang) : lang_(lang) {
  if (algorithm_for(lang) == nullptr) {
    throw Error("no stemmer available for language '" + lang.str() + "'");
  }
}

bool Stemmer::supports(LanguageId lang) noexcept { return algorithm_for(lang) != nullptr; }

std::u32string Stemmer::stem(std::u32string word) const {
  snowball::Env z(std::move(word));
  algorithm_for(lang_)(z);
  z.current.resize(static_cast<std::size_t>(z.limit));
  return std::move(z.current);
}

std::string Stemmer::stem(std::string_view word) const {
  return encode_utf8(stem(decode_utf8(word)));
}

}  // namespace lexintel
