#pragma once

#include <string>
#include <string_view>

#include "lexintel/language.hpp"

namespace lexintel {

// Snowball stemmer for es, fr, it, pt and ro. Input is expected to be
// lowercase; the pipeline feeds accent-stripped forms.
class Stemmer {
 public:
  explicit Stemmer(LanguageId lang);

  static bool supports(LanguageId lang) noexcept;

  LanguageId language() const noexcept { return lang_; }
  std::string stem(std::string_view word) const;
  std::u32string stem(std::u32string word) const;

 private:
  LanguageId lang_;
};

}  // namespace lexintel
