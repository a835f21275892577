#include "lexintel/language.hpp"

#include <algorithm>

#include "lexintel/error.hpp"

namespace lexintel {

LanguageId::LanguageId(std::string_view code) {
  if (!is_valid(code)) {
    throw Error("invalid language code '" + std::string(code) +
                "' (expected two lowercase ASCII letters)");
  }
  code_ = {code[0], code[1]};
}

bool LanguageId::is_valid(std::string_view code) noexcept {
  return code.size() == 2 && code[0] >= 'a' && code[0] <= 'z' && code[1] >= 'a' &&
         code[1] <= 'z';
}

std::vector<LanguageId> parse_language_list(std::string_view csv) {
  std::vector<LanguageId> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    auto item = csv.substr(start, end - start);
    while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) item.remove_prefix(1);
    while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) item.remove_suffix(1);
    if (!item.empty()) {
      LanguageId id(item);
      if (std::find(out.begin(), out.end(), id) != out.end()) {
        throw Error("duplicate language '" + id.str() + "' in list");
      }
      out.push_back(id);
    }
    start = end + 1;
  }
  return out;
}

std::string pair_label(LanguageId a, LanguageId b) {
  if (b < a) std::swap(a, b);
  return a.str() + "-" + b.str();
}

}  // namespace lexintel
