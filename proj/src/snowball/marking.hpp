#pragma once

#include "regions.hpp"

namespace lexintel::snowball {

// Uppercases 'u' and 'i' between vowels so they are treated as consonants.
// Shared by the Italian and Romanian algorithms.
inline void mark_glide_vowels(Env& z, std::u32string_view vowels) {
  auto step = [&]() -> bool {
    if (!z.in_grouping(vowels)) return false;
    z.bra = z.cursor;
    const int v = z.cursor;
    if (z.eq_c(U'u')) {
      z.ket = z.cursor;
      if (z.in_grouping(vowels)) {
        z.slice_from(U"U");
        return true;
      }
    }
    z.cursor = v;
    if (!z.eq_c(U'i')) return false;
    z.ket = z.cursor;
    if (!z.in_grouping(vowels)) return false;
    z.slice_from(U"I");
    return true;
  };

  while (true) {
    const int v1 = z.cursor;
    bool found = false;
    while (true) {
      const int v2 = z.cursor;
      if (step()) {
        z.cursor = v2;
        found = true;
        break;
      }
      z.cursor = v2;
      if (!z.next()) break;
    }
    if (!found) {
      z.cursor = v1;
      return;
    }
  }
}

}  // namespace lexintel::snowball
