#pragma once

#include <string>
#include <string_view>

namespace lexintel::snowball {

struct Among {
  std::u32string_view s;
  int result;
};

// Cursor machine over a code-point buffer, mirroring the Snowball runtime.
// Forward operations move `cursor` toward `limit`; the *_b variants move it
// toward `limit_backward`. `bra`/`ket` delimit the slice edited by slice_from.
class Env {
 public:
  explicit Env(std::u32string word)
      : current(std::move(word)), limit(static_cast<int>(current.size())), ket(limit) {}

  std::u32string current;
  int cursor = 0;
  int limit;
  int limit_backward = 0;
  int bra = 0;
  int ket;

  static bool contains(std::u32string_view group, char32_t c) noexcept {
    return group.find(c) != std::u32string_view::npos;
  }

  bool in_grouping(std::u32string_view g) {
    if (cursor >= limit || !contains(g, current[cursor])) return false;
    ++cursor;
    return true;
  }
  bool in_grouping_b(std::u32string_view g) {
    if (cursor <= limit_backward || !contains(g, current[cursor - 1])) return false;
    --cursor;
    return true;
  }
  bool out_grouping(std::u32string_view g) {
    if (cursor >= limit || contains(g, current[cursor])) return false;
    ++cursor;
    return true;
  }
  bool out_grouping_b(std::u32string_view g) {
    if (cursor <= limit_backward || contains(g, current[cursor - 1])) return false;
    --cursor;
    return true;
  }
  // Skip characters in `g`; true if a character outside `g` was reached.
  bool go_in_grouping(std::u32string_view g) {
    while (cursor < limit) {
      if (!contains(g, current[cursor])) return true;
      ++cursor;
    }
    return false;
  }
  bool go_out_grouping(std::u32string_view g) {
    while (cursor < limit) {
      if (contains(g, current[cursor])) return true;
      ++cursor;
    }
    return false;
  }

  bool eq_c(char32_t c) {
    if (cursor >= limit || current[cursor] != c) return false;
    ++cursor;
    return true;
  }
  bool eq_c_b(char32_t c) {
    if (cursor <= limit_backward || current[cursor - 1] != c) return false;
    --cursor;
    return true;
  }
  bool eq_s(std::u32string_view s) {
    const int n = static_cast<int>(s.size());
    if (limit - cursor < n || std::u32string_view(current).substr(cursor, n) != s) return false;
    cursor += n;
    return true;
  }
  bool eq_s_b(std::u32string_view s) {
    const int n = static_cast<int>(s.size());
    if (cursor - limit_backward < n || std::u32string_view(current).substr(cursor - n, n) != s) {
      return false;
    }
    cursor -= n;
    return true;
  }
  bool next() {
    if (cursor >= limit) return false;
    ++cursor;
    return true;
  }
  bool prev() {
    if (cursor <= limit_backward) return false;
    --cursor;
    return true;
  }

  // Longest entry matching at the cursor (forward); 0 when none matches.
  template <std::size_t N>
  int find_among(const Among (&table)[N]) {
    int best = -1;
    std::size_t best_len = 0;
    const std::u32string_view view(current);
    for (std::size_t i = 0; i < N; ++i) {
      const auto& s = table[i].s;
      if (static_cast<int>(s.size()) > limit - cursor) continue;
      if (best >= 0 && s.size() <= best_len) continue;
      if (view.substr(cursor, s.size()) == s) {
        best = static_cast<int>(i);
        best_len = s.size();
      }
    }
    if (best < 0) return 0;
    cursor += static_cast<int>(best_len);
    return table[best].result;
  }

  // Longest entry ending at the cursor (backward); 0 when none matches.
  template <std::size_t N>
  int find_among_b(const Among (&table)[N]) {
    int best = -1;
    std::size_t best_len = 0;
    const std::u32string_view view(current);
    for (std::size_t i = 0; i < N; ++i) {
      const auto& s = table[i].s;
      if (static_cast<int>(s.size()) > cursor - limit_backward) continue;
      if (best >= 0 && s.size() <= best_len) continue;
      if (view.substr(cursor - s.size(), s.size()) == s) {
        best = static_cast<int>(i);
        best_len = s.size();
      }
    }
    if (best < 0) return 0;
    cursor -= static_cast<int>(best_len);
    return table[best].result;
  }

  void slice_from(std::u32string_view s) {
    const int adjustment = static_cast<int>(s.size()) - (ket - bra);
    current.replace(static_cast<std::size_t>(bra), static_cast<std::size_t>(ket - bra), s);
    limit += adjustment;
    if (cursor >= ket) {
      cursor += adjustment;
    } else if (cursor > bra) {
      cursor = bra;
    }
    ket = bra + static_cast<int>(s.size());
  }
  void slice_del() { slice_from(U""); }
};

// Per-language entry points; each stems `z.current` in place.
void stem_spanish(Env& z);
void stem_french(Env& z);
void stem_italian(Env& z);
void stem_portuguese(Env& z);
void stem_romanian(Env& z);

}  // namespace lexintel::snowball
