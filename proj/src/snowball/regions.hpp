#pragma once

#include "runtime.hpp"

namespace lexintel::snowball {

// Restores the cursor (measured from the end) when `step` fails.
template <class F>
bool try_b(Env& z, F&& step) {
  const int saved = z.limit - z.cursor;
  if (step()) return true;
  z.cursor = z.limit - saved;
  return false;
}

template <class F>
bool try_f(Env& z, F&& step) {
  const int saved = z.cursor;
  if (step()) return true;
  z.cursor = saved;
  return false;
}

// Runs `step` and always restores the cursor (measured from the end).
template <class F>
void do_b(Env& z, F&& step) {
  const int saved = z.limit - z.cursor;
  step();
  z.cursor = z.limit - saved;
}

template <class F>
void do_f(Env& z, F&& step) {
  const int saved = z.cursor;
  step();
  z.cursor = saved;
}

struct Regions {
  int pv;
  int p1;
  int p2;
};

// RV/R1/R2 as used by the Spanish, Portuguese, Italian and Romanian
// algorithms. `divan_exception` enables the Italian special case.
inline Regions mark_standard_regions(Env& z, std::u32string_view vowels,
                                     bool divan_exception = false) {
  Regions r{z.limit, z.limit, z.limit};
  const int start = z.cursor;

  auto rv = [&]() -> bool {
    const int v2 = z.cursor;
    if (z.in_grouping(vowels)) {
      const int v3 = z.cursor;
      if (z.out_grouping(vowels) && z.go_out_grouping(vowels)) {
        ++z.cursor;
        return true;
      }
      z.cursor = v3;
      if (z.in_grouping(vowels) && z.go_in_grouping(vowels)) {
        ++z.cursor;
        return true;
      }
    }
    z.cursor = v2;
    if (divan_exception && z.eq_s(U"divan")) return true;
    z.cursor = v2;
    if (!z.out_grouping(vowels)) return false;
    const int v4 = z.cursor;
    if (z.out_grouping(vowels) && z.go_out_grouping(vowels)) {
      ++z.cursor;
      return true;
    }
    z.cursor = v4;
    return z.in_grouping(vowels) && z.next();
  };
  if (rv()) r.pv = z.cursor;
  z.cursor = start;

  [&] {
    if (!z.go_out_grouping(vowels)) return;
    ++z.cursor;
    if (!z.go_in_grouping(vowels)) return;
    ++z.cursor;
    r.p1 = z.cursor;
    if (!z.go_out_grouping(vowels)) return;
    ++z.cursor;
    if (!z.go_in_grouping(vowels)) return;
    ++z.cursor;
    r.p2 = z.cursor;
  }();
  z.cursor = start;
  return r;
}

}  // namespace lexintel::snowball
