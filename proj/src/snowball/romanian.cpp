#include "marking.hpp"
#include "tables.hpp"

namespace lexintel::snowball {
namespace {

using namespace romanian;

struct Romanian {
  Env& z;
  Regions r{};
  bool standard_suffix_removed = false;

  bool r1() const { return r.p1 <= z.cursor; }

  // Cedilla forms (ş, ţ) are rewritten to the comma-below letters.
  void normalize_cedillas() {
    const int start = z.cursor;
    while (true) {
      bool replaced = false;
      while (true) {
        const int v = z.cursor;
        z.bra = z.cursor;
        const int a = z.find_among(k_a_0);
        if (a != 0) {
          z.ket = z.cursor;
          z.slice_from(k_as_0[a - 1]);
          z.cursor = v;
          replaced = true;
          break;
        }
        z.cursor = v;
        if (!z.next()) break;
      }
      if (!replaced) break;
    }
    z.cursor = start;
  }

  void postlude() {
    while (true) {
      z.bra = z.cursor;
      const int a = z.find_among(k_a_1);
      z.ket = z.cursor;
      if (a == 1) {
        z.slice_from(U"i");
      } else if (a == 2) {
        z.slice_from(U"u");
      } else if (!z.next()) {
        return;
      }
    }
  }

  bool step_0() {
    z.ket = z.cursor;
    const int a = z.find_among_b(k_a_2);
    if (a == 0) return false;
    z.bra = z.cursor;
    if (!r1()) return false;
    switch (a) {
      case 1: z.slice_del(); break;
      case 2: z.slice_from(U"a"); break;
      case 3: z.slice_from(U"e"); break;
      case 4: z.slice_from(U"i"); break;
      case 5:
        if (z.eq_s_b(U"ab")) return false;
        z.slice_from(U"i");
        break;
      case 6: z.slice_from(U"at"); break;
      default: z.slice_from(U"ați");
    }
    return true;
  }

  bool combo_suffix() {
    const int v = z.limit - z.cursor;
    z.ket = z.cursor;
    const int a = z.find_among_b(k_a_3);
    if (a == 0) return false;
    z.bra = z.cursor;
    if (!r1()) return false;
    z.slice_from(k_as_3[a - 1]);
    standard_suffix_removed = true;
    z.cursor = z.limit - v;
    return true;
  }

  bool standard_suffix() {
    standard_suffix_removed = false;
    while (try_b(z, [&] { return combo_suffix(); })) {
    }
    z.ket = z.cursor;
    const int a = z.find_among_b(k_a_4);
    if (a == 0) return false;
    z.bra = z.cursor;
    if (r.p2 > z.cursor) return false;
    if (a == 1) {
      z.slice_del();
    } else if (a == 2) {
      if (!z.eq_c_b(U'ț')) return false;
      z.bra = z.cursor;
      z.slice_from(U"t");
    } else {
      z.slice_from(U"ist");
    }
    standard_suffix_removed = true;
    return true;
  }

  bool verb_suffix() {
    if (z.cursor < r.pv) return false;
    const int saved_lb = z.limit_backward;
    z.limit_backward = r.pv;
    z.ket = z.cursor;
    const int a = z.find_among_b(k_a_5);
    bool ok = a != 0;
    if (ok) {
      z.bra = z.cursor;
      if (a == 1) ok = z.out_grouping_b(k_g_v) || z.eq_c_b(U'u');
      if (ok) z.slice_del();
    }
    z.limit_backward = saved_lb;
    return ok;
  }

  bool vowel_suffix() {
    z.ket = z.cursor;
    if (z.find_among_b(k_a_6) == 0) return false;
    z.bra = z.cursor;
    if (r.pv > z.cursor) return false;
    z.slice_del();
    return true;
  }

  void run() {
    normalize_cedillas();
    do_f(z, [&] { mark_glide_vowels(z, k_g_v); });
    r = mark_standard_regions(z, k_g_v);
    z.limit_backward = z.cursor;
    z.cursor = z.limit;

    do_b(z, [&] { step_0(); });
    do_b(z, [&] { standard_suffix(); });
    do_b(z, [&] {
      if (!standard_suffix_removed) verb_suffix();
    });
    do_b(z, [&] { vowel_suffix(); });

    z.cursor = z.limit_backward;
    do_f(z, [&] { postlude(); });
  }
};

}  // namespace

void stem_romanian(Env& z) { Romanian{z}.run(); }

}  // namespace lexintel::snowball
