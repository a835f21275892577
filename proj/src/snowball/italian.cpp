#include "marking.hpp"
#include "tables.hpp"

namespace lexintel::snowball {
namespace {

using namespace italian;

struct Italian {
  Env& z;
  Regions r{};

  bool rv() const { return r.pv <= z.cursor; }
  bool r2() const { return r.p2 <= z.cursor; }

  bool elisions() {
    z.bra = z.cursor;
    if (z.find_among(k_a_0) == 0) return false;
    z.ket = z.cursor;
    if (z.cursor >= z.limit) return false;
    z.slice_del();
    return true;
  }

  void prelude() {
    const int start = z.cursor;
    while (true) {
      z.bra = z.cursor;
      const int a = z.find_among(k_a_1);
      z.ket = z.cursor;
      bool advanced = true;
      switch (a) {
        case 1: z.slice_from(U"à"); break;
        case 2: z.slice_from(U"è"); break;
        case 3: z.slice_from(U"ì"); break;
        case 4: z.slice_from(U"ò"); break;
        case 5: z.slice_from(U"ù"); break;
        case 6: z.slice_from(U"qU"); break;
        default: advanced = z.next();
      }
      if (!advanced) break;
    }
    z.cursor = start;
    mark_glide_vowels(z, k_g_v);
  }

  void postlude() {
    while (true) {
      z.bra = z.cursor;
      const int a = z.find_among(k_a_2);
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

  bool attached_pronoun() {
    z.ket = z.cursor;
    if (z.find_among_b(k_a_3) == 0) return false;
    z.bra = z.cursor;
    const int a = z.find_among_b(k_a_4);
    if (a == 0 || !rv()) return false;
    z.slice_from(k_as_4[a - 1]);
    return true;
  }

  bool delete_in_r2(std::u32string_view suffix) {
    z.ket = z.cursor;
    if (!z.eq_s_b(suffix)) return false;
    z.bra = z.cursor;
    if (!r2()) return false;
    z.slice_del();
    return true;
  }

  bool standard_suffix() {
    z.ket = z.cursor;
    const int a = z.find_among_b(k_a_7);
    if (a == 0) return false;
    z.bra = z.cursor;
    switch (a) {
      case 1:
        if (!r2()) return false;
        z.slice_del();
        break;
      case 2:
        if (!r2()) return false;
        z.slice_del();
        try_b(z, [&] { return delete_in_r2(U"ic"); });
        break;
      case 3:
        if (!r2()) return false;
        z.slice_from(U"log");
        break;
      case 4:
        if (!r2()) return false;
        z.slice_from(U"u");
        break;
      case 5:
        if (!r2()) return false;
        z.slice_from(U"ente");
        break;
      case 6:
        if (!rv()) return false;
        z.slice_del();
        break;
      case 7:
        if (r.p1 > z.cursor) return false;
        z.slice_del();
        try_b(z, [&] {
          z.ket = z.cursor;
          const int b = z.find_among_b(k_a_5);
          if (b == 0) return false;
          z.bra = z.cursor;
          if (!r2()) return false;
          z.slice_del();
          if (b == 1) return delete_in_r2(U"at");
          return true;
        });
        break;
      case 8:
        if (!r2()) return false;
        z.slice_del();
        try_b(z, [&] {
          z.ket = z.cursor;
          if (z.find_among_b(k_a_6) == 0) return false;
          z.bra = z.cursor;
          if (!r2()) return false;
          z.slice_del();
          return true;
        });
        break;
      default:
        if (!r2()) return false;
        z.slice_del();
        try_b(z, [&] { return delete_in_r2(U"at") && delete_in_r2(U"ic"); });
    }
    return true;
  }

  bool verb_suffix() {
    if (z.cursor < r.pv) return false;
    const int saved_lb = z.limit_backward;
    z.limit_backward = r.pv;
    z.ket = z.cursor;
    const bool found = z.find_among_b(k_a_8) != 0;
    if (found) {
      z.bra = z.cursor;
      z.slice_del();
    }
    z.limit_backward = saved_lb;
    return found;
  }

  void vowel_suffix() {
    try_b(z, [&] {
      z.ket = z.cursor;
      if (!z.in_grouping_b(k_g_AEIO)) return false;
      z.bra = z.cursor;
      if (!rv()) return false;
      z.slice_del();
      z.ket = z.cursor;
      if (!z.eq_c_b(U'i')) return false;
      z.bra = z.cursor;
      if (!rv()) return false;
      z.slice_del();
      return true;
    });
    try_b(z, [&] {
      z.ket = z.cursor;
      if (!z.eq_c_b(U'h')) return false;
      z.bra = z.cursor;
      if (!z.in_grouping_b(k_g_CG) || !rv()) return false;
      z.slice_del();
      return true;
    });
  }

  void run() {
    do_f(z, [&] { elisions(); });
    do_f(z, [&] { prelude(); });
    r = mark_standard_regions(z, k_g_v, /*divan_exception=*/true);
    z.limit_backward = z.cursor;
    z.cursor = z.limit;

    do_b(z, [&] { attached_pronoun(); });
    do_b(z, [&] {
      if (!try_b(z, [&] { return standard_suffix(); })) verb_suffix();
    });
    do_b(z, [&] { vowel_suffix(); });

    z.cursor = z.limit_backward;
    do_f(z, [&] { postlude(); });
  }
};

}  // namespace

void stem_italian(Env& z) { Italian{z}.run(); }

}  // namespace lexintel::snowball
