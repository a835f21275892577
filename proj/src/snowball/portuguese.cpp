#include "regions.hpp"
#include "tables.hpp"

namespace lexintel::snowball {
namespace {

using namespace portuguese;

struct Portuguese {
  Env& z;
  Regions r{};

  bool rv() const { return r.pv <= z.cursor; }
  bool r2() const { return r.p2 <= z.cursor; }

  // Nasal vowels are rewritten as two characters ("a~", "o~") while stemming.
  void prelude() {
    while (true) {
      z.bra = z.cursor;
      const int a = z.find_among(k_a_0);
      z.ket = z.cursor;
      if (a == 1) {
        z.slice_from(U"a~");
      } else if (a == 2) {
        z.slice_from(U"o~");
      } else if (!z.next()) {
        return;
      }
    }
  }

  void postlude() {
    while (true) {
      z.bra = z.cursor;
      const int a = z.find_among(k_a_1);
      z.ket = z.cursor;
      if (a == 1) {
        z.slice_from(U"ã");
      } else if (a == 2) {
        z.slice_from(U"õ");
      } else if (!z.next()) {
        return;
      }
    }
  }

  bool delete_in_r2(std::u32string_view suffix) {
    z.ket = z.cursor;
    if (!z.eq_s_b(suffix)) return false;
    z.bra = z.cursor;
    if (!r2()) return false;
    z.slice_del();
    return true;
  }

  bool delete_among_in_r2(const auto& table) {
    z.ket = z.cursor;
    if (z.find_among_b(table) == 0) return false;
    z.bra = z.cursor;
    if (!r2()) return false;
    z.slice_del();
    return true;
  }

  bool standard_suffix() {
    z.ket = z.cursor;
    const int a = z.find_among_b(k_a_5);
    if (a == 0) return false;
    z.bra = z.cursor;
    switch (a) {
      case 1:
        if (!r2()) return false;
        z.slice_del();
        break;
      case 2:
        if (!r2()) return false;
        z.slice_from(U"log");
        break;
      case 3:
        if (!r2()) return false;
        z.slice_from(U"u");
        break;
      case 4:
        if (!r2()) return false;
        z.slice_from(U"ente");
        break;
      case 5:
        if (r.p1 > z.cursor) return false;
        z.slice_del();
        try_b(z, [&] {
          z.ket = z.cursor;
          const int b = z.find_among_b(k_a_2);
          if (b == 0) return false;
          z.bra = z.cursor;
          if (!r2()) return false;
          z.slice_del();
          if (b == 1) return delete_in_r2(U"at");
          return true;
        });
        break;
      case 6:
        if (!r2()) return false;
        z.slice_del();
        try_b(z, [&] { return delete_among_in_r2(k_a_3); });
        break;
      case 7:
        if (!r2()) return false;
        z.slice_del();
        try_b(z, [&] { return delete_among_in_r2(k_a_4); });
        break;
      case 8:
        if (!r2()) return false;
        z.slice_del();
        try_b(z, [&] { return delete_in_r2(U"at"); });
        break;
      default:
        if (!rv() || !z.eq_c_b(U'e')) return false;
        z.slice_from(U"ir");
    }
    return true;
  }

  bool verb_suffix() {
    if (z.cursor < r.pv) return false;
    const int saved_lb = z.limit_backward;
    z.limit_backward = r.pv;
    z.ket = z.cursor;
    const bool found = z.find_among_b(k_a_6) != 0;
    if (found) {
      z.bra = z.cursor;
      z.slice_del();
    }
    z.limit_backward = saved_lb;
    return found;
  }

  bool residual_suffix() {
    z.ket = z.cursor;
    if (z.find_among_b(k_a_7) == 0) return false;
    z.bra = z.cursor;
    if (!rv()) return false;
    z.slice_del();
    return true;
  }

  // Matches "gu" or "ci" ending at the cursor, leaving bra before the vowel.
  bool gu_or_ci() {
    if (try_b(z, [&] {
          if (!z.eq_c_b(U'u')) return false;
          z.bra = z.cursor;
          const int v = z.limit - z.cursor;
          if (!z.eq_c_b(U'g')) return false;
          z.cursor = z.limit - v;
          return true;
        })) {
      return true;
    }
    if (!z.eq_c_b(U'i')) return false;
    z.bra = z.cursor;
    const int v = z.limit - z.cursor;
    if (!z.eq_c_b(U'c')) return false;
    z.cursor = z.limit - v;
    return true;
  }

  bool residual_form() {
    z.ket = z.cursor;
    const int a = z.find_among_b(k_a_8);
    if (a == 0) return false;
    z.bra = z.cursor;
    if (a == 1) {
      if (!rv()) return false;
      z.slice_del();
      z.ket = z.cursor;
      if (!gu_or_ci() || !rv()) return false;
      z.slice_del();
    } else {
      z.slice_from(U"c");
    }
    return true;
  }

  void run() {
    do_f(z, [&] { prelude(); });
    r = mark_standard_regions(z, k_g_v);
    z.limit_backward = z.cursor;
    z.cursor = z.limit;

    do_b(z, [&] {
      const bool main_step = try_b(z, [&] {
        const int v = z.limit - z.cursor;
        if (!try_b(z, [&] { return standard_suffix(); }) && !verb_suffix()) return false;
        z.cursor = z.limit - v;
        do_b(z, [&] {
          z.ket = z.cursor;
          if (!z.eq_c_b(U'i')) return;
          z.bra = z.cursor;
          const int after_i = z.limit - z.cursor;
          if (!z.eq_c_b(U'c')) return;
          z.cursor = z.limit - after_i;
          if (!rv()) return;
          z.slice_del();
        });
        return true;
      });
      if (!main_step) residual_suffix();
    });
    do_b(z, [&] { residual_form(); });

    z.cursor = z.limit_backward;
    do_f(z, [&] { postlude(); });
  }
};

}  // namespace

void stem_portuguese(Env& z) { Portuguese{z}.run(); }

}  // namespace lexintel::snowball
