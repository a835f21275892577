#include "regions.hpp"
#include "tables.hpp"

namespace lexintel::snowball {
namespace {

using namespace spanish;

struct Spanish {
  Env& z;
  Regions r{};

  bool rv() const { return r.pv <= z.cursor; }
  bool r2() const { return r.p2 <= z.cursor; }

  void postlude() {
    while (true) {
      z.bra = z.cursor;
      const int a = z.find_among(k_a_0);
      z.ket = z.cursor;
      switch (a) {
        case 1: z.slice_from(U"a"); break;
        case 2: z.slice_from(U"e"); break;
        case 3: z.slice_from(U"i"); break;
        case 4: z.slice_from(U"o"); break;
        case 5: z.slice_from(U"u"); break;
        default:
          if (!z.next()) return;
      }
    }
  }

  bool attached_pronoun() {
    z.ket = z.cursor;
    if (z.find_among_b(k_a_1) == 0) return false;
    z.bra = z.cursor;
    const int a = z.find_among_b(k_a_2);
    if (a == 0 || !rv()) return false;
    switch (a) {
      case 1: z.bra = z.cursor; z.slice_from(U"iendo"); break;
      case 2: z.bra = z.cursor; z.slice_from(U"ando"); break;
      case 3: z.bra = z.cursor; z.slice_from(U"ar"); break;
      case 4: z.bra = z.cursor; z.slice_from(U"er"); break;
      case 5: z.bra = z.cursor; z.slice_from(U"ir"); break;
      case 6: z.slice_del(); break;
      default:
        if (!z.eq_c_b(U'u')) return false;
        z.slice_del();
    }
    return true;
  }

  // Deletes `suffix` (found at the cursor) when it lies in R2.
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
    int a = z.find_among_b(k_a_6);
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
        if (r.p1 > z.cursor) return false;
        z.slice_del();
        try_b(z, [&] {
          z.ket = z.cursor;
          const int b = z.find_among_b(k_a_3);
          if (b == 0) return false;
          z.bra = z.cursor;
          if (!r2()) return false;
          z.slice_del();
          if (b == 1) return delete_in_r2(U"at");
          return true;
        });
        break;
      case 7:
        if (!r2()) return false;
        z.slice_del();
        try_b(z, [&] {
          z.ket = z.cursor;
          if (z.find_among_b(k_a_4) == 0) return false;
          z.bra = z.cursor;
          if (!r2()) return false;
          z.slice_del();
          return true;
        });
        break;
      case 8:
        if (!r2()) return false;
        z.slice_del();
        try_b(z, [&] {
          z.ket = z.cursor;
          if (z.find_among_b(k_a_5) == 0) return false;
          z.bra = z.cursor;
          if (!r2()) return false;
          z.slice_del();
          return true;
        });
        break;
      default:
        if (!r2()) return false;
        z.slice_del();
        try_b(z, [&] { return delete_in_r2(U"at"); });
    }
    return true;
  }

  bool y_verb_suffix() {
    if (z.cursor < r.pv) return false;
    const int saved_lb = z.limit_backward;
    z.limit_backward = r.pv;
    z.ket = z.cursor;
    if (z.find_among_b(k_a_7) == 0) {
      z.limit_backward = saved_lb;
      return false;
    }
    z.bra = z.cursor;
    z.limit_backward = saved_lb;
    if (!z.eq_c_b(U'u')) return false;
    z.slice_del();
    return true;
  }

  bool verb_suffix() {
    if (z.cursor < r.pv) return false;
    const int saved_lb = z.limit_backward;
    z.limit_backward = r.pv;
    z.ket = z.cursor;
    const int a = z.find_among_b(k_a_8);
    if (a == 0) {
      z.limit_backward = saved_lb;
      return false;
    }
    z.bra = z.cursor;
    z.limit_backward = saved_lb;
    if (a == 1) {
      try_b(z, [&] {
        if (!z.eq_c_b(U'u')) return false;
        const int after_u = z.limit - z.cursor;
        if (!z.eq_c_b(U'g')) return false;
        z.cursor = z.limit - after_u;
        return true;
      });
      z.bra = z.cursor;
    }
    z.slice_del();
    return true;
  }

  bool residual_suffix() {
    z.ket = z.cursor;
    const int a = z.find_among_b(k_a_9);
    if (a == 0) return false;
    z.bra = z.cursor;
    if (!rv()) return false;
    z.slice_del();
    if (a != 1) {
      try_b(z, [&] {
        z.ket = z.cursor;
        if (!z.eq_c_b(U'u')) return false;
        z.bra = z.cursor;
        const int after_u = z.limit - z.cursor;
        if (!z.eq_c_b(U'g')) return false;
        z.cursor = z.limit - after_u;
        if (!rv()) return false;
        z.slice_del();
        return true;
      });
    }
    return true;
  }

  void run() {
    r = mark_standard_regions(z, k_g_v);
    z.limit_backward = z.cursor;
    z.cursor = z.limit;

    do_b(z, [&] { attached_pronoun(); });
    do_b(z, [&] {
      if (try_b(z, [&] { return standard_suffix(); })) return;
      if (try_b(z, [&] { return y_verb_suffix(); })) return;
      verb_suffix();
    });
    do_b(z, [&] { residual_suffix(); });

    z.cursor = z.limit_backward;
    postlude();
  }
};

}  // namespace

void stem_spanish(Env& z) { Spanish{z}.run(); }

}  // namespace lexintel::snowball
