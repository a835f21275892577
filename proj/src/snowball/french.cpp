#include "regions.hpp"
#include "tables.hpp"

namespace lexintel::snowball {
namespace {

using namespace french;

struct French {
  Env& z;
  Regions r{};

  bool rv() const { return r.pv <= z.cursor; }
  bool r1() const { return r.p1 <= z.cursor; }
  bool r2() const { return r.p2 <= z.cursor; }

  bool elisions() {
    z.bra = z.cursor;
    if (!z.in_grouping(k_g_elision_char) && !z.eq_s(U"qu")) return false;
    if (!z.eq_c(U'\'')) return false;
    z.ket = z.cursor;
    if (z.cursor >= z.limit) return false;
    z.slice_del();
    return true;
  }

  // Marks vowels that act as consonants with uppercase placeholders.
  bool prelude_step() {
    const int start = z.cursor;
    if (z.in_grouping(k_g_v)) {
      z.bra = z.cursor;
      const int v = z.cursor;
      if (z.eq_c(U'u')) {
        z.ket = z.cursor;
        if (z.in_grouping(k_g_v)) {
          z.slice_from(U"U");
          return true;
        }
      }
      z.cursor = v;
      if (z.eq_c(U'i')) {
        z.ket = z.cursor;
        if (z.in_grouping(k_g_v)) {
          z.slice_from(U"I");
          return true;
        }
      }
      z.cursor = v;
      if (z.eq_c(U'y')) {
        z.ket = z.cursor;
        z.slice_from(U"Y");
        return true;
      }
    }
    z.cursor = start;
    z.bra = z.cursor;
    if (z.eq_c(U'ë')) {
      z.ket = z.cursor;
      z.slice_from(U"He");
      return true;
    }
    z.cursor = start;
    z.bra = z.cursor;
    if (z.eq_c(U'ï')) {
      z.ket = z.cursor;
      z.slice_from(U"Hi");
      return true;
    }
    z.cursor = start;
    z.bra = z.cursor;
    if (z.eq_c(U'y')) {
      z.ket = z.cursor;
      if (z.in_grouping(k_g_v)) {
        z.slice_from(U"Y");
        return true;
      }
    }
    z.cursor = start;
    if (z.eq_c(U'q')) {
      z.bra = z.cursor;
      if (z.eq_c(U'u')) {
        z.ket = z.cursor;
        z.slice_from(U"U");
        return true;
      }
    }
    return false;
  }

  void prelude() {
    while (true) {
      const int v1 = z.cursor;
      bool found = false;
      while (true) {
        const int v2 = z.cursor;
        if (prelude_step()) {
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

  void mark_regions() {
    r = {z.limit, z.limit, z.limit};
    const int start = z.cursor;
    auto rv_start = [&]() -> bool {
      const int v = z.cursor;
      if (z.in_grouping(k_g_v) && z.in_grouping(k_g_v) && z.next()) return true;
      z.cursor = v;
      const int a = z.find_among(k_a_0);
      if (a != 0 && (a != 1 || z.in_grouping(k_g_v))) return true;
      z.cursor = v;
      if (!z.next() || !z.go_out_grouping(k_g_v)) return false;
      ++z.cursor;
      return true;
    };
    if (rv_start()) r.pv = z.cursor;
    z.cursor = start;
    [&] {
      if (!z.go_out_grouping(k_g_v)) return;
      ++z.cursor;
      if (!z.go_in_grouping(k_g_v)) return;
      ++z.cursor;
      r.p1 = z.cursor;
      if (!z.go_out_grouping(k_g_v)) return;
      ++z.cursor;
      if (!z.go_in_grouping(k_g_v)) return;
      ++z.cursor;
      r.p2 = z.cursor;
    }();
    z.cursor = start;
  }

  void postlude() {
    while (true) {
      z.bra = z.cursor;
      const int a = z.find_among(k_a_1);
      z.ket = z.cursor;
      switch (a) {
        case 1: z.slice_from(U"i"); break;
        case 2: z.slice_from(U"u"); break;
        case 3: z.slice_from(U"y"); break;
        case 4: z.slice_from(U"ë"); break;
        case 5: z.slice_from(U"ï"); break;
        case 6: z.slice_del(); break;
        default:
          if (!z.next()) return;
      }
    }
  }

  // Deletes in R2, otherwise replaces with `fallback`.
  void delete_in_r2_or(std::u32string_view fallback) {
    if (r2()) {
      z.slice_del();
    } else {
      z.slice_from(fallback);
    }
  }

  bool standard_suffix() {
    z.ket = z.cursor;
    int a = z.find_among_b(k_a_4);
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
        try_b(z, [&] {
          z.ket = z.cursor;
          if (!z.eq_s_b(U"ic")) return false;
          z.bra = z.cursor;
          delete_in_r2_or(U"iqU");
          return true;
        });
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
        z.slice_from(U"ent");
        break;
      case 6:
        if (!rv()) return false;
        z.slice_del();
        try_b(z, [&] {
          z.ket = z.cursor;
          const int b = z.find_among_b(k_a_2);
          if (b == 0) return false;
          z.bra = z.cursor;
          switch (b) {
            case 1:
              if (!r2()) return false;
              z.slice_del();
              z.ket = z.cursor;
              if (!z.eq_s_b(U"at")) return false;
              z.bra = z.cursor;
              if (!r2()) return false;
              z.slice_del();
              return true;
            case 2:
              if (r2()) {
                z.slice_del();
              } else {
                if (!r1()) return false;
                z.slice_from(U"eux");
              }
              return true;
            case 3:
              if (!r2()) return false;
              z.slice_del();
              return true;
            default:
              if (!rv()) return false;
              z.slice_from(U"i");
              return true;
          }
        });
        break;
      case 7:
        if (!r2()) return false;
        z.slice_del();
        try_b(z, [&] {
          z.ket = z.cursor;
          const int b = z.find_among_b(k_a_3);
          if (b == 0) return false;
          z.bra = z.cursor;
          if (b == 1) {
            delete_in_r2_or(U"abl");
          } else if (b == 2) {
            delete_in_r2_or(U"iqU");
          } else {
            if (!r2()) return false;
            z.slice_del();
          }
          return true;
        });
        break;
      case 8:
        if (!r2()) return false;
        z.slice_del();
        try_b(z, [&] {
          z.ket = z.cursor;
          if (!z.eq_s_b(U"at")) return false;
          z.bra = z.cursor;
          if (!r2()) return false;
          z.slice_del();
          z.ket = z.cursor;
          if (!z.eq_s_b(U"ic")) return false;
          z.bra = z.cursor;
          delete_in_r2_or(U"iqU");
          return true;
        });
        break;
      case 9:
        z.slice_from(U"eau");
        break;
      case 10:
        if (!r1()) return false;
        z.slice_from(U"al");
        break;
      case 11:
        if (!z.in_grouping_b(k_g_oux_ending)) return false;
        z.slice_from(U"ou");
        break;
      case 12:
        if (r2()) {
          z.slice_del();
        } else {
          if (!r1()) return false;
          z.slice_from(U"eux");
        }
        break;
      case 13:
        if (!r1() || !z.out_grouping_b(k_g_v)) return false;
        z.slice_del();
        break;
      // The remaining cases edit the word but report failure so that the
      // verb-suffix steps still run.
      case 14:
        if (!rv()) return false;
        z.slice_from(U"ant");
        return false;
      case 15:
        if (!rv()) return false;
        z.slice_from(U"ent");
        return false;
      default: {
        const int v = z.limit - z.cursor;
        if (!z.in_grouping_b(k_g_v) || !rv()) return false;
        z.cursor = z.limit - v;
        z.slice_del();
        return false;
      }
    }
    return true;
  }

  bool i_verb_suffix() {
    if (z.cursor < r.pv) return false;
    const int saved_lb = z.limit_backward;
    z.limit_backward = r.pv;
    z.ket = z.cursor;
    bool ok = z.find_among_b(k_a_5) != 0;
    if (ok) {
      z.bra = z.cursor;
      if (z.eq_c_b(U'H')) {
        ok = false;
      } else {
        ok = z.out_grouping_b(k_g_v);
        if (ok) z.slice_del();
      }
    }
    z.limit_backward = saved_lb;
    return ok;
  }

  bool verb_suffix() {
    if (z.cursor < r.pv) return false;
    const int saved_lb = z.limit_backward;
    z.limit_backward = r.pv;
    z.ket = z.cursor;
    const int a = z.find_among_b(k_a_7);
    if (a == 0) {
      z.limit_backward = saved_lb;
      return false;
    }
    z.bra = z.cursor;
    z.limit_backward = saved_lb;
    switch (a) {
      case 1:
        if (!r2()) return false;
        z.slice_del();
        break;
      case 2:
        z.slice_del();
        break;
      case 3:
        try_b(z, [&] {
          if (!z.eq_c_b(U'e') || !rv()) return false;
          z.bra = z.cursor;
          return true;
        });
        z.slice_del();
        break;
      default: {
        const int v = z.limit - z.cursor;
        const int b = z.find_among_b(k_a_6);
        if (b != 0) {
          if (b != 1) return false;
          if (z.prev() && z.cursor <= z.limit_backward) return false;
        }
        z.cursor = z.limit - v;
        z.slice_del();
      }
    }
    return true;
  }

  bool residual_suffix() {
    try_b(z, [&] {
      z.ket = z.cursor;
      if (!z.eq_c_b(U's')) return false;
      z.bra = z.cursor;
      const int v = z.limit - z.cursor;
      if (!z.eq_s_b(U"Hi") && !z.out_grouping_b(k_g_keep_with_s)) return false;
      z.cursor = z.limit - v;
      z.slice_del();
      return true;
    });
    if (z.cursor < r.pv) return false;
    const int saved_lb = z.limit_backward;
    z.limit_backward = r.pv;
    z.ket = z.cursor;
    const int a = z.find_among_b(k_a_8);
    bool ok = a != 0;
    if (ok) {
      z.bra = z.cursor;
      if (a == 1) {
        ok = r2() && (z.eq_c_b(U's') || z.eq_c_b(U't'));
        if (ok) z.slice_del();
      } else if (a == 2) {
        z.slice_from(U"i");
      } else {
        z.slice_del();
      }
    }
    z.limit_backward = saved_lb;
    return ok;
  }

  bool un_double() {
    const int v = z.limit - z.cursor;
    if (z.find_among_b(k_a_9) == 0) return false;
    z.cursor = z.limit - v;
    z.ket = z.cursor;
    if (!z.prev()) return false;
    z.bra = z.cursor;
    z.slice_del();
    return true;
  }

  bool un_accent() {
    int consonants = 0;
    while (z.out_grouping_b(k_g_v)) ++consonants;
    if (consonants == 0) return false;
    z.ket = z.cursor;
    if (!z.eq_c_b(U'é') && !z.eq_c_b(U'è')) return false;
    z.bra = z.cursor;
    z.slice_from(U"e");
    return true;
  }

  void run() {
    do_f(z, [&] { elisions(); });
    do_f(z, [&] { prelude(); });
    mark_regions();
    z.limit_backward = z.cursor;
    z.cursor = z.limit;

    do_b(z, [&] {
      const bool main_step = try_b(z, [&] {
        const int v = z.limit - z.cursor;
        if (!try_b(z, [&] { return standard_suffix(); }) &&
            !try_b(z, [&] { return i_verb_suffix(); }) && !verb_suffix()) {
          return false;
        }
        z.cursor = z.limit - v;
        try_b(z, [&] {
          z.ket = z.cursor;
          if (z.eq_c_b(U'Y')) {
            z.bra = z.cursor;
            z.slice_from(U"i");
            return true;
          }
          if (!z.eq_c_b(U'ç')) return false;
          z.bra = z.cursor;
          z.slice_from(U"c");
          return true;
        });
        return true;
      });
      if (!main_step) residual_suffix();
    });
    do_b(z, [&] { un_double(); });
    do_b(z, [&] { un_accent(); });

    z.cursor = z.limit_backward;
    do_f(z, [&] { postlude(); });
  }
};

}  // namespace

void stem_french(Env& z) { French{z}.run(); }

}  // namespace lexintel::snowball
