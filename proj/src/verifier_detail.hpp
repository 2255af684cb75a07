#pragma once

#include <map>

#include "sasmall/morphism.hpp"
#include "sasmall/verifier.hpp"

namespace sasmall::detail {

using Sub = Space::Sub;

inline json item_slots(const CorpusItem& it) {
  json j;
  j["ring"] = it.ring_text;
  j["M"] = it.module_text;
  return j;
}

inline json ring_slots(const RingDesc& r) {
  json j;
  j["ring"] = to_string(r);
  return j;
}

/// (a) inside (b) for canonical ideal generators over Z/n or Z.
inline bool ideal_leq(std::int64_t a, std::int64_t b) { return b == 0 ? a == 0 : a % b == 0; }

inline bool order_at_most(const CorpusItem& it, std::int64_t bound) {
  return it.enumerable && it.module.order() <= bound;
}

/// Enumerable items, plus Z when `with_z`; presented items are skipped.
template <class F>
void each_item(const Corpus& c, Recorder& rec, bool with_z, F&& f) {
  for (const auto& it : c.items) {
    if (it.enumerable)
      f(it, rec.work().item(it));
    else if (it.module.is_z_line()) {
      if (with_z) f(it, rec.work().item(it));
    } else
      rec.skip();
  }
}

/// Each corpus ring as a module over itself.
template <class F>
void each_ring(const Corpus& c, Recorder& rec, bool with_z, F&& f) {
  for (const auto& r : c.rings) {
    if (r.is_integers() && !with_z) continue;
    f(r, rec.work().ring(r));
  }
}

/// Submodules of M over K carried to M/K.
struct QuotientView {
  Space* q = nullptr;
  std::map<Sub, Sub> image;
};

QuotientView quotient_view(Workspace& w, Space& s, Sub k);

void register_statements(std::vector<Statement>& out);

}  // namespace sasmall::detail
