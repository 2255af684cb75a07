#include <numeric>

#include "verifier_detail.hpp"

namespace sasmall::detail {

namespace {

std::string reading_of(bool strict) { return strict ? "strict" : "default"; }

std::string suffix(bool strict) { return strict ? ".strict" : ""; }

std::int64_t ideal_sum(Space& s, std::int64_t a, std::int64_t b) { return s.canonical(std::gcd(a, b)); }

std::vector<std::int64_t> ring_elements_i64(const RingDesc& r, std::int64_t z_bound) {
  std::vector<std::int64_t> out;
  const std::int64_t n = r.is_integers() ? z_bound + 1 : to_i64(r.modulus());
  for (std::int64_t x = 0; x < n; ++x) out.push_back(x);
  return out;
}

std::int64_t mul_mod(const RingDesc& r, std::int64_t a, std::int64_t b) {
  return r.is_integers() ? a * b : (a * b) % to_i64(r.modulus());
}

// ---------------------------------------------------------------------------
// Definition-level notes

void note_i(const Corpus& c, Recorder& rec) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    for (Sub n : s.subs())
      rec.check(s.tsa(n, s.top(), false) == s.sa(n), [&] {
        auto j = item_slots(it);
        j["N"] = s.text(n);
        return j;
      });
  });
}

void note_ii(const Corpus& c, Recorder& rec, bool strict) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    if (s.is_zero_module()) return rec.tally(s.subs().size());
    for (Sub n : s.subs())
      rec.check(!s.tsa(n, s.zero(), strict), [&] {
        auto j = item_slots(it);
        j["N"] = s.text(n);
        return j;
      });
  });
}

void note_iii(const Corpus& c, Recorder& rec, bool strict) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    for (Sub t : s.subs()) {
      if (t == s.zero()) continue;
      for (Sub n : s.subs()) {
        if (!s.tsa(n, t, strict)) {
          rec.tally();
          continue;
        }
        rec.check(!s.leq(t, n), [&] {
          auto j = item_slots(it);
          j["N"] = s.text(n);
          j["T"] = s.text(t);
          return j;
        });
      }
    }
  });
}

void note_iii_maximal(const Corpus& c, Recorder& rec) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    const auto maxes = s.maximals();
    for (Sub t : s.subs()) {
      if (t == s.zero() || t == s.top()) continue;
      bool found = false;
      for (Sub p : maxes)
        if (s.leq(t, p) && !s.tsa(p, t, false)) found = true;
      rec.check(found, [&] {
        auto j = item_slots(it);
        j["T"] = s.text(t);
        return j;
      });
    }
  });
}

// Every T-sa-small submodule is sa-small.
void t_2_3_i(const Corpus& c, Recorder& rec, bool strict) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    for (Sub t : s.subs())
      for (Sub n : s.subs()) {
        if (!s.tsa(n, t, strict)) {
          rec.tally();
          continue;
        }
        rec.check(s.sa(n), [&] {
          auto j = item_slots(it);
          j["N"] = s.text(n);
          j["T"] = s.text(t);
          return j;
        });
      }
  });
}

void t_2_3_ii(const Corpus& c, Recorder& rec, bool strict) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    const auto& k = s.module_class();
    if (!(k.is_faithful && k.is_prime)) return rec.tally(s.subs().size());
    for (Sub t : s.subs())
      rec.check(s.tsa_hollow(t, strict), [&] {
        auto j = item_slots(it);
        j["T"] = s.text(t);
        return j;
      });
  });
}

void t_2_3_iii(const Corpus& c, Recorder& rec) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    const bool hyp = s.module_class().is_prime && rec.work().ring_info(s.ring()).is_semisimple;
    for (Sub n : s.subs())
      for (Sub t : s.subs()) {
        if (!hyp || !s.sa(n) || t == n || !s.leq(n, t)) {
          rec.tally();
          continue;
        }
        rec.check(s.tsa(n, t, false), [&] {
          auto j = item_slots(it);
          j["N"] = s.text(n);
          j["T"] = s.text(t);
          return j;
        });
      }
  });
}

void note_pk(const Corpus& c, Recorder& rec) {
  each_item(c, rec, false, [&](const CorpusItem& it, Space& s) {
    if (!order_at_most(it, rec.cfg().max_pair_order)) return rec.skip();
    for (Sub k : s.subs()) {
      const Hom p = quotient_map(s.module(), s.submodule(k));
      const bool kernel_ok = s.handle(kernel(p)) == k;
      for (Sub t : s.subs()) {
        const bool epi = is_T_sa_small_epi(p, s.submodule(t)).holds();
        rec.check(kernel_ok && epi == s.tsa(k, t, false), [&] {
          auto j = item_slots(it);
          j["K"] = s.text(k);
          j["T"] = s.text(t);
          return j;
        });
      }
    }
  });
}

// ---------------------------------------------------------------------------
// Dependence on T

void t2_5_i(const Corpus& c, Recorder& rec, bool strict) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    for (Sub t : s.subs()) {
      if (t == s.top()) continue;
      for (Sub t2 : s.above(t)) {
        if (t2 == t || t2 == s.top()) continue;
        for (Sub n : s.subs()) {
          if (!s.tsa(n, t, strict)) {
            rec.tally();
            continue;
          }
          rec.check(s.tsa(n, t2, strict), [&] {
            auto j = item_slots(it);
            j["N"] = s.text(n);
            j["T"] = s.text(t);
            j["T'"] = s.text(t2);
            return j;
          });
        }
      }
    }
  });
}

void t2_5_ii(const Corpus& c, Recorder& rec) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    for (Sub t1 : s.subs())
      for (Sub t2 : s.subs()) {
        if (t2 < t1) continue;
        const Sub t = s.meet(t1, t2);
        for (Sub n : s.subs()) {
          if (!s.tsa(n, t, false)) {
            rec.tally();
            continue;
          }
          rec.check(s.tsa(n, t1, false) && s.tsa(n, t2, false), [&] {
            auto j = item_slots(it);
            j["N"] = s.text(n);
            j["T1"] = s.text(t1);
            j["T2"] = s.text(t2);
            return j;
          });
        }
      }
  });
}

void t2_5_ii_converse(const Corpus& c, Recorder& rec) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    for (Sub t1 : s.subs())
      for (Sub t2 : s.subs()) {
        if (t2 < t1) continue;
        const Sub t = s.meet(t1, t2);
        const bool ci = s.completely_irreducible(t);
        for (Sub n : s.subs()) {
          if (!ci || !s.tsa(n, t1, false) || !s.tsa(n, t2, false)) {
            rec.tally();
            continue;
          }
          rec.check(s.tsa(n, t, false), [&] {
            auto j = item_slots(it);
            j["N"] = s.text(n);
            j["T1"] = s.text(t1);
            j["T2"] = s.text(t2);
            return j;
          });
        }
      }
  });
}

void t2_5_iii(const Corpus& c, Recorder& rec) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    for (Sub k : s.subs())
      for (Sub t : s.below(k))
        for (Sub n : s.below(k)) {
          if (!s.tsa(n, t, false)) {
            rec.tally();
            continue;
          }
          rec.check(s.tsa_in(n, t, k, false), [&] {
            auto j = item_slots(it);
            j["N"] = s.text(n);
            j["T"] = s.text(t);
            j["K"] = s.text(k);
            return j;
          });
        }
  });
}

void t2_5_iv(const Corpus& c, Recorder& rec) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    for (Sub t1 : s.subs())
      for (Sub t2 : s.subs()) {
        if (t2 < t1) continue;
        const Sub t = s.join(t1, t2);
        for (Sub n : s.subs()) {
          if (!s.tsa(n, t1, false) && !s.tsa(n, t2, false)) {
            rec.tally();
            continue;
          }
          rec.check(s.tsa(n, t, false), [&] {
            auto j = item_slots(it);
            j["N"] = s.text(n);
            j["T1"] = s.text(t1);
            j["T2"] = s.text(t2);
            return j;
          });
        }
      }
  });
}

// ---------------------------------------------------------------------------
// Small versus sa-small

void s_i(const Corpus& c, Recorder& rec) {
  each_ring(c, rec, true, [&](const RingDesc& r, Space& s) {
    for (Sub i : s.subs()) {
      if (!s.small(i)) {
        rec.tally();
        continue;
      }
      rec.check(s.sa(i), [&] {
        auto j = ring_slots(r);
        j["I"] = s.text(i);
        return j;
      });
    }
  });
}

void s_ii(const Corpus& c, Recorder& rec) {
  each_ring(c, rec, false, [&](const RingDesc& r, Space& s) {
    const Sub jr = s.of_ideal(s.canonical(to_i64(jacobson_radical_ring(r).generator())));
    const auto maxes = s.maximals();
    for (Sub i : s.subs()) {
      if (!s.tsa(i, jr, false)) {
        rec.tally(maxes.size());
        continue;
      }
      for (Sub m : maxes)
        rec.check(s.tsa(i, m, false), [&] {
          auto j = ring_slots(r);
          j["I"] = s.text(i);
          j["m"] = s.text(m);
          return j;
        });
    }
  });
}

void s_iii(const Corpus& c, Recorder& rec, bool nonzero) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    const bool mult = s.module_class().is_multiplication;
    for (Sub n : s.subs())
      for (Sub k : s.subs()) {
        const bool split = s.join(n, k) == s.top() && s.meet(n, k) == s.zero();
        if (!mult || !split || (nonzero && (n == s.zero() || k == s.zero()))) {
          rec.tally();
          continue;
        }
        rec.check(!s.sa(n) && !s.sa(k), [&] {
          auto j = item_slots(it);
          j["N"] = s.text(n);
          j["K"] = s.text(k);
          return j;
        });
      }
  });
}

void m_i(const Corpus& c, Recorder& rec) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    rec.check(!s.sa(s.top()), [&] { return item_slots(it); });
  });
}

void m_ii(const Corpus& c, Recorder& rec) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    rec.check(s.sa(s.zero()) == s.ideal_small(s.ann(s.top()), 1), [&] { return item_slots(it); });
  });
}

void m_iii(const Corpus& c, Recorder& rec) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    if (!rec.work().ring_info(s.ring()).is_simple) return rec.tally(s.subs().size());
    for (Sub n : s.subs())
      rec.check((n != s.top()) == s.sa(n), [&] {
        auto j = item_slots(it);
        j["N"] = s.text(n);
        return j;
      });
  });
}

void m_iv(const Corpus& c, Recorder& rec) {
  each_ring(c, rec, true, [&](const RingDesc& r, Space& s) {
    const std::int64_t jr = s.canonical(to_i64(jacobson_radical_ring(r).generator()));
    const auto elems = ring_elements_i64(r, rec.cfg().z_bound);
    for (Sub m : s.maximals()) {
      const std::int64_t mi = s.ideal_of(m);
      for (std::int64_t x : elems) {
        if (!s.sa(m) || x % mi == 0) {
          rec.tally();
          continue;
        }
        const Sub rx = s.of_ideal(s.canonical(x));
        rec.check(ideal_leq(s.ann(rx), jr), [&] {
          auto j = ring_slots(r);
          j["m"] = s.text(m);
          j["x"] = std::to_string(x);
          return j;
        });
      }
    }
  });
}

void m_v(const Corpus& c, Recorder& rec) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    if (!s.module_class().is_prime || !s.ideal_small(s.ann(s.top()), 1)) return rec.tally(s.subs().size());
    for (Sub n : s.subs())
      rec.check((n != s.top()) == s.sa(n) && (!s.small(n) || s.sa(n)), [&] {
        auto j = item_slots(it);
        j["N"] = s.text(n);
        return j;
      });
  });
}

void cor_faithful_prime(const Corpus& c, Recorder& rec) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    const auto& k = s.module_class();
    if (!(k.is_faithful && k.is_prime)) return rec.tally(s.subs().size());
    for (Sub n : s.subs()) {
      if (n == s.top()) continue;
      rec.check(s.sa(n), [&] {
        auto j = item_slots(it);
        j["N"] = s.text(n);
        return j;
      });
    }
  });
}

// ---------------------------------------------------------------------------
// Rings

void r_i(const Corpus& c, Recorder& rec) {
  each_ring(c, rec, true, [&](const RingDesc& r, Space& s) {
    const bool semisimple = rec.work().ring_info(r).is_semisimple;
    for (Sub i : s.subs()) {
      bool comaximal = false;
      for (Sub jj : s.subs())
        if (jj != s.top() && s.join(i, jj) == s.top()) comaximal = true;
      if (i == s.zero() || !comaximal || !s.sa(i)) {
        rec.tally();
        continue;
      }
      rec.check(!semisimple, [&] {
        auto j = ring_slots(r);
        j["I"] = s.text(i);
        return j;
      });
    }
  });
}

void r_ii(const Corpus& c, Recorder& rec) {
  each_ring(c, rec, true, [&](const RingDesc& r, Space& s) {
    const auto& info = rec.work().ring_info(r);
    if (!info.is_semisimple || !s.sa_hollow()) return rec.tally();
    rec.check(info.is_simple, [&] { return ring_slots(r); });
  });
}

void r_iii(const Corpus& c, Recorder& rec, bool as_proved) {
  each_ring(c, rec, true, [&](const RingDesc& r, Space& s) {
    const auto& info = rec.work().ring_info(r);
    const bool hollow = s.sa_hollow();
    std::vector<std::int64_t> zd{0}, idem{0, 1};
    if (info.zero_divisors) {
      zd.clear();
      for (const auto& z : *info.zero_divisors) zd.push_back(to_i64(z));
      idem.clear();
      for (const auto& e : *info.idempotents) idem.push_back(to_i64(e));
    }
    bool idem_ok = true;
    for (std::int64_t e : idem)
      if (e != 0 && e != 1) idem_ok = false;
    const auto elems = ring_elements_i64(r, rec.cfg().z_bound);
    for (std::int64_t x : zd) {
      if (!hollow || (as_proved && x == 0)) {
        rec.tally();
        continue;
      }
      const Sub rx = s.of_ideal(s.canonical(x));
      if (!as_proved) {
        bool exists = false;
        for (std::int64_t y : elems)
          if (s.join(rx, s.of_ideal(s.canonical(y))) != s.top()) exists = true;
        rec.check(exists && idem_ok, [&] {
          auto j = ring_slots(r);
          j["x"] = std::to_string(x);
          return j;
        });
        continue;
      }
      for (std::int64_t y : elems) {
        if (y == 0 || mul_mod(r, x, y) != 0) {
          rec.tally();
          continue;
        }
        rec.check(s.join(rx, s.of_ideal(s.canonical(y))) != s.top() && idem_ok, [&] {
          auto j = ring_slots(r);
          j["x"] = std::to_string(x);
          j["y"] = std::to_string(y);
          return j;
        });
      }
    }
  });
}

void r_iv(const Corpus& c, Recorder& rec, bool nonzero) {
  each_ring(c, rec, true, [&](const RingDesc& r, Space& s) {
    const bool vnr = rec.work().ring_info(r).is_vnr;
    for (Sub i : s.subs()) {
      if (!vnr || (nonzero && i == s.zero())) {
        rec.tally();
        continue;
      }
      rec.check(!s.sa(i), [&] {
        auto j = ring_slots(r);
        j["I"] = s.text(i);
        return j;
      });
    }
  });
}

void r_v(const Corpus& c, Recorder& rec) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    const auto& k = s.module_class();
    if (!rec.work().ring_info(s.ring()).is_domain || !k.is_faithful || !k.is_multiplication)
      return rec.tally(s.subs().size());
    for (Sub n : s.subs())
      rec.check((n != s.top()) == s.sa(n), [&] {
        auto j = item_slots(it);
        j["N"] = s.text(n);
        return j;
      });
  });
}

// ---------------------------------------------------------------------------
// Closure properties

void p_i(const Corpus& c, Recorder& rec) {
  each_item(c, rec, false, [&](const CorpusItem& it, Space& s) {
    const bool strong = s.module_class().is_strong_comultiplication;
    for (Sub n : s.subs())
      for (Sub l : s.subs()) {
        if (!strong || l == s.zero() || s.join(n, l) != s.top() || !s.sa(n)) {
          rec.tally();
          continue;
        }
        rec.check(s.essential(l), [&] {
          auto j = item_slots(it);
          j["N"] = s.text(n);
          j["L"] = s.text(l);
          return j;
        });
      }
  });
}

void p_ii(const Corpus& c, Recorder& rec, bool strict) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    for (Sub t : s.subs())
      for (Sub k : s.subs()) {
        const auto below = s.below(k);
        if (!s.tsa(k, t, strict)) {
          rec.tally(below.size());
          continue;
        }
        for (Sub n : below)
          rec.check(s.tsa(n, t, strict), [&] {
            auto j = item_slots(it);
            j["N"] = s.text(n);
            j["K"] = s.text(k);
            j["T"] = s.text(t);
            return j;
          });
      }
  });
}

void p_iii(const Corpus& c, Recorder& rec) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    for (Sub t : s.subs())
      for (Sub n1 : s.subs()) {
        if (!s.tsa(n1, t, false)) {
          rec.tally(s.subs().size());
          continue;
        }
        for (Sub n2 : s.subs())
          rec.check(s.tsa(s.meet(n1, n2), t, false), [&] {
            auto j = item_slots(it);
            j["N1"] = s.text(n1);
            j["N2"] = s.text(n2);
            j["T"] = s.text(t);
            return j;
          });
      }
  });
}

void p_iv(const Corpus& c, Recorder& rec, bool strict) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    for (Sub k : s.subs())
      for (Sub t : s.below(k))
        for (Sub n : s.below(k)) {
          if (!s.tsa_in(n, t, k, strict)) {
            rec.tally();
            continue;
          }
          rec.check(s.tsa(n, t, strict), [&] {
            auto j = item_slots(it);
            j["N"] = s.text(n);
            j["T"] = s.text(t);
            j["K"] = s.text(k);
            return j;
          });
        }
  });
}

enum class VPart { sa, sa_converse, tsa, tsa_converse };

void p_v(const Corpus& c, Recorder& rec, VPart part) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    const auto& k = s.module_class();
    const bool converse = part == VPart::sa_converse || part == VPart::tsa_converse;
    if (!k.is_multiplication || (converse && !k.is_faithful)) {
      const std::size_t n = s.subs().size();
      return rec.tally(part == VPart::sa || part == VPart::sa_converse ? n : n * n);
    }
    Space& rs = rec.work().ring(s.ring());
    auto ideal_sub = [&](Sub x) { return rs.of_ideal(s.colon(x, s.top())); };
    for (Sub n : s.subs()) {
      if (part == VPart::sa || part == VPart::sa_converse) {
        const bool m_side = s.sa(n), r_side = rs.sa(ideal_sub(n));
        const bool hyp = part == VPart::sa ? m_side : r_side;
        if (!hyp) {
          rec.tally();
          continue;
        }
        rec.check(part == VPart::sa ? r_side : m_side, [&] {
          auto j = item_slots(it);
          j["N"] = s.text(n);
          return j;
        });
        continue;
      }
      for (Sub t : s.subs()) {
        const bool m_side = s.tsa(n, t, false), r_side = rs.tsa(ideal_sub(n), ideal_sub(t), false);
        const bool hyp = part == VPart::tsa ? m_side : r_side;
        if (!hyp) {
          rec.tally();
          continue;
        }
        rec.check(part == VPart::tsa ? r_side : m_side, [&] {
          auto j = item_slots(it);
          j["N"] = s.text(n);
          j["T"] = s.text(t);
          return j;
        });
      }
    }
  });
}

void p_v_j(const Corpus& c, Recorder& rec) {
  each_item(c, rec, false, [&](const CorpusItem& it, Space& s) {
    const auto& k = s.module_class();
    if (!k.is_multiplication || !k.is_faithful) return rec.tally(s.subs().size());
    Space& rs = rec.work().ring(s.ring());
    for (Sub t : s.subs()) {
      const Sub jr = rs.j_tsa(rs.of_ideal(s.colon(t, s.top())), false);
      rec.check(s.j_tsa(t, false) == s.scaled_top(rs.ideal_of(jr)), [&] {
        auto j = item_slots(it);
        j["T"] = s.text(t);
        return j;
      });
    }
  });
}

// Quotients M -> M/K for K = kZ with k >= 1 on Z, and every K otherwise.
template <class F>
void each_quotient(Space& s, Workspace& w, F&& f) {
  for (Sub k : s.subs()) {
    if (s.module().is_z_line() && k == 0) continue;
    f(k, quotient_view(w, s, k));
  }
}

void p_vi(const Corpus& c, Recorder& rec) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    each_quotient(s, rec.work(), [&](Sub k, const QuotientView& q) {
      for (const auto& [n, qn] : q.image)
        for (const auto& [t, qt] : q.image) {
          if (!q.q->tsa(qn, qt, false)) {
            rec.tally();
            continue;
          }
          rec.check(s.tsa(n, t, false), [&] {
            auto j = item_slots(it);
            j["K"] = s.text(k);
            j["N"] = s.text(n);
            j["T"] = s.text(t);
            return j;
          });
        }
    });
  });
}

// N < T, N <= K; `converse` swaps hypothesis and conclusion.
void p_vii(const Corpus& c, Recorder& rec, bool converse) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    each_quotient(s, rec.work(), [&](Sub n, const QuotientView& q) {
      for (const auto& [t, qt] : q.image) {
        if (t == n) continue;
        for (const auto& [k, qk] : q.image) {
          const bool quotient_side = q.q->tsa(qk, qt, false);
          const bool module_side = s.tsa(k, t, false) && s.tsa(n, t, false);
          if (!(converse ? module_side : quotient_side)) {
            rec.tally();
            continue;
          }
          rec.check(converse ? quotient_side : module_side, [&] {
            auto j = item_slots(it);
            j["N"] = s.text(n);
            j["K"] = s.text(k);
            j["T"] = s.text(t);
            return j;
          });
        }
      }
    });
  });
}

void p_viii(const Corpus& c, Recorder& rec) {
  each_item(c, rec, false, [&](const CorpusItem& it, Space& s) {
    if (!s.ring().is_finite()) return rec.tally(s.subs().size() * s.subs().size());
    const std::int64_t n_ring = to_i64(s.ring().modulus());
    std::set<Sub> seen_kernels;
    for (std::int64_t g = 1; g < n_ring; ++g) {
      std::optional<Localization> loc;
      try {
        loc = localize(s.module(), {Integer(g)});
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotMCS) throw;
        continue;
      }
      if (!seen_kernels.insert(s.handle(loc->kernel)).second) continue;
      Space& ls = rec.work().module(loc->module);
      std::vector<Sub> img;
      for (Sub x : s.subs()) img.push_back(ls.handle(localize_submodule(*loc, s.submodule(x))));
      std::string s_text = "{";
      for (std::size_t i = 0; i < loc->s.size(); ++i) s_text += (i ? "," : "") + loc->s[i].str();
      s_text += "}";
      for (Sub n : s.subs())
        for (Sub t : s.subs()) {
          if (!ls.tsa(img[static_cast<std::size_t>(n)], img[static_cast<std::size_t>(t)], false)) {
            rec.tally();
            continue;
          }
          rec.check(s.tsa(n, t, false), [&] {
            auto j = item_slots(it);
            j["S"] = s_text;
            j["N"] = s.text(n);
            j["T"] = s.text(t);
            return j;
          });
        }
    }
  });
}

void cor_hollow_iff(const Corpus& c, Recorder& rec, bool strict) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    const auto& k = s.module_class();
    if (!k.is_multiplication || !k.is_faithful) return rec.tally(s.subs().size());
    Space& rs = rec.work().ring(s.ring());
    for (Sub t : s.subs())
      rec.check(s.tsa_hollow(t, strict) == rs.tsa_hollow(rs.of_ideal(s.colon(t, s.top())), strict), [&] {
        auto j = item_slots(it);
        j["T"] = s.text(t);
        return j;
      });
  });
}

void cor_local(const Corpus& c, Recorder& rec, bool proper) {
  each_ring(c, rec, false, [&](const RingDesc& r, Space& s) {
    const bool local = rec.work().ring_info(r).is_local;
    const auto maxes = s.maximals();
    for (Sub a : s.subs()) {
      const bool hyp = local && maxes.size() == 1 && s.tsa(maxes.front(), a, false);
      for (Sub i : s.subs()) {
        if (!hyp || (proper && i == s.top())) {
          rec.tally();
          continue;
        }
        rec.check(s.tsa(i, a, false), [&] {
          auto j = ring_slots(r);
          j["A"] = s.text(a);
          j["I"] = s.text(i);
          return j;
        });
      }
    }
  });
}

void f_inverse_hollow(const Corpus& c, Recorder& rec, bool strict) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    each_quotient(s, rec.work(), [&](Sub k, const QuotientView& q) {
      for (const auto& [t, qt] : q.image) {
        if (q.q->is_zero_module() || !q.q->tsa_hollow(qt, strict)) {
          rec.tally();
          continue;
        }
        rec.check(s.tsa_hollow(t, strict), [&] {
          auto j = item_slots(it);
          j["K"] = s.text(k);
          j["T"] = s.text(t);
          return j;
        });
      }
    });
  });
}

// ---------------------------------------------------------------------------
// Radicals, sums, intersections

void l3_16(const Corpus& c, Recorder& rec) {
  each_ring(c, rec, true, [&](const RingDesc& r, Space& s) {
    for (Sub i : s.subs()) {
      if (!s.sa(i)) {
        rec.tally();
        continue;
      }
      rec.check(s.sa(s.rad(i)), [&] {
        auto j = ring_slots(r);
        j["I"] = s.text(i);
        return j;
      });
    }
  });
}

void prop_rad(const Corpus& c, Recorder& rec) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    const auto& k = s.module_class();
    for (Sub n : s.subs()) {
      if (!k.is_faithful || !k.is_multiplication || !s.sa(n)) {
        rec.tally();
        continue;
      }
      rec.check(s.sa(s.rad(n)), [&] {
        auto j = item_slots(it);
        j["N"] = s.text(n);
        return j;
      });
    }
  });
}

// `with_sum` adds N + K = M, which the argument by contradiction relies on.
void n_cap_k(const Corpus& c, Recorder& rec, bool with_sum) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    for (Sub n : s.subs())
      for (Sub k : s.subs()) {
        if (n == s.zero() || !s.sa(n) || ideal_sum(s, s.colon(n, k), s.colon(k, n)) != 1 ||
            (with_sum && s.join(n, k) != s.top())) {
          rec.tally();
          continue;
        }
        rec.check(s.meet(n, k) != s.zero(), [&] {
          auto j = item_slots(it);
          j["N"] = s.text(n);
          j["K"] = s.text(k);
          return j;
        });
      }
  });
}

void k_plus_h(const Corpus& c, Recorder& rec, bool part_ii, bool strict) {
  each_item(c, rec, true, [&](const CorpusItem& it, Space& s) {
    const bool prime = s.module_class().is_prime;
    for (Sub t : s.subs())
      for (Sub k : s.subs())
        for (Sub h : s.subs()) {
          const Sub kh = s.join(k, h);
          const bool hyp =
              part_ii ? (prime && kh != s.top() && s.tsa(k, t, strict)) : s.tsa(kh, t, strict);
          if (!hyp) {
            rec.tally();
            continue;
          }
          rec.check(part_ii ? s.tsa(kh, t, strict) : (s.tsa(k, t, strict) && s.tsa(h, t, strict)), [&] {
            auto j = item_slots(it);
            j["K"] = s.text(k);
            j["H"] = s.text(h);
            j["T"] = s.text(t);
            return j;
          });
        }
  });
}

// ---------------------------------------------------------------------------
// Maps and constructions

void direct_sum_thm(const Corpus& c, Recorder& rec) {
  const auto& items = c.items;
  for (std::size_t a = 0; a < items.size(); ++a)
    for (std::size_t b = a; b < items.size(); ++b) {
      const auto& i1 = items[a];
      const auto& i2 = items[b];
      if (!i1.enumerable || !i2.enumerable || !(i1.module.ring() == i2.module.ring())) continue;
      if (i1.module.order() * i2.module.order() > rec.cfg().max_pair_order) continue;
      Space& s1 = rec.work().item(i1);
      Space& s2 = rec.work().item(i2);
      const auto& info = rec.work().ring_info(i1.module.ring());
      const bool hyp_ring = info.is_semisimple && info.is_local;
      const std::size_t n1 = s1.subs().size(), n2 = s2.subs().size();
      if (!hyp_ring) {
        rec.tally(n1 * n1 * n2 * n2);
        continue;
      }
      const DirectSum ds = direct_sum(i1.module, i2.module);
      Space& d = rec.work().module(ds.module);
      std::vector<Sub> sum(n1 * n2);
      for (Sub x : s1.subs())
        for (Sub y : s2.subs())
          sum[static_cast<std::size_t>(x) * n2 + static_cast<std::size_t>(y)] =
              d.handle(sub_direct_sum(s1.submodule(x), s2.submodule(y)));
      auto at = [&](Sub x, Sub y) { return sum[static_cast<std::size_t>(x) * n2 + static_cast<std::size_t>(y)]; };
      for (Sub t1 : s1.subs())
        for (Sub t2 : s2.subs())
          for (Sub x : s1.subs())
            for (Sub y : s2.subs()) {
              if (!s1.tsa(x, t1, false) || !s2.tsa(y, t2, false)) {
                rec.tally();
                continue;
              }
              rec.check(d.tsa(at(x, y), at(t1, t2), false), [&] {
                json j;
                j["ring"] = i1.ring_text;
                j["M1"] = i1.module_text;
                j["M2"] = i2.module_text;
                j["N1"] = s1.text(x);
                j["T1"] = s1.text(t1);
                j["N2"] = s2.text(y);
                j["T2"] = s2.text(t2);
                return j;
              });
            }
    }
}

/// Each nonzero submodule Q of P as a module of its own, with its inclusion.
template <class F>
void each_mono(const Corpus& c, Recorder& rec, F&& f) {
  each_item(c, rec, false, [&](const CorpusItem& it, Space& p) {
    if (!order_at_most(it, rec.cfg().max_pair_order)) return rec.skip();
    for (Sub q : p.subs()) {
      if (q == p.zero()) continue;
      const SubmoduleModule sm = submodule_as_module(p.submodule(q));
      f(it, p, q, sm, rec.work().module(sm.module));
    }
  });
}

json mono_slots(const CorpusItem& it, Space& p, Sub q) {
  json j;
  j["ring"] = it.ring_text;
  j["P"] = it.module_text;
  j["Q"] = p.text(q);
  return j;
}

void mono_thm(const Corpus& c, Recorder& rec) {
  each_mono(c, rec, [&](const CorpusItem& it, Space& p, Sub q, const SubmoduleModule& sm, Space& m) {
    const Hom g = corestrict(sm.inclusion);
    Space& fm = rec.work().module(g.target());
    std::vector<Sub> img;
    for (Sub x : m.subs()) img.push_back(fm.handle(push(g, m.submodule(x))));
    for (Sub t : m.subs())
      for (Sub k : m.subs()) {
        if (!m.tsa(k, t, false)) {
          rec.tally();
          continue;
        }
        rec.check(fm.tsa(img[static_cast<std::size_t>(k)], img[static_cast<std::size_t>(t)], false), [&] {
          auto j = mono_slots(it, p, q);
          j["K"] = m.text(k);
          j["T"] = m.text(t);
          return j;
        });
      }
  });
}

enum class CompPart { as_stated, kernel, containment };

void composition_thm(const Corpus& c, Recorder& rec, CompPart part) {
  each_mono(c, rec, [&](const CorpusItem& it, Space& p, Sub q, const SubmoduleModule& sm, Space& m) {
    std::vector<Sub> pushed, pulled;
    for (Sub t : m.subs()) pushed.push_back(p.handle(push(sm.inclusion, m.submodule(t))));
    if (part == CompPart::containment) {
      for (Sub t : m.subs())
        rec.check(ideal_leq(p.colon(pushed[static_cast<std::size_t>(t)], p.top()), m.colon(t, m.top())), [&] {
          auto j = mono_slots(it, p, q);
          j["T"] = m.text(t);
          return j;
        });
      return;
    }
    for (Sub g : p.subs()) pulled.push_back(m.handle(preimage(sm.inclusion, p.submodule(g))));
    for (Sub g : p.subs())
      for (Sub t : m.subs()) {
        if (!p.tsa(g, pushed[static_cast<std::size_t>(t)], false)) {
          rec.tally();
          continue;
        }
        const bool kernel_ok = m.tsa(pulled[static_cast<std::size_t>(g)], t, false);
        const bool epi = p.join(q, g) == p.top();
        rec.check(part == CompPart::kernel ? kernel_ok : kernel_ok && epi, [&] {
          auto j = mono_slots(it, p, q);
          j["G"] = p.text(g);
          j["T"] = m.text(t);
          return j;
        });
      }
  });
}

void flat_thm(const Corpus& c, Recorder& rec, bool part_ii) {
  each_item(c, rec, false, [&](const CorpusItem& it, Space& s) {
    if (!order_at_most(it, rec.cfg().max_tensor_order)) return rec.skip();
    Space& f = rec.work().module(tensor_with_free(s.module(), 2));
    std::vector<Sub> img;
    for (Sub x : s.subs()) img.push_back(f.handle(tensor_submodule(s.submodule(x), 2)));
    auto at = [&](Sub x) { return img[static_cast<std::size_t>(x)]; };
    for (Sub n : s.subs()) {
      if (!part_ii) {
        rec.check(s.sa(n) == f.sa(at(n)), [&] {
          auto j = item_slots(it);
          j["F"] = "R^2";
          j["N"] = s.text(n);
          return j;
        });
        continue;
      }
      for (Sub t : s.subs())
        rec.check(s.tsa(n, t, false) == f.tsa(at(n), at(t), false), [&] {
          auto j = item_slots(it);
          j["F"] = "R^2";
          j["N"] = s.text(n);
          j["T"] = s.text(t);
          return j;
        });
    }
  });
}

json witness(std::initializer_list<std::pair<const char*, const char*>> kv) {
  json j;
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

}  // namespace

void register_statements(std::vector<Statement>& out) {
  auto add = [&](std::string id, std::string claim, std::string reading, std::function<void(const Corpus&, Recorder&)> run,
                 bool expected_vacuous = false, bool expected_falsified = false) -> Statement& {
    Statement s;
    s.id = std::move(id);
    s.claim = std::move(claim);
    s.reading = std::move(reading);
    s.run = std::move(run);
    s.expected_vacuous = expected_vacuous;
    s.expected_falsified = expected_falsified;
    out.push_back(std::move(s));
    return out.back();
  };
  using C = const Corpus&;
  using R = Recorder&;

  add("Note.i", "T = M: N is T-sa-small iff N is sa-small", "default", note_i);
  for (bool st : {false, true}) {
    add("Note.ii" + suffix(st), "M nonzero: no submodule is 0-sa-small", reading_of(st),
        [st](C c, R r) { note_ii(c, r, st); }, false, st);
    add("Note.iii" + suffix(st), "T nonzero and N T-sa-small: T is not inside N", reading_of(st),
        [st](C c, R r) { note_iii(c, r, st); }, false, st);
  }
  add("Note.iii.maximal", "T nonzero proper: some maximal submodule over T is not T-sa-small", "default",
      note_iii_maximal);
  for (bool st : {false, true}) {
    add("T2.3.i" + suffix(st), "N T-sa-small implies N sa-small", reading_of(st),
        [st](C c, R r) { t_2_3_i(c, r, st); }, false, st);
    add("T2.3.ii" + suffix(st), "M faithful prime: M is T-sa-hollow for every T", reading_of(st),
        [st](C c, R r) { t_2_3_ii(c, r, st); }, false, !st);
  }
  add("T2.3.iii", "M prime over a semisimple ring, N sa-small, T strictly over N: N is T-sa-small", "default",
      t_2_3_iii);
  add("Note.pK", "p_K: M -> M/K is a T-sa-small epimorphism iff K is T-sa-small", "default", note_pk);
  for (bool st : {false, true})
    add("T2.5.i" + suffix(st), "T < T' < M and N T-sa-small: N is T'-sa-small", reading_of(st),
        [st](C c, R r) { t2_5_i(c, r, st); });
  add("T2.5.ii", "T = T1 meet T2 and N T-sa-small: N is T1- and T2-sa-small", "default", t2_5_ii);
  add("T2.5.ii.converse", "T = T1 meet T2 completely irreducible, N T1- and T2-sa-small: N is T-sa-small", "default",
      t2_5_ii_converse);
  add("T2.5.iii", "T <= K, N <= K and N T-sa-small in M: N is T-sa-small in K", "default", t2_5_iii);
  add("T2.5.iv", "T = T1 + T2 and N Ti-sa-small for some i: N is T-sa-small", "default", t2_5_iv);
  add("S.i", "small ideals of R are sa-small", "-", s_i);
  add("S.ii", "R finite, I J(R)-sa-small: I is m-sa-small for every maximal m", "default", s_ii);
  add("S.iii.as-stated", "M = N + K direct, M multiplication: neither N nor K is sa-small", "-",
      [](C c, R r) { s_iii(c, r, false); }, false, true);
  add("S.iii.nonzero", "as S.iii.as-stated with N and K nonzero", "-", [](C c, R r) { s_iii(c, r, true); });
  add("M.i", "M is not sa-small in itself", "-", m_i);
  add("M.ii", "0 is sa-small iff Ann(M) is small in R", "-", m_ii);
  add("M.iii", "R simple: the sa-small submodules are exactly the proper ones", "-", m_iii);
  add("M.iv", "m maximal and sa-small in R, x outside m: Ann(Rx) inside J(R)", "-", m_iv);
  add("M.v", "M prime with Ann(M) small: sa-small = proper, and small implies sa-small", "-", m_v);
  add("Cor.faithful-prime", "M faithful prime: every proper submodule is sa-small", "-", cor_faithful_prime);
  add("t2.3.i", "R with a nonzero sa-small ideal comaximal with a proper ideal: R is not semisimple", "-", r_i);
  add("t2.3.ii", "R semisimple and sa-hollow: R is simple", "-", r_ii);
  add("t2.3.iii.as-stated",
      "R sa-hollow, x a zero divisor: Rx + Ry != R for some y, and 1 is the only nonzero idempotent", "-",
      [](C c, R r) { r_iii(c, r, false); });
  add("t2.3.iii.as-proved", "R sa-hollow, x a nonzero zero divisor: Rx + Ry != R for every y != 0 with xy = 0", "-",
      [](C c, R r) { r_iii(c, r, true); });
  add("t2.3.iv.as-stated", "R von Neumann regular: no finitely generated ideal is sa-small", "-",
      [](C c, R r) { r_iv(c, r, false); }, false, true);
  add("t2.3.iv.nonzero", "as t2.3.iv.as-stated for nonzero ideals", "-", [](C c, R r) { r_iv(c, r, true); });
  add("t2.3.v", "R a domain, M faithful multiplication: sa-small = proper", "-", r_v);
  add("P2.6.i", "M strong comultiplication, N sa-small, L nonzero with N + L = M: L essential", "-", p_i);
  for (bool st : {false, true})
    add("P2.6.ii" + suffix(st), "N <= K and K T-sa-small: N T-sa-small", reading_of(st),
        [st](C c, R r) { p_ii(c, r, st); });
  add("P2.6.iii", "N1 T-sa-small: N1 meet N2 is T-sa-small", "default", p_iii);
  for (bool st : {false, true})
    add("P2.6.iv" + suffix(st), "T, N <= K and N T-sa-small in K: N T-sa-small in M", reading_of(st),
        [st](C c, R r) { p_iv(c, r, st); }, false, true);
  add("P2.6.v.sa", "M multiplication, N sa-small: (N:M) sa-small in R", "-",
      [](C c, R r) { p_v(c, r, VPart::sa); });
  add("P2.6.v.sa-converse", "M faithful multiplication, (N:M) sa-small in R: N sa-small", "-",
      [](C c, R r) { p_v(c, r, VPart::sa_converse); });
  add("P2.6.v.tsa", "M multiplication, N T-sa-small: (N:M) is (T:M)-sa-small in R", "default",
      [](C c, R r) { p_v(c, r, VPart::tsa); });
  add("P2.6.v.tsa-converse", "M faithful multiplication, (N:M) (T:M)-sa-small in R: N T-sa-small", "default",
      [](C c, R r) { p_v(c, r, VPart::tsa_converse); });
  add("P2.6.v.J", "M faithful multiplication: J_T(M) = J_(T:M)(R) M", "default", p_v_j);
  add("P2.6.vi", "f = p_K epi, f(N) f(T)-sa-small in M/K: N T-sa-small (N, T over K)", "default", p_vi);
  add("P2.6.vii", "N < T, N <= K, K/N T/N-sa-small in M/N: K and N are T-sa-small", "default",
      [](C c, R r) { p_vii(c, r, false); });
  add("P2.6.viii", "M finite, S multiplicatively closed, S^-1 N S^-1 T-sa-small: N T-sa-small", "default", p_viii, false,
      true);
  for (bool st : {false, true})
    add("Cor.hollow-iff" + suffix(st), "M faithful multiplication: M T-sa-hollow iff R (T:M)-sa-hollow", reading_of(st),
        [st](C c, R r) { cor_hollow_iff(c, r, st); });
  add("Cor.local.as-stated", "R local, m A-sa-small: every ideal is A-sa-small", "default",
      [](C c, R r) { cor_local(c, r, false); }, false, true);
  add("Cor.local.proper", "as Cor.local.as-stated for proper ideals", "default",
      [](C c, R r) { cor_local(c, r, true); });
  add("Thm.f-inverse-hollow", "f = p_K epi, M/K T'-sa-hollow: M f^-1(T')-sa-hollow", "default",
      [](C c, R r) { f_inverse_hollow(c, r, false); }, true);
  add("Thm.f-inverse-hollow.strict", "as Thm.f-inverse-hollow", "strict",
      [](C c, R r) { f_inverse_hollow(c, r, true); });
  add("Ex.converse-P2.6.vii", "converse of P2.6.vii: K and N T-sa-small imply K/N T/N-sa-small in M/N", "default",
      [](C c, R r) { p_vii(c, r, true); }, false, true)
      .paper_witness = witness({{"ring", "Z"}, {"M", "Z"}, {"N", "8Z"}, {"K", "4Z"}, {"T", "2Z"}});
  add("L3.16", "I sa-small in R: rad(I) sa-small", "-", l3_16);
  add("Prop.rad", "M f.g. faithful multiplication, N sa-small: rad(N) sa-small", "-", prop_rad);
  add("Thm.NcapK.as-stated", "N nonzero sa-small, (N:K) + (K:N) = R: N meet K nonzero", "-",
      [](C c, R r) { n_cap_k(c, r, false); }, false, true);
  add("Thm.NcapK.as-proved", "as Thm.NcapK.as-stated with N + K = M", "-", [](C c, R r) { n_cap_k(c, r, true); });
  add("Thm.K+H.i", "K + H T-sa-small: K and H T-sa-small", "default",
      [](C c, R r) { k_plus_h(c, r, false, false); });
  for (bool st : {false, true})
    add("Thm.K+H.ii" + suffix(st), "M prime, K T-sa-small, K + H != M: K + H T-sa-small", reading_of(st),
        [st](C c, R r) { k_plus_h(c, r, true, st); }, false, !st);
  add("Thm.direct-sum", "R semisimple hollow, Ni Ti-sa-small in Mi: N1 + N2 is T1 + T2-sa-small in M1 + M2", "default",
      direct_sum_thm);
  add("Thm.mono", "f mono, K T-sa-small in M: f(K) f(T)-sa-small in f(M)", "default", mono_thm);
  add("Thm.composition.as-stated", "f mono, g an f(T)-sa-small epi: g f is a T-sa-small epi", "default",
      [](C c, R r) { composition_thm(c, r, CompPart::as_stated); }, false, true);
  add("Thm.composition.kernel", "f mono, g an f(T)-sa-small epi: Ker(g f) is T-sa-small", "default",
      [](C c, R r) { composition_thm(c, r, CompPart::kernel); });
  add("Thm.composition.containment", "f mono: (f(T):K) inside (T:N)", "-",
      [](C c, R r) { composition_thm(c, r, CompPart::containment); });
  add("Thm.flat.i", "F = R^2: N sa-small iff F (x) N sa-small in F (x) M", "-",
      [](C c, R r) { flat_thm(c, r, false); });
  add("Thm.flat.ii", "F = R^2: N T-sa-small iff F (x) N is F (x) T-sa-small in F (x) M", "default",
      [](C c, R r) { flat_thm(c, r, true); });
}

}  // namespace sasmall::detail
