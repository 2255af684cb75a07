#include <gtest/gtest.h>

#include <set>

#include "sasmall/ring.hpp"

using namespace sasmall;

namespace {

using ElemSet = std::set<long>;

// Ideal of Z_n as an explicit residue set.
ElemSet ideal_elements(long n, long d) {
  ElemSet s;
  for (long x = 0; x < n; ++x) s.insert((d * x) % n);
  return s;
}

ElemSet set_sum(long n, const ElemSet& a, const ElemSet& b) {
  ElemSet s;
  for (long x : a)
    for (long y : b) s.insert((x + y) % n);
  return s;
}

bool subset(const ElemSet& a, const ElemSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// All ideals of Z_n as element sets, found by closing every residue.
std::vector<ElemSet> all_ideals(long n) {
  std::set<ElemSet> found;
  for (long g = 0; g < n; ++g) found.insert(ideal_elements(n, g));
  return {found.begin(), found.end()};
}

}  // namespace

// ===========================================================================
// Ideals
// ===========================================================================

TEST(Ideal, CanonicalGenerator) {
  const auto z12 = RingDesc::finite(12);
  EXPECT_EQ(Ideal(z12, 8).generator(), 4);
  EXPECT_EQ(Ideal(z12, 0).generator(), 12);
  EXPECT_TRUE(Ideal(z12, 0).is_zero());
  EXPECT_EQ(Ideal(RingDesc::integers(), -6).generator(), 6);
}

TEST(Ideal, BadRing) {
  EXPECT_THROW(RingDesc::finite(1), Error);
  try {
    RingDesc::finite(0);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadRing);
  }
}

TEST(Ideal, LatticeOfZ6AndZ8) {
  const auto l6 = ideal_lattice(RingDesc::finite(6));
  ASSERT_EQ(l6.size(), 4u);
  EXPECT_EQ(l6.front().generator(), 1);
  EXPECT_EQ(l6.back().generator(), 6);
  const auto l8 = ideal_lattice(RingDesc::finite(8));
  std::vector<Integer> gens;
  for (const auto& i : l8) gens.push_back(i.generator());
  EXPECT_EQ(gens, (std::vector<Integer>{1, 2, 4, 8}));
  EXPECT_EQ(ideal_lattice(RingDesc::finite(7)).size(), 2u);
  EXPECT_THROW(ideal_lattice(RingDesc::integers()), Error);
}

TEST(Ideal, LatticeMatchesElementSets) {
  for (long n = 2; n <= 30; ++n) {
    const auto lat = ideal_lattice(RingDesc::finite(n));
    EXPECT_EQ(lat.size(), all_ideals(n).size()) << n;
  }
}

TEST(Ideal, SumAndIntersectionMatchSets) {
  for (long n = 2; n <= 24; ++n) {
    const auto r = RingDesc::finite(n);
    for (const auto& a : ideal_lattice(r))
      for (const auto& b : ideal_lattice(r)) {
        const long ga = a.generator().convert_to<long>();
        const long gb = b.generator().convert_to<long>();
        const auto sa = ideal_elements(n, ga), sb = ideal_elements(n, gb);
        EXPECT_EQ(ideal_elements(n, ideal_sum(a, b).generator().convert_to<long>()), set_sum(n, sa, sb));
        ElemSet inter;
        std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(inter, inter.end()));
        EXPECT_EQ(ideal_elements(n, ideal_intersection(a, b).generator().convert_to<long>()), inter);
      }
  }
}

// ===========================================================================
// Jacobson radical and small ideals
// ===========================================================================

TEST(Jacobson, Examples) {
  EXPECT_EQ(jacobson_radical_ring(RingDesc::finite(8)).generator(), 2);
  EXPECT_TRUE(jacobson_radical_ring(RingDesc::finite(6)).is_zero());
  EXPECT_TRUE(jacobson_radical_ring(RingDesc::integers()).is_zero());
}

TEST(Jacobson, IntersectionOfMaximalIdealsBruteForce) {
  for (long n = 2; n <= 40; ++n) {
    const auto ideals = all_ideals(n);
    const ElemSet whole = ideal_elements(n, 1);
    ElemSet meet = whole;
    for (const auto& m : ideals) {
      if (m == whole) continue;
      bool maximal = true;
      for (const auto& other : ideals)
        if (other != m && other != whole && subset(m, other)) maximal = false;
      if (!maximal) continue;
      ElemSet next;
      std::set_intersection(meet.begin(), meet.end(), m.begin(), m.end(), std::inserter(next, next.end()));
      meet = next;
    }
    EXPECT_EQ(ideal_elements(n, jacobson_radical_ring(RingDesc::finite(n)).generator().convert_to<long>()), meet)
        << n;
  }
}

TEST(SmallIdeal, KnownCases) {
  const auto z8 = RingDesc::finite(8);
  EXPECT_TRUE(is_small_ideal_in(Ideal(z8, 4), Ideal::unit(z8)));
  const auto z = RingDesc::integers();
  EXPECT_FALSE(is_small_ideal_in(Ideal(z, 6), Ideal::unit(z)));
  EXPECT_FALSE(is_small_ideal_in(Ideal(z, 4), Ideal::zero(z)));
  EXPECT_TRUE(is_small_ideal_in(Ideal::zero(z), Ideal(z, 2)));
  EXPECT_TRUE(is_small_ideal_in(Ideal::zero(z), Ideal::zero(z)));
}

TEST(SmallIdeal, BruteForceOverSubsets) {
  for (long n = 2; n <= 36; ++n) {
    const auto r = RingDesc::finite(n);
    for (const auto& a : ideal_lattice(r))
      for (const auto& i : ideal_lattice(r)) {
        const auto sa = ideal_elements(n, a.generator().convert_to<long>());
        const auto si = ideal_elements(n, i.generator().convert_to<long>());
        bool expect = subset(si, sa);
        if (expect)
          for (const auto& l : all_ideals(n))
            if (subset(l, sa) && l != sa && set_sum(n, si, l) == sa) expect = false;
        EXPECT_EQ(is_small_ideal_in(i, a), expect) << n << " " << to_string(i) << " in " << to_string(a);
      }
  }
}

TEST(SmallIdeal, SmallInRingIffInJacobson) {
  for (long n = 2; n <= 60; ++n) {
    const auto r = RingDesc::finite(n);
    const auto j = jacobson_radical_ring(r);
    for (const auto& i : ideal_lattice(r)) EXPECT_EQ(is_small_ideal_in(i, Ideal::unit(r)), j.contains(i));
  }
}

TEST(SmallIdeal, SemisimpleIffOnlyZeroSmall) {
  for (long n = 2; n <= 60; ++n) {
    const auto r = RingDesc::finite(n);
    int small = 0;
    for (const auto& i : ideal_lattice(r)) small += is_small_ideal_in(i, Ideal::unit(r)) ? 1 : 0;
    EXPECT_EQ(ring_predicates(r).is_semisimple, small == 1) << n;
  }
}

// ===========================================================================
// Radical of an ideal
// ===========================================================================

TEST(RadIdeal, Examples) {
  EXPECT_EQ(rad_ideal(Ideal(RingDesc::finite(8), 4)).generator(), 2);
  EXPECT_EQ(rad_ideal(Ideal::zero(RingDesc::finite(12))).generator(), 6);
  EXPECT_TRUE(rad_ideal(Ideal::unit(RingDesc::finite(9))).is_unit());
}

TEST(RadIdeal, PowerScan) {
  for (long n = 2; n <= 40; ++n) {
    const auto r = RingDesc::finite(n);
    for (const auto& i : ideal_lattice(r)) {
      const auto si = ideal_elements(n, i.generator().convert_to<long>());
      ElemSet rad;
      for (long x = 0; x < n; ++x) {
        long p = x % n;
        for (int k = 0; k <= 8; ++k, p = (p * x) % n)
          if (si.count(p)) {
            rad.insert(x);
            break;
          }
      }
      const auto got = rad_ideal(i);
      EXPECT_EQ(ideal_elements(n, got.generator().convert_to<long>()), rad);
      EXPECT_EQ(rad_ideal(got), got);
      EXPECT_TRUE(got.contains(i));
    }
  }
}

// ===========================================================================
// Ring predicates
// ===========================================================================

TEST(RingPredicates, Examples) {
  const auto p6 = ring_predicates(RingDesc::finite(6));
  EXPECT_TRUE(p6.is_semisimple);
  EXPECT_TRUE(p6.is_vnr);
  EXPECT_FALSE(p6.is_local);
  EXPECT_EQ(*p6.idempotents, (std::vector<Integer>{0, 1, 3, 4}));
  const auto p8 = ring_predicates(RingDesc::finite(8));
  EXPECT_TRUE(p8.is_local);
  EXPECT_FALSE(p8.is_semisimple);
  const auto pz = ring_predicates(RingDesc::integers());
  EXPECT_TRUE(pz.is_domain);
  EXPECT_FALSE(pz.is_semisimple);
  EXPECT_FALSE(pz.idempotents.has_value());
}

TEST(RingPredicates, VnrByDefinitionScan) {
  for (long n = 2; n <= 40; ++n) {
    bool vnr = true;
    for (long a = 0; a < n && vnr; ++a) {
      bool ok = false;
      for (long x = 0; x < n && !ok; ++x) ok = (a * x % n) * a % n == a;
      vnr = ok;
    }
    bool domain = true;
    for (long a = 1; a < n; ++a)
      for (long b = 1; b < n; ++b)
        if (a * b % n == 0) domain = false;
    const auto p = ring_predicates(RingDesc::finite(n));
    EXPECT_EQ(p.is_vnr, vnr) << n;
    EXPECT_EQ(p.is_domain, domain) << n;
    EXPECT_EQ(p.is_local, maximal_ideals(RingDesc::finite(n)).size() == 1) << n;
  }
}

TEST(RingPredicates, Printing) {
  EXPECT_EQ(to_string(Ideal(RingDesc::integers(), 4)), "4Z");
  EXPECT_EQ(to_string(Ideal(RingDesc::integers(), 1)), "Z");
  EXPECT_EQ(to_string(Ideal::zero(RingDesc::integers())), "0");
  EXPECT_EQ(to_string(Ideal(RingDesc::finite(8), 2)), "(2) mod 8");
}
