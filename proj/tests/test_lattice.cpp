#include <gtest/gtest.h>

#include <json.hpp>

#include "support/bridge.hpp"
#include "sasmall/lattice.hpp"

using namespace sasmall;
using bridge::make_module;
using bridge::sub;

namespace {

struct Shape {
  std::vector<long> factors;
  long ring_n;
};

const std::vector<Shape> kShapes = {
    {{2}, 0},    {{6}, 0},    {{8}, 8},    {{12}, 0},      {{2, 2}, 0},    {{2, 4}, 4}, {{3, 3}, 3},
    {{2, 6}, 0}, {{4, 4}, 0}, {{2, 2, 2}, 2}, {{2, 8}, 0}, {{2, 2, 4}, 0}, {{3, 9}, 9}, {{6, 6}, 6},
};

}  // namespace

// ===========================================================================
// Bitset
// ===========================================================================

TEST(Bitset, FirstLastAndCommon) {
  Bitset a(130), b(130);
  EXPECT_EQ(a.first(), 130u);
  a.set(3);
  a.set(70);
  a.set(129);
  b.set(70);
  b.set(129);
  EXPECT_EQ(a.first(), 3u);
  EXPECT_EQ(a.last(), 129u);
  EXPECT_EQ(a.first_common(b), 70u);
  EXPECT_EQ(a.last_common(b), 129u);
  EXPECT_TRUE(b.subset_of(a));
  EXPECT_FALSE(a.subset_of(b));
  EXPECT_EQ(a.count(), 3u);
  EXPECT_EQ(a.indices(), (std::vector<std::size_t>{3, 70, 129}));
  a.subtract(b);
  EXPECT_EQ(a.indices(), (std::vector<std::size_t>{3}));
  Bitset c(70);
  c.set_all();
  EXPECT_EQ(c.count(), 70u);
}

// ===========================================================================
// Enumeration against the element-set oracle
// ===========================================================================

TEST(Lattice, KnownCounts) {
  EXPECT_EQ(SubmoduleLattice(make_module({6}, 0)).size(), 4u);
  EXPECT_EQ(SubmoduleLattice(make_module({8}, 8)).size(), 4u);
  EXPECT_EQ(SubmoduleLattice(make_module({2, 2}, 0)).size(), 5u);
  for (long p : {2L, 3L, 5L, 7L}) EXPECT_EQ(SubmoduleLattice(make_module({p, p}, p)).size(), static_cast<std::size_t>(p + 3)) << p;
}

TEST(Lattice, Z8IsAChain) {
  const auto m = make_module({8}, 8);
  SubmoduleLattice l(m);
  ASSERT_EQ(l.size(), 4u);
  EXPECT_TRUE(l.at(0).is_zero());
  EXPECT_EQ(l.at(1), sub(m, {{4}}));
  EXPECT_EQ(l.at(2), sub(m, {{2}}));
  EXPECT_TRUE(l.at(3).is_full());
  for (std::size_t i = 0; i + 1 < 4; ++i) EXPECT_EQ(l.covers(i), std::vector<std::size_t>{i + 1});
}

TEST(Lattice, MatchesOracleSubgroups) {
  for (const auto& s : kShapes) {
    const auto m = make_module(s.factors, s.ring_n);
    const oracle::Group g(s.factors);
    const auto subs = oracle::all_subgroups(g);
    SubmoduleLattice l(m);
    ASSERT_EQ(l.size(), subs.size());
    for (const auto& set : subs) {
      const Submodule n = bridge::to_sub(m, g, set);
      const std::size_t i = l.index_of(n);
      EXPECT_EQ(l.order_of(i), oracle::size(set));
      EXPECT_EQ(l.exponent_of(i), oracle::ann_gen(g, set));
    }
    EXPECT_EQ(l.element_count(), g.order);
    EXPECT_EQ(l.exponent(), g.exponent());
  }
}

TEST(Lattice, CanonicalOrder) {
  for (const auto& s : kShapes) {
    SubmoduleLattice l(make_module(s.factors, s.ring_n));
    EXPECT_TRUE(l.at(l.zero()).is_zero());
    EXPECT_TRUE(l.at(l.top()).is_full());
    for (std::size_t i = 0; i + 1 < l.size(); ++i) EXPECT_LE(l.order_of(i), l.order_of(i + 1));
  }
}

TEST(Lattice, JoinMeetOrderAgreeWithSubmoduleArithmetic) {
  for (const auto& s : kShapes) {
    SubmoduleLattice l(make_module(s.factors, s.ring_n));
    for (std::size_t a = 0; a < l.size(); ++a)
      for (std::size_t b = 0; b < l.size(); ++b) {
        EXPECT_EQ(l.at(l.join(a, b)), sub_sum(l.at(a), l.at(b)));
        EXPECT_EQ(l.at(l.meet(a, b)), sub_intersect(l.at(a), l.at(b)));
        EXPECT_EQ(l.leq(a, b), sub_contains(l.at(b), l.at(a)));
      }
  }
}

TEST(Lattice, ColonScaleAndKilledBy) {
  for (const auto& s : kShapes) {
    const auto m = make_module(s.factors, s.ring_n);
    const oracle::Group g(s.factors);
    SubmoduleLattice l(m);
    for (std::size_t a = 0; a < l.size(); ++a) {
      for (std::int64_t r : {0, 1, 2, 3, 4, 6}) EXPECT_EQ(l.at(l.scaled(a, r)), sub_scale(l.at(a), r));
      for (std::size_t b = 0; b < l.size(); ++b) {
        const Integer expect = colon(l.at(a), l.at(b)).generator();
        const std::int64_t got = l.colon_exponent(a, b);
        EXPECT_EQ(Ideal(m.ring(), got), Ideal(m.ring(), expect));
      }
    }
    for (std::int64_t d : {1, 2, 3, 4, 6, 8}) {
      const auto killed = l.at(l.killed_by(d));
      EXPECT_TRUE(sub_scale(killed, d).is_zero());
      // Every element killed by d lies in it.
      for (std::int64_t e = 0; e < l.element_count(); ++e) {
        const Element x = l.element_at(e);
        if (reduce_element(m, Element(x * Integer(d))).isZero()) EXPECT_TRUE(sub_membership(killed, x));
      }
    }
  }
}

TEST(Lattice, ElementIndexRoundTrip) {
  SubmoduleLattice l(make_module({2, 6}, 0));
  for (std::int64_t e = 0; e < l.element_count(); ++e) {
    EXPECT_EQ(l.element_index(l.element_at(e)), e);
    EXPECT_TRUE(l.elements(l.cyclic(e)).test(static_cast<std::size_t>(e)));
  }
}

TEST(Lattice, CoversAreHasseEdges) {
  for (const auto& s : kShapes) {
    SubmoduleLattice l(make_module(s.factors, s.ring_n));
    for (std::size_t a = 0; a < l.size(); ++a)
      for (std::size_t b = 0; b < l.size(); ++b) {
        bool is_cover = a != b && l.leq(a, b);
        for (std::size_t c = 0; c < l.size() && is_cover; ++c)
          if (c != a && c != b && l.leq(a, c) && l.leq(c, b)) is_cover = false;
        const auto cov = l.covers(a);
        EXPECT_EQ(is_cover, std::find(cov.begin(), cov.end(), b) != cov.end());
      }
  }
}

TEST(Lattice, ZeroModule) {
  SubmoduleLattice l(module_make(RingDesc::integers(), {}));
  EXPECT_EQ(l.size(), 1u);
  EXPECT_EQ(l.top(), 0u);
}

TEST(Lattice, Errors) {
  try {
    SubmoduleLattice l(z_line());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InfiniteLattice);
  }
  try {
    SubmoduleLattice l(make_module({4096, 2}, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
  }
  LatticeOptions tight;
  tight.max_submodules = 3;
  try {
    SubmoduleLattice l(make_module({2, 2}, 0), tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
  }
}

// ===========================================================================
// Export
// ===========================================================================

TEST(LatticeExport, DotAndJson) {
  SubmoduleLattice l(make_module({6}, 0));
  const std::string dot = lattice_to_dot(l);
  EXPECT_NE(dot.find("digraph lattice {"), std::string::npos);
  EXPECT_NE(dot.find("<2>"), std::string::npos);
  const auto j = nlohmann::json::parse(lattice_to_json(l));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["submodules"].size(), 4u);
  EXPECT_EQ(j["covers"].size(), 4u);
  EXPECT_EQ(lattice_to_json(l), lattice_to_json(SubmoduleLattice(make_module({6}, 0))));
}
