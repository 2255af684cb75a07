#include <gtest/gtest.h>

#include "oracle/brute.hpp"
#include "sasmall/module.hpp"

using namespace sasmall;

namespace {

Element elem(std::initializer_list<long> v) {
  Element e(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (long x : v) e(i++) = x;
  return e;
}

Element elem_of(const oracle::Group& g, long idx) {
  const auto v = g.decode(idx);
  Element e(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) e(static_cast<Eigen::Index>(i)) = v[i];
  return e;
}

Submodule to_sub(const FGModule& m, const oracle::Group& g, const oracle::Set& s) {
  std::vector<Element> gens;
  for (long x : oracle::members(s)) gens.push_back(elem_of(g, x));
  return submodule_from_generators(m, gens);
}

std::vector<Integer> ints(const std::vector<long>& v) { return {v.begin(), v.end()}; }

const std::vector<std::vector<long>> kSmallShapes = {
    {2}, {6}, {8}, {12}, {2, 2}, {2, 4}, {3, 3}, {2, 6}, {4, 4}, {2, 2, 2}, {2, 8}, {2, 2, 4}, {6, 6}, {3, 9},
};

}  // namespace

// ===========================================================================
// Construction
// ===========================================================================

TEST(ModuleMake, Backends) {
  const auto z = RingDesc::integers();
  const auto z6 = module_make(z, {6});
  EXPECT_TRUE(z6.is_finite());
  EXPECT_EQ(z6.invariant_factors(), (std::vector<Integer>{6}));
  EXPECT_EQ(z6.order(), 6);
  EXPECT_TRUE(z_line().is_z_line());
  const auto p = module_from_relations(z, [] {
    IntMatrix r(1, 2);
    r << 0, 8;
    return r;
  }(), {2, 1});
  EXPECT_EQ(p.backend(), ModuleBackend::z_presented);
  EXPECT_EQ(p.order(), 0);
}

TEST(ModuleMake, SmithRepairsNonChain) {
  const auto m = module_make(RingDesc::integers(), {2, 3});
  EXPECT_EQ(m.invariant_factors(), (std::vector<Integer>{6}));
  const auto m2 = module_make(RingDesc::integers(), {4, 6});
  EXPECT_EQ(m2.invariant_factors(), (std::vector<Integer>{2, 12}));
}

TEST(ModuleMake, BadFactors) {
  const auto z8 = RingDesc::finite(8);
  EXPECT_THROW(module_make(z8, {3}), Error);
  EXPECT_THROW(module_make(z8, {0}), Error);
  EXPECT_THROW(module_make(RingDesc::integers(), {-2}), Error);
  try {
    module_make(z8, {6});
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadFactors);
  }
}

TEST(ModuleMake, ZeroModule) {
  const auto m = module_make(RingDesc::finite(6), {});
  EXPECT_TRUE(m.is_zero());
  EXPECT_EQ(m.order(), 1);
  EXPECT_TRUE(zero_submodule(m).is_full());
}

// ===========================================================================
// Submodule arithmetic
// ===========================================================================

TEST(Submodule, ExampleZ6) {
  const auto m = module_make(RingDesc::integers(), {6});
  const auto n = submodule_from_generators(m, {elem({2})});
  const auto l = submodule_from_generators(m, {elem({3})});
  EXPECT_EQ(n.order(), 3);
  EXPECT_TRUE(sub_sum(n, l).is_full());
  EXPECT_TRUE(sub_intersect(n, l).is_zero());
  EXPECT_EQ(annihilator(n).generator(), 3);
  EXPECT_EQ(annihilator(l).generator(), 2);
  EXPECT_EQ(to_string(n), "<2>");
}

TEST(Submodule, ZLineGcdLcm) {
  const auto m = z_line();
  const auto a = z_line_submodule(m, 2), b = z_line_submodule(m, 3);
  EXPECT_TRUE(sub_sum(a, b).is_full());
  EXPECT_EQ(sub_intersect(a, b).z_generator(), 6);
  EXPECT_EQ(to_string(z_line_submodule(m, 8)), "8Z");
  EXPECT_EQ(to_string(z_line_submodule(m, -1)), "Z");
  EXPECT_EQ(to_string(submodule_from_generators(m, {})), "0");
}

TEST(Submodule, EmptyGeneratorsGiveZero) {
  const auto m = module_make(RingDesc::finite(8), {2, 8});
  EXPECT_TRUE(submodule_from_generators(m, {}).is_zero());
}

TEST(Submodule, ColonClosedForms) {
  const auto m = z_line();
  EXPECT_EQ(colon(z_line_submodule(m, 2), full_submodule(m)).generator(), 2);
  EXPECT_EQ(colon(z_line_submodule(m, 12), z_line_submodule(m, 8)).generator(), 3);
  EXPECT_TRUE(colon(zero_submodule(m), z_line_submodule(m, 4)).is_zero());
  EXPECT_TRUE(colon(z_line_submodule(m, 4), zero_submodule(m)).is_unit());
  EXPECT_TRUE(annihilator(zero_submodule(m)).is_unit());
  EXPECT_TRUE(annihilator(z_line_submodule(m, 5)).is_zero());
}

TEST(Submodule, PresentedWitnessArithmetic) {
  // 2Z x Z/8 with the first coordinate stored halved.
  IntMatrix r(1, 2);
  r << 0, 8;
  const auto m = module_from_relations(RingDesc::integers(), r, {2, 1});
  const auto x = submodule_from_generators(m, {element_from_user(m, {0, 2})});
  const auto t = submodule_from_generators(m, {element_from_user(m, {0, 4})});
  EXPECT_EQ(annihilator(x).generator(), 4);
  EXPECT_TRUE(colon(t, full_submodule(m)).is_zero());
  EXPECT_TRUE(sub_contains(x, t));
  EXPECT_THROW(element_from_user(m, {1, 0}), Error);
  EXPECT_EQ(to_string(m), "presented:2Z x Z/8");
  EXPECT_EQ(to_string(x), "<(0,2)>");
}

TEST(Submodule, ModularLawOnSmallModules) {
  for (const auto& shape : kSmallShapes) {
    const oracle::Module om(shape, 0);
    if (om.subs.size() > 40) continue;
    const auto m = module_make(RingDesc::integers(), ints(shape));
    std::vector<Submodule> subs;
    for (const auto& s : om.subs) subs.push_back(to_sub(m, om.g, s));
    for (const auto& n : subs)
      for (const auto& k : subs) {
        if (!sub_contains(k, n)) continue;
        for (const auto& l : subs) EXPECT_EQ(sub_intersect(sub_sum(n, l), k), sub_sum(n, sub_intersect(l, k)));
      }
  }
}

// ===========================================================================
// Cross-checks against explicit element sets
// ===========================================================================

TEST(Submodule, CanonicalFormSoundness) {
  for (const auto& shape : kSmallShapes) {
    const oracle::Module om(shape, 0);
    const auto m = module_make(RingDesc::integers(), ints(shape));
    std::vector<Submodule> subs;
    for (const auto& s : om.subs) {
      const auto sub = to_sub(m, om.g, s);
      EXPECT_EQ(sub.order(), oracle::size(s));
      for (long x = 0; x < om.g.order; ++x) EXPECT_EQ(sub_membership(sub, elem_of(om.g, x)), s[static_cast<std::size_t>(x)] != 0);
      // Re-canonicalizing from the printed generators is the identity.
      EXPECT_EQ(submodule_from_generators(m, sub.generators()), sub);
      subs.push_back(sub);
    }
    for (std::size_t i = 0; i < subs.size(); ++i)
      for (std::size_t j = 0; j < subs.size(); ++j) EXPECT_EQ(subs[i] == subs[j], i == j);
  }
}

TEST(Submodule, AnnihilatorAndColonAgreeWithScan) {
  for (long n : {0L, 12L, 24L}) {
    for (const auto& shape : kSmallShapes) {
      if (n != 0 && std::any_of(shape.begin(), shape.end(), [n](long f) { return n % f != 0; })) continue;
      const oracle::Module om(shape, n);
      const auto ring = n == 0 ? RingDesc::integers() : RingDesc::finite(n);
      const auto m = module_make(ring, ints(shape));
      std::vector<Submodule> subs;
      for (const auto& s : om.subs) subs.push_back(to_sub(m, om.g, s));
      for (std::size_t i = 0; i < subs.size(); ++i) {
        EXPECT_EQ(annihilator(subs[i]).generator(), om.ann(om.subs[i]));
        for (std::size_t j = 0; j < subs.size(); ++j)
          EXPECT_EQ(colon(subs[i], subs[j]).generator(), om.colon(om.subs[i], om.subs[j]));
      }
    }
  }
}

TEST(Submodule, AnnihilatorInAndIdealTimes) {
  const auto m = module_make(RingDesc::finite(8), {2, 8});
  const oracle::Group g({2, 8});
  for (const auto& i : ideal_lattice(m.ring())) {
    const long d = i.generator().convert_to<long>();
    const auto ann = annihilator_in(m, i);
    const auto im = ideal_times(i, m);
    for (long x = 0; x < g.order; ++x) {
      EXPECT_EQ(sub_membership(ann, elem_of(g, x)), g.mul(d, x) == 0);
      bool in_im = false;
      for (long y = 0; y < g.order; ++y) in_im = in_im || g.mul(d, y) == x;
      EXPECT_EQ(sub_membership(im, elem_of(g, x)), in_im);
    }
  }
}

TEST(ZLineCandidates, SpecCases) {
  const auto m = z_line();
  auto gens = [](const std::vector<Submodule>& v) {
    std::vector<Integer> out;
    for (const auto& s : v) out.push_back(s.z_generator());
    return out;
  };
  EXPECT_EQ(gens(z_line_divisor_candidates(z_line_submodule(m, 8), z_line_submodule(m, 2))),
            (std::vector<Integer>{1, 2, 4, 8, 0}));
  EXPECT_EQ(gens(z_line_divisor_candidates(zero_submodule(m), z_line_submodule(m, 2))),
            (std::vector<Integer>{1, 2, 0}));
  EXPECT_EQ(gens(z_line_divisor_candidates(zero_submodule(m), full_submodule(m))), (std::vector<Integer>{1, 0}));
  try {
    z_line_divisor_candidates(zero_submodule(m), zero_submodule(m));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroT);
  }
}
