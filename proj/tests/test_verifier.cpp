#include <gtest/gtest.h>

#include <set>

#include "sasmall/verifier.hpp"

using namespace sasmall;

namespace {

CorpusConfig small_config() {
  CorpusConfig cfg;
  cfg.ring_moduli = {2, 3, 4, 6, 8};
  cfg.max_module_order = 32;
  cfg.z_bound = 12;
  cfg.max_tensor_order = 8;
  cfg.max_pair_order = 32;
  cfg.max_counterexamples = 5;
  return cfg;
}

const Corpus& small_corpus() {
  static const Corpus c = generate_corpus(small_config());
  return c;
}

bool has_item(const Corpus& c, const std::string& ring, const std::string& module) {
  for (const auto& it : c.items)
    if (it.ring_text == ring && it.module_text == module) return true;
  return false;
}

}  // namespace

TEST(Registry, SizeAndIds) {
  const auto& reg = registry();
  EXPECT_GE(reg.size(), 38U);
  std::set<std::string> ids;
  for (const auto& s : reg) {
    EXPECT_TRUE(ids.insert(s.id).second) << s.id;
    EXPECT_FALSE(s.claim.empty()) << s.id;
    EXPECT_TRUE(s.reading == "default" || s.reading == "strict" || s.reading == "-") << s.id;
  }
  for (const char* id : {"T2.3.i", "T2.3.ii", "T2.3.iii", "T2.5.i", "T2.5.ii", "T2.5.iii", "T2.5.iv", "L3.16",
                         "P2.6.v.J", "P2.6.viii", "Ex.converse-P2.6.vii", "Thm.flat.ii"})
    EXPECT_NO_THROW(lookup(id)) << id;
  EXPECT_NE(lookup("L3.16").claim.find("rad"), std::string::npos);
}

TEST(Registry, UnknownId) {
  try {
    lookup("no-such-statement");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownStatement);
  }
}

TEST(Corpus, ContentsAndOrder) {
  const Corpus& c = small_corpus();
  EXPECT_TRUE(has_item(c, "Z/4", "Z/2 x Z/4"));
  EXPECT_TRUE(has_item(c, "Z/2", "Z/2 x Z/2 x Z/2"));
  EXPECT_FALSE(has_item(c, "Z/4", "Z/8"));             // 8 does not divide 4
  EXPECT_FALSE(has_item(c, "Z/2", "Z/2 x Z/2 x Z/2 x Z/2"));  // rank above 3
  // Named instances are always present.
  EXPECT_TRUE(has_item(c, "Z", "Z/6"));
  EXPECT_TRUE(has_item(c, "Z", "Z/8"));
  EXPECT_TRUE(has_item(c, "Z/8", "Z/8"));
  EXPECT_TRUE(has_item(c, "Z", "Z"));
  EXPECT_TRUE(has_item(c, "Z", "presented:2Z x Z/8"));
  for (std::size_t i = 0; i < c.items.size(); ++i) EXPECT_EQ(c.items[i].id, i);
  for (const auto& it : c.items)
    if (it.enumerable) EXPECT_LE(it.module.order(), 32);
}

TEST(Corpus, Deterministic) {
  const Corpus a = generate_corpus(small_config());
  const Corpus b = generate_corpus(small_config());
  ASSERT_EQ(a.items.size(), b.items.size());
  for (std::size_t i = 0; i < a.items.size(); ++i) {
    EXPECT_EQ(a.items[i].ring_text, b.items[i].ring_text);
    EXPECT_EQ(a.items[i].module_text, b.items[i].module_text);
  }
}

TEST(Corpus, ChainCountOverZ4) {
  // Modules over Z/4 of order <= 32 and rank <= 3: chains of 2s and 4s.
  CorpusConfig cfg = small_config();
  cfg.ring_moduli = {4};
  cfg.include_Z = false;
  const Corpus c = generate_corpus(cfg);
  std::size_t over_z4 = 0;
  for (const auto& it : c.items) over_z4 += it.ring_text == "Z/4";
  // 2, 4, 2x2, 2x4, 4x4, 2x2x2, 2x2x4, 2x4x4 (16 x 2 = 32); 4x4x4 = 64 is out.
  EXPECT_EQ(over_z4, 8U);
}

TEST(Corpus, BadBounds) {
  CorpusConfig cfg = small_config();
  cfg.max_rank = 0;
  EXPECT_THROW(generate_corpus(cfg), Error);
}

TEST(Verifier, ImplicationVerified) {
  const Report r = run_statement(lookup("T2.3.i"), small_corpus());
  EXPECT_EQ(r.status, Status::verified_on_corpus);
  EXPECT_EQ(r.counterexample_count, 0U);
  EXPECT_GT(r.hypothesis_hits, 0U);
  EXPECT_EQ(r.holds, r.hypothesis_hits);
}

TEST(Verifier, ConverseFalsifiedWithWitness) {
  const Report r = run_statement(lookup("Ex.converse-P2.6.vii"), small_corpus());
  EXPECT_EQ(r.status, Status::falsified);
  ASSERT_TRUE(r.paper_witness_found.has_value());
  EXPECT_TRUE(*r.paper_witness_found);
  const json w = *lookup("Ex.converse-P2.6.vii").paper_witness;
  EXPECT_NE(std::find(r.counterexamples.begin(), r.counterexamples.end(), w), r.counterexamples.end());
  EXPECT_EQ(replay(lookup("Ex.converse-P2.6.vii"), w, small_config()), std::optional<bool>(false));
}

TEST(Verifier, CounterexampleCap) {
  const Report r = run_statement(lookup("P2.6.viii"), small_corpus());
  EXPECT_EQ(r.status, Status::falsified);
  EXPECT_GT(r.counterexample_count, 5U);
  EXPECT_EQ(r.counterexamples.size(), 5U);
}

TEST(Verifier, VacuousReported) {
  const Report r = run_statement(lookup("Thm.f-inverse-hollow"), small_corpus());
  EXPECT_EQ(r.hypothesis_hits, 0U);
  EXPECT_EQ(r.status, Status::vacuous);
  EXPECT_TRUE(r.expected_vacuous);
}

TEST(Verifier, ReplayReproducesCounterexamples) {
  for (const char* id : {"S.iii.as-stated", "t2.3.iv.as-stated", "Cor.local.as-stated", "Thm.NcapK.as-stated",
                         "P2.6.iv", "Thm.K+H.ii", "P2.6.viii", "Thm.composition.as-stated"}) {
    const Statement& s = lookup(id);
    const Report r = run_statement(s, small_corpus());
    ASSERT_EQ(r.status, Status::falsified) << id;
    for (const auto& inst : r.counterexamples) {
      const json round_trip = json::parse(inst.dump());
      EXPECT_EQ(replay(s, round_trip, small_config()), std::optional<bool>(false)) << id << " " << inst.dump();
    }
  }
}

TEST(Verifier, ReplayOfAbsentInstance) {
  json inst{{"ring", "Z/2"}, {"M", "Z/2"}, {"N", "<5>"}};
  EXPECT_FALSE(replay(lookup("Note.i"), inst, small_config()).has_value());
}

TEST(Verifier, MonotoneInCorpusBounds) {
  CorpusConfig big = small_config();
  big.max_module_order = 48;
  const Corpus larger = generate_corpus(big);
  for (const char* id : {"S.iii.as-stated", "t2.3.iv.as-stated", "Thm.NcapK.as-stated"}) {
    const Report a = run_statement(lookup(id), small_corpus());
    const Report b = run_statement(lookup(id), larger);
    EXPECT_EQ(a.status, Status::falsified) << id;
    EXPECT_EQ(b.status, Status::falsified) << id;
    EXPECT_GE(b.counterexample_count, a.counterexample_count) << id;
  }
}

TEST(Verifier, RunAllDeterministicAcrossJobs) {
  const auto one = reports_to_jsonl(run_all(small_corpus(), 1));
  const auto three = reports_to_jsonl(run_all(small_corpus(), 3));
  EXPECT_EQ(one, three);
  EXPECT_EQ(std::count(one.begin(), one.end(), '\n'), static_cast<long>(registry().size()));
  EXPECT_EQ(json::parse(one.substr(0, one.find('\n')))["schema"], 1);
}

TEST(Verifier, TableSummary) {
  std::vector<Report> rs{run_statement(lookup("M.i"), small_corpus())};
  const std::string t = reports_to_table(rs);
  EXPECT_NE(t.find("M.i"), std::string::npos);
  EXPECT_NE(t.find("1 statements: 1 verified, 0 falsified, 0 vacuous"), std::string::npos);
}

TEST(Examples, AllBlocksReproduce) {
  const auto blocks = reproduce_paper_examples();
  EXPECT_EQ(blocks.size(), 8U);
  for (const auto& b : blocks)
    for (const auto& c : b.checks) EXPECT_TRUE(c.ok) << b.name << ": " << c.assertion << " " << c.detail;
}

TEST(Space, ZLineMatchesPredicates) {
  ZLineSpace z(12);
  EXPECT_TRUE(z.sa(0));
  EXPECT_FALSE(z.sa(1));
  EXPECT_TRUE(z.tsa(8, 2, false));
  EXPECT_EQ(z.join(4, 6), 2);
  EXPECT_EQ(z.meet(4, 6), 12);
  EXPECT_EQ(z.colon(4, 6), 2);  // (4Z : 6Z) = 2Z
  EXPECT_EQ(z.text(8), "8Z");
  EXPECT_EQ(z.parse("8Z"), 8);
  EXPECT_TRUE(z.tsa_in(8, 4, 2, false) == z.tsa(4, 2, false));
}

TEST(Space, FiniteAgreesWithFreeFunctions) {
  const FGModule m = module_make(RingDesc::finite(Integer(4)), {Integer(2), Integer(4)});
  auto s = make_space(m, 12);
  for (auto n : s->subs()) {
    EXPECT_EQ(s->sa(n), is_sa_small(s->submodule(n)).holds());
    EXPECT_EQ(s->small(n), is_small(s->submodule(n)).holds());
    for (auto t : s->subs()) EXPECT_EQ(s->tsa(n, t, false), is_T_sa_small(s->submodule(n), s->submodule(t)).holds());
  }
}
