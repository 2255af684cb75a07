#include "sasmall/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <sstream>
#include <thread>

#include "sasmall/syntax.hpp"
#include "verifier_detail.hpp"

namespace sasmall {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::verified_on_corpus: return "verified_on_corpus";
    case Status::falsified: return "falsified";
    case Status::vacuous: return "vacuous";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Corpus

namespace {

using Chain = std::vector<std::int64_t>;

// Chains d1 | d2 | ... | dk, each di >= 2, di <= max_last, product <= max_order.
void chains(Chain& cur, std::int64_t prod, std::int64_t max_last, std::int64_t max_order, int max_rank,
            std::vector<Chain>& out) {
  if (!cur.empty()) out.push_back(cur);
  if (static_cast<int>(cur.size()) == max_rank) return;
  const std::int64_t start = cur.empty() ? 2 : cur.back();
  for (std::int64_t d = start; d <= max_last && prod * d <= max_order; d += cur.empty() ? 1 : cur.back()) {
    cur.push_back(d);
    chains(cur, prod * d, max_last, max_order, max_rank, out);
    cur.pop_back();
  }
}

CorpusItem make_item(const FGModule& m, const CorpusConfig& cfg, bool named) {
  CorpusItem it;
  it.module = m;
  it.ring_text = to_string(m.ring());
  it.module_text = to_string(m);
  it.named = named;
  it.enumerable = m.is_finite() && m.order() <= cfg.max_module_order;
  if (it.enumerable) it.lattice = enumerate_submodules(m, cfg.lattice);
  return it;
}

std::vector<Integer> to_integers(const Chain& c) { return {c.begin(), c.end()}; }

}  // namespace

Corpus generate_corpus(const CorpusConfig& cfg) {
  if (cfg.max_module_order < 1 || cfg.max_rank < 1 || cfg.z_bound < 1)
    fail(ErrorKind::BoundExceeded, "corpus bounds must be positive");
  Corpus c;
  c.cfg = cfg;
  std::vector<std::int64_t> moduli = cfg.ring_moduli;
  std::sort(moduli.begin(), moduli.end());
  moduli.erase(std::unique(moduli.begin(), moduli.end()), moduli.end());
  for (auto n : moduli) c.rings.push_back(RingDesc::finite(Integer(n)));
  if (cfg.include_Z) c.rings.push_back(RingDesc::integers());

  auto add_chains = [&](const RingDesc& r, std::int64_t max_last, bool must_divide) {
    std::vector<Chain> all;
    Chain cur;
    chains(cur, 1, max_last, cfg.max_module_order, cfg.max_rank, all);
    std::vector<std::pair<std::int64_t, Chain>> keyed;
    for (auto& ch : all) {
      if (must_divide && max_last % ch.back() != 0) continue;
      std::int64_t order = 1;
      for (auto d : ch) order *= d;
      keyed.emplace_back(order, ch);
    }
    std::sort(keyed.begin(), keyed.end());
    for (const auto& [order, ch] : keyed) c.items.push_back(make_item(module_make(r, to_integers(ch)), cfg, false));
  };

  const std::int64_t max_n = moduli.empty() ? 1 : moduli.back();
  for (const auto& r : c.rings) {
    if (r.is_finite()) {
      add_chains(r, to_i64(r.modulus()), true);
    } else {
      add_chains(r, max_n, false);
      c.items.push_back(make_item(z_line(), cfg, true));
    }
  }

  // Named instances from the worked examples, added when the bounds left them out.
  const RingDesc z = RingDesc::integers(), z8 = RingDesc::finite(Integer(8));
  const std::vector<FGModule> named{module_make(z, {Integer(6)}), module_make(z, {Integer(8)}),
                                    module_make(z8, {Integer(8)}), z_line(),
                                    parse_module(z, "presented:2Z x Z/8")};
  for (const auto& m : named) {
    auto hit = std::find_if(c.items.begin(), c.items.end(), [&](const CorpusItem& it) { return it.module == m; });
    if (hit != c.items.end()) {
      hit->named = true;
      continue;
    }
    if (std::find(c.rings.begin(), c.rings.end(), m.ring()) == c.rings.end()) c.rings.push_back(m.ring());
    c.items.push_back(make_item(m, cfg, true));
  }
  for (std::size_t i = 0; i < c.items.size(); ++i) c.items[i].id = i;
  return c;
}

Corpus corpus_for_instance(const json& instance, const CorpusConfig& cfg) {
  Corpus c;
  c.cfg = cfg;
  const RingDesc r = parse_ring(instance.at("ring").get<std::string>());
  c.rings.push_back(r);
  for (const char* key : {"M", "M1", "M2", "P"}) {
    if (!instance.contains(key)) continue;
    const FGModule m = parse_module(r, instance.at(key).get<std::string>());
    const bool dup =
        std::any_of(c.items.begin(), c.items.end(), [&](const CorpusItem& it) { return it.module == m; });
    if (!dup) c.items.push_back(make_item(m, cfg, false));
  }
  for (std::size_t i = 0; i < c.items.size(); ++i) c.items[i].id = i;
  return c;
}

// ---------------------------------------------------------------------------
// Workspace

Space& Workspace::item(const CorpusItem& it) {
  if (!it.lattice) return module(it.module);
  auto& slot = spaces_[module_key(it.module)];
  if (!slot) slot = std::make_unique<FiniteSpace>(std::make_shared<FiniteAnalysis>(it.lattice));
  return *slot;
}

Space& Workspace::module(const FGModule& m) {
  auto& slot = spaces_[m.is_z_line() ? std::string("z_line") : module_key(m)];
  if (!slot) slot = make_space(m, cfg_.z_bound, cfg_.lattice);
  return *slot;
}

Space& Workspace::ring(const RingDesc& r) {
  return r.is_integers() ? module(z_line()) : module(module_make(r, {r.modulus()}));
}

const RingPredicates& Workspace::ring_info(const RingDesc& r) {
  const std::string key = to_string(r);
  auto it = rings_.find(key);
  if (it == rings_.end()) it = rings_.emplace(key, ring_predicates(r)).first;
  return it->second;
}

namespace detail {

QuotientView quotient_view(Workspace& w, Space& s, Sub k) {
  const Quotient q = quotient_module(s.module(), s.submodule(k));
  QuotientView v;
  v.q = &w.module(q.module);
  for (Sub n : s.above(k)) v.image.emplace(n, v.q->handle(push(q.projection, s.submodule(n))));
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Running

void Recorder::check(bool conclusion, const SlotFn& slots) {
  ++report_.instances;
  ++report_.hypothesis_hits;
  if (replay_target_) {
    if (!replay_result_ && slots() == *replay_target_) replay_result_ = conclusion;
    return;
  }
  if (conclusion) {
    ++report_.holds;
    return;
  }
  ++report_.counterexample_count;
  const bool room = report_.counterexamples.size() < cfg_->max_counterexamples;
  if (!room && !paper_witness_) return;
  json inst = slots();
  const bool is_witness = paper_witness_ && inst == *paper_witness_;
  if (is_witness) report_.paper_witness_found = true;
  if (room || is_witness) report_.counterexamples.push_back(std::move(inst));
}

const std::vector<Statement>& registry() {
  static const std::vector<Statement> r = [] {
    std::vector<Statement> out;
    detail::register_statements(out);
    return out;
  }();
  return r;
}

const Statement& lookup(const std::string& id) {
  for (const auto& s : registry())
    if (s.id == id) return s;
  fail(ErrorKind::UnknownStatement, "no statement with id '" + id + "'");
}

Report run_statement_in(const Statement& s, const Corpus& c, Workspace& w) {
  Recorder rec;
  rec.work_ = &w;
  rec.cfg_ = &c.cfg;
  rec.paper_witness_ = s.paper_witness;
  Report& r = rec.report_;
  r.id = s.id;
  r.claim = s.claim;
  r.reading = s.reading;
  r.expected_vacuous = s.expected_vacuous;
  r.expected_falsified = s.expected_falsified;
  if (s.paper_witness) r.paper_witness_found = false;
  s.run(c, rec);
  if (r.counterexample_count > 0)
    r.status = Status::falsified;
  else if (r.hypothesis_hits == 0)
    r.status = Status::vacuous;
  else
    r.status = Status::verified_on_corpus;
  return std::move(rec.report_);
}

Report run_statement(const Statement& s, const Corpus& c) {
  Workspace w(c.cfg);
  return run_statement_in(s, c, w);
}

std::vector<Report> run_all(const Corpus& c, int jobs) {
  const auto& reg = registry();
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min<int>(jobs, static_cast<int>(reg.size()));
  std::vector<Report> out(reg.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  auto worker = [&](std::size_t slot) {
    try {
      Workspace w(c.cfg);
      for (std::size_t i = next++; i < reg.size(); i = next++) out[i] = run_statement_in(reg[i], c, w);
    } catch (...) {
      errors[slot] = std::current_exception();
      next = reg.size();
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker, static_cast<std::size_t>(j));
  worker(0);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::optional<bool> replay(const Statement& s, const json& instance, const CorpusConfig& cfg) {
  const Corpus c = corpus_for_instance(instance, cfg);
  Workspace w(c.cfg);
  Recorder rec;
  rec.work_ = &w;
  rec.cfg_ = &c.cfg;
  rec.replay_target_ = instance;
  s.run(c, rec);
  return rec.replay_result_;
}

// ---------------------------------------------------------------------------
// Output

json report_to_json(const Report& r) {
  json j;
  j["schema"] = 1;
  j["id"] = r.id;
  j["claim"] = r.claim;
  j["reading"] = r.reading;
  j["status"] = std::string(to_string(r.status));
  j["expected_vacuous"] = r.expected_vacuous;
  j["expected_falsified"] = r.expected_falsified;
  j["instances_checked"] = r.instances;
  j["hypothesis_hits"] = r.hypothesis_hits;
  j["holds_count"] = r.holds;
  j["counterexample_count"] = r.counterexample_count;
  j["skipped"] = r.skipped;
  if (r.paper_witness_found) j["paper_witness_found"] = *r.paper_witness_found;
  j["counterexamples"] = r.counterexamples;
  return j;
}

std::string reports_to_jsonl(const std::vector<Report>& rs) {
  std::string out;
  for (const auto& r : rs) out += report_to_json(r).dump() + "\n";
  return out;
}

std::string reports_to_table(const std::vector<Report>& rs) {
  std::ostringstream os;
  os << std::left << std::setw(30) << "id" << std::setw(9) << "reading" << std::setw(20) << "status" << std::right
     << std::setw(12) << "instances" << std::setw(12) << "hyp.hits" << std::setw(8) << "cex" << "  note\n";
  std::size_t verified = 0, falsified = 0, vacuous = 0;
  for (const auto& r : rs) {
    std::string note;
    if (r.expected_falsified) note = "expected falsified";
    if (r.expected_vacuous) note = "expected vacuous";
    if (r.paper_witness_found) note += *r.paper_witness_found ? "; witness found" : "; witness missing";
    os << std::left << std::setw(30) << r.id << std::setw(9) << r.reading << std::setw(20) << to_string(r.status)
       << std::right << std::setw(12) << r.instances << std::setw(12) << r.hypothesis_hits << std::setw(8)
       << r.counterexample_count << "  " << note << "\n";
    verified += r.status == Status::verified_on_corpus;
    falsified += r.status == Status::falsified;
    vacuous += r.status == Status::vacuous;
  }
  os << rs.size() << " statements: " << verified << " verified, " << falsified << " falsified, " << vacuous
     << " vacuous\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Worked examples

bool ExampleBlock::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ExampleCheck& c) { return c.ok; });
}

namespace {

class BlockBuilder {
 public:
  explicit BlockBuilder(std::string name) { b_.name = std::move(name); }

  template <class F>
  void check(const std::string& assertion, F&& f) {
    ExampleCheck c;
    c.block = b_.name;
    c.assertion = assertion;
    try {
      c.ok = f();
      if (!c.ok) c.detail = "assertion is false";
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = e.what();
    }
    b_.checks.push_back(std::move(c));
  }

  ExampleBlock done() { return std::move(b_); }

 private:
  ExampleBlock b_;
};

}  // namespace

std::vector<ExampleBlock> reproduce_paper_examples() {
  std::vector<ExampleBlock> out;
  const RingDesc z = RingDesc::integers();
  auto zi = [&](std::int64_t g) { return Ideal(z, Integer(g)); };
  const FGModule line = z_line();
  auto kz = [&](std::int64_t k) { return z_line_submodule(line, Integer(k)); };

  {
    BlockBuilder b("Example (i): Z/6 over Z");
    const FGModule m = parse_module(z, "Z/6");
    const Submodule n = parse_submodule(m, "<2>"), l = parse_submodule(m, "<3>");
    b.check("S(M) = {0}", [&] {
      const auto s = small_set(m);
      return s.size() == 1 && s.front().is_zero();
    });
    b.check("S^sa(M) is empty", [&] { return sa_small_set(m).empty(); });
    b.check("Ann(<2>) = 3Z", [&] { return annihilator(n) == zi(3); });
    b.check("Ann(<3>) = 2Z", [&] { return annihilator(l) == zi(2); });
    b.check("<2> + <3> = M", [&] { return sub_sum(n, l).is_full(); });
    out.push_back(b.done());
  }
  {
    BlockBuilder b("Example (ii): Z over Z");
    b.check("kZ sa-small iff k != 1, for k = 0..24", [&] {
      for (std::int64_t k = 0; k <= 24; ++k)
        if (is_sa_small(kz(k)).holds() != (k != 1)) return false;
      return true;
    });
    b.check("kZ small iff k = 0, for k = 0..24", [&] {
      for (std::int64_t k = 0; k <= 24; ++k)
        if (is_small(kz(k)).holds() != (k == 0)) return false;
      return true;
    });
    out.push_back(b.done());
  }
  {
    BlockBuilder b("Example (iii): 2Z x Z/8 over Z");
    const FGModule m = parse_module(z, "presented:2Z x Z/8");
    const Submodule n = parse_submodule(m, "<(0,0)>");
    const Submodule t = parse_submodule(m, "<(0,4)>");
    const Submodule x = parse_submodule(m, "<(0,2)>");
    b.check("0 is sa-small", [&] { return is_sa_small(n).holds(); });
    b.check("X = <(0,2)> refutes 0 being <(0,4)>-sa-small",
            [&] { return refute_or_confirm_T_sa_small_with_witness(n, t, x).fails(); });
    b.check("Ann(<(0,2)>) = 4Z", [&] { return annihilator(x) == zi(4); });
    b.check("(<(0,4)> : M) = 0", [&] { return colon(t, full_submodule(m)) == zi(0); });
    out.push_back(b.done());
  }
  {
    BlockBuilder b("Example (iv): 0 is 2Z-sa-small in Z");
    b.check("0 <<_2Z Z", [&] { return is_T_sa_small(kz(0), kz(2)).holds(); });
    b.check("0 is small in 2Z", [&] { return is_small_ideal_in(zi(0), zi(2)); });
    out.push_back(b.done());
  }
  const Hom pi = quotient_map(line, kz(8));
  const FGModule z8 = pi.target();
  {
    BlockBuilder b("Example (iv): images under Z -> Z/8");
    const Submodule p0 = push(pi, kz(0)), p2 = push(pi, kz(2));
    b.check("pi(0) = 0", [&] { return p0.is_zero(); });
    b.check("pi(2Z) = <2>", [&] { return p2 == parse_submodule(z8, "<2>"); });
    b.check("pi(0) is not pi(2Z)-sa-small", [&] { return is_T_sa_small(p0, p2).fails(); });
    b.check("X = Z/8 refutes it", [&] {
      return refute_or_confirm_T_sa_small_with_witness(p0, p2, full_submodule(z8)).fails();
    });
    b.check("Ann(Z/8) = 8Z", [&] { return module_annihilator(z8) == zi(8); });
    b.check("(<2> : Z/8) = 2Z", [&] { return colon(p2, full_submodule(z8)) == zi(2); });
    b.check("8Z is not small in 2Z", [&] { return !is_small_ideal_in(zi(8), zi(2)); });
    out.push_back(b.done());
  }
  {
    BlockBuilder b("Final example: 8Z is 2Z-sa-small in Z");
    b.check("8Z <<_2Z Z", [&] { return is_T_sa_small(kz(8), kz(2)).holds(); });
    b.check("Ker(Z -> Z/8) = 8Z", [&] { return kernel(pi) == kz(8); });
    b.check("Z -> Z/8 is a 2Z-sa-small epimorphism", [&] { return is_T_sa_small_epi(pi, kz(2)).holds(); });
    out.push_back(b.done());
  }
  {
    BlockBuilder b("Final example: 4Z/8Z in Z/8Z");
    const Quotient q = quotient_module(line, kz(8));
    const Submodule k = push(q.projection, kz(4)), t = push(q.projection, kz(2));
    const Submodule x2 = push(q.projection, kz(2)), x1 = full_submodule(q.module);
    b.check("4Z/8Z is not 2Z/8Z-sa-small", [&] { return is_T_sa_small(k, t).fails(); });
    b.check("k = 2 refutes it", [&] { return refute_or_confirm_T_sa_small_with_witness(k, t, x2).fails(); });
    b.check("Ann(2Z/8Z) = 4Z", [&] { return annihilator(x2) == zi(4); });
    b.check("k = 1 refutes it", [&] { return refute_or_confirm_T_sa_small_with_witness(k, t, x1).fails(); });
    b.check("Ann(Z/8Z) = 8Z", [&] { return annihilator(x1) == zi(8); });
    b.check("(2Z/8Z : Z/8Z) = 2Z", [&] { return colon(t, x1) == zi(2); });
    out.push_back(b.done());
  }
  {
    BlockBuilder b("Z/8 over Z/8");
    const RingDesc r = RingDesc::finite(Integer(8));
    const FGModule m = parse_module(r, "Z/8");
    b.check("Ann(<2>) = (4)", [&] { return annihilator(parse_submodule(m, "<2>")) == Ideal(r, Integer(4)); });
    b.check("(4) is small in Z/8", [&] { return is_small_ideal_in(Ideal(r, Integer(4)), Ideal::unit(r)); });
    out.push_back(b.done());
  }
  return out;
}

}  // namespace sasmall
