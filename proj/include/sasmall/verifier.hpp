#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sasmall/space.hpp"

namespace sasmall {

using json = nlohmann::ordered_json;

struct CorpusConfig {
  std::vector<std::int64_t> ring_moduli{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  bool include_Z = true;
  std::int64_t max_module_order = 200;
  int max_rank = 3;
  /// kZ is quantified for k = 0..z_bound on the module Z.
  std::int64_t z_bound = 24;
  /// Bound on |M1| * |M2| for statements over pairs of modules, and on the
  /// modules used as targets of monomorphisms and epimorphisms in composites.
  std::int64_t max_pair_order = 64;
  /// Bound on |M| for the R^2 tensor statements.
  std::int64_t max_tensor_order = 16;
  std::uint64_t seed = 1;
  std::size_t max_counterexamples = 20;
  LatticeOptions lattice;
};

struct CorpusItem {
  std::size_t id = 0;
  FGModule module;
  std::string ring_text, module_text;
  /// Finite and within bounds, so every submodule can be quantified.
  bool enumerable = false;
  /// Named instance from the worked examples.
  bool named = false;
  std::shared_ptr<const SubmoduleLattice> lattice;  // enumerable finite items
};

struct Corpus {
  CorpusConfig cfg;
  std::vector<RingDesc> rings;
  std::vector<CorpusItem> items;
};

/// Deterministic: invariant-factor chains d1 | ... | dk (k <= max_rank, every
/// di >= 2, order <= max_module_order) over each Z/n with dk | n and over Z,
/// then Z itself and the named example modules. The seed only orders the
/// sampled checks of the acceptance harness; corpus content does not depend
/// on it.
Corpus generate_corpus(const CorpusConfig& cfg);
/// Corpus holding exactly the modules named in a serialized instance.
Corpus corpus_for_instance(const json& instance, const CorpusConfig& cfg);

enum class Status { verified_on_corpus, falsified, vacuous };
std::string_view to_string(Status s);

struct Report {
  std::string id;
  std::string claim;
  std::string reading;
  bool expected_vacuous = false;
  bool expected_falsified = false;
  std::uint64_t instances = 0;
  std::uint64_t hypothesis_hits = 0;
  std::uint64_t holds = 0;
  std::uint64_t counterexample_count = 0;
  std::uint64_t skipped = 0;
  std::vector<json> counterexamples;
  std::optional<bool> paper_witness_found;
  Status status = Status::vacuous;
};

class Workspace;
class Recorder;

struct Statement {
  std::string id;
  /// Paraphrase of the claim with the encoded hypothesis and conclusion.
  std::string claim;
  /// "default" or "strict" reading of the T-sa-small condition, or "-" when
  /// the claim does not involve it.
  std::string reading;
  bool expected_vacuous = false;
  /// Registered as a known failure of the claim as written.
  bool expected_falsified = false;
  std::optional<json> paper_witness;
  std::function<void(const Corpus&, Recorder&)> run;
};

/// Receives one call per enumerated instance.
class Recorder {
 public:
  using SlotFn = std::function<json()>;

  /// Instances whose hypothesis failed.
  void tally(std::uint64_t n = 1) { report_.instances += n; }
  /// Instances that cannot be decided on this backend.
  void skip(std::uint64_t n = 1) { report_.skipped += n; }
  /// One instance whose hypothesis holds; `slots` serializes it.
  void check(bool conclusion, const SlotFn& slots);

  Workspace& work() { return *work_; }
  const CorpusConfig& cfg() const { return *cfg_; }

 private:
  friend Report run_statement_in(const Statement&, const Corpus&, Workspace&);
  friend std::optional<bool> replay(const Statement&, const json&, const CorpusConfig&);
  Report report_;
  Workspace* work_ = nullptr;
  const CorpusConfig* cfg_ = nullptr;
  std::optional<json> paper_witness_;
  std::optional<json> replay_target_;
  std::optional<bool> replay_result_;
};

const std::vector<Statement>& registry();
/// UnknownStatement when absent.
const Statement& lookup(const std::string& id);

/// Per-worker cache of spaces; not thread-safe.
class Workspace {
 public:
  explicit Workspace(const CorpusConfig& cfg) : cfg_(cfg) {}
  Space& item(const CorpusItem& it);
  Space& module(const FGModule& m);
  Space& ring(const RingDesc& r);
  const RingPredicates& ring_info(const RingDesc& r);

 private:
  const CorpusConfig& cfg_;
  std::map<std::string, std::unique_ptr<Space>> spaces_;
  std::map<std::string, RingPredicates> rings_;
};

Report run_statement(const Statement& s, const Corpus& c);
Report run_statement_in(const Statement& s, const Corpus& c, Workspace& w);
/// Reports in registry order; `jobs` workers share the statements.
std::vector<Report> run_all(const Corpus& c, int jobs = 1);
/// Re-evaluates a serialized counterexample: the conclusion's truth value, or
/// nullopt when the instance is not produced by the statement.
std::optional<bool> replay(const Statement& s, const json& instance, const CorpusConfig& cfg);

json report_to_json(const Report& r);
std::string reports_to_jsonl(const std::vector<Report>& rs);
std::string reports_to_table(const std::vector<Report>& rs);

struct ExampleCheck {
  std::string block;
  std::string assertion;
  bool ok = false;
  std::string detail;
};

struct ExampleBlock {
  std::string name;
  std::vector<ExampleCheck> checks;
  bool ok() const;
};

/// The worked examples, each recomputed through the public API.
std::vector<ExampleBlock> reproduce_paper_examples();

}  // namespace sasmall
