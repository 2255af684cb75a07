#include <CLI11.hpp>
#include <iostream>

#include "sasmall/morphism.hpp"
#include "sasmall/syntax.hpp"
#include "sasmall/verifier.hpp"

using namespace sasmall;

namespace {

enum Exit { ok = 0, other = 1, parse_error = 2, bound_exceeded = 3, example_regression = 4 };

struct Options {
  std::string ring = "Z", module, sub, T, witness, format = "text", predicate, statement;
  std::int64_t max_order = 0;
  std::uint64_t seed = 1;
  bool strict = false;
  int jobs = 0;
};

LatticeOptions lattice_options(const Options& o) {
  LatticeOptions l;
  if (o.max_order > 0) l.max_order = o.max_order;
  return l;
}

PredicateOptions predicate_options(const Options& o) {
  PredicateOptions p;
  p.strict_nonzero_x = o.strict;
  p.lattice = lattice_options(o);
  return p;
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) fail(ErrorKind::ParseError, std::string("missing ") + flag);
}

int cmd_lattice(const Options& o) {
  require(o.module, "--module");
  const FGModule m = parse_module(parse_ring(o.ring), o.module);
  const auto lat = enumerate_submodules(m, lattice_options(o));
  if (o.format == "dot") {
    std::cout << lattice_to_dot(*lat);
  } else if (o.format == "json") {
    std::cout << lattice_to_json(*lat) << "\n";
  } else {
    std::cout << to_string(m) << " over " << to_string(m.ring()) << ": " << lat->size() << " submodules\n";
    for (std::size_t i = 0; i < lat->size(); ++i) {
      std::cout << "  [" << i << "] " << to_string(lat->at(i)) << "  order " << lat->order_of(i) << "  covered by {";
      const auto c = lat->covers(i);
      for (std::size_t j = 0; j < c.size(); ++j) std::cout << (j ? ", " : "") << c[j];
      std::cout << "}\n";
    }
  }
  return ok;
}

void emit_verdict(const Options& o, const std::string& what, const Verdict& v) {
  if (o.format == "json") {
    json j;
    j["schema"] = 1;
    j["predicate"] = what;
    j["verdict"] = std::string(to_string(v.value));
    j["reason"] = v.reason;
    if (v.witness) j["witness"] = to_string(*v.witness);
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << what << ": " << to_string(v.value) << "\n";
  if (!v.reason.empty()) std::cout << "reason: " << v.reason << "\n";
  if (v.witness) std::cout << "witness: " << to_string(*v.witness) << "\n";
}

void emit_class(const Options& o, const ModuleClass& k) {
  const std::vector<std::pair<const char*, bool>> rows{{"prime", k.is_prime},
                                                       {"faithful", k.is_faithful},
                                                       {"multiplication", k.is_multiplication},
                                                       {"comultiplication", k.is_comultiplication},
                                                       {"dac", k.satisfies_dac},
                                                       {"strong_comultiplication", k.is_strong_comultiplication},
                                                       {"cancellation", k.is_cancellation},
                                                       {"semisimple", k.is_semisimple_module}};
  if (o.format == "json") {
    json j;
    j["schema"] = 1;
    for (const auto& [name, v] : rows) j[name] = v;
    std::cout << j.dump() << "\n";
    return;
  }
  for (const auto& [name, v] : rows) std::cout << name << ": " << (v ? "yes" : "no") << "\n";
}

int cmd_check(const Options& o) {
  require(o.module, "--module");
  const FGModule m = parse_module(parse_ring(o.ring), o.module);
  const PredicateOptions popts = predicate_options(o);
  const std::string& p = o.predicate;
  if (p == "class") {
    emit_class(o, module_class(m, popts));
    return ok;
  }
  if (p == "sa-hollow") {
    emit_verdict(o, p, is_sa_hollow(m, popts));
    return ok;
  }
  if (p == "t-sa-hollow") {
    require(o.T, "--T");
    emit_verdict(o, p, is_T_sa_hollow(m, parse_submodule(m, o.T), popts));
    return ok;
  }
  require(o.sub, "--sub");
  const Submodule n = parse_submodule(m, o.sub);
  Verdict v;
  if (p == "small")
    v = is_small(n, popts);
  else if (p == "sa-small")
    v = is_sa_small(n, popts);
  else if (p == "essential")
    v = is_essential(n, popts);
  else if (p == "completely-irreducible")
    v = is_completely_irreducible(n, popts);
  else if (p == "t-sa-small") {
    require(o.T, "--T");
    const Submodule t = parse_submodule(m, o.T);
    v = o.witness.empty() ? is_T_sa_small(n, t, popts)
                          : refute_or_confirm_T_sa_small_with_witness(n, t, parse_submodule(m, o.witness));
  } else {
    fail(ErrorKind::ParseError, "unknown predicate '" + p + "'");
  }
  if (v.value == VerdictValue::undecidable_here && o.witness.empty())
    fail(ErrorKind::Undecidable, v.reason + " (supply a candidate X with --witness)");
  emit_verdict(o, p, v);
  return ok;
}

int cmd_examples(const Options& o) {
  const auto blocks = reproduce_paper_examples();
  std::size_t passed = 0;
  json all = json::array();
  for (const auto& b : blocks) {
    passed += b.ok();
    if (o.format == "json") {
      json jb;
      jb["block"] = b.name;
      jb["ok"] = b.ok();
      for (const auto& c : b.checks) jb["checks"].push_back({{"assertion", c.assertion}, {"ok", c.ok}, {"detail", c.detail}});
      all.push_back(jb);
      continue;
    }
    std::cout << (b.ok() ? "ok   " : "FAIL ") << b.name << "\n";
    for (const auto& c : b.checks)
      std::cout << "       " << (c.ok ? "ok   " : "FAIL ") << c.assertion << (c.detail.empty() ? "" : "  (" + c.detail + ")")
                << "\n";
  }
  if (o.format == "json")
    std::cout << json{{"schema", 1}, {"blocks", all}, {"reproduced", passed}, {"total", blocks.size()}}.dump() << "\n";
  else
    std::cout << passed << "/" << blocks.size() << " paper examples reproduced\n";
  return passed == blocks.size() ? ok : example_regression;
}

CorpusConfig corpus_config(const Options& o) {
  CorpusConfig cfg;
  if (o.max_order > 0) cfg.max_module_order = o.max_order;
  cfg.seed = o.seed;
  return cfg;
}

int cmd_verify(const Options& o) {
  const Corpus c = generate_corpus(corpus_config(o));
  std::vector<Report> reports;
  if (o.statement == "all") {
    if (!o.strict) {
      reports = run_all(c, o.jobs);
    } else {
      for (const auto& r : run_all(c, o.jobs))
        if (r.reading != "default") reports.push_back(r);
    }
  } else {
    reports.push_back(run_statement(lookup(o.statement), c));
  }
  std::cout << (o.format == "json" ? reports_to_jsonl(reports) : reports_to_table(reports));
  // Falsifications are findings; only the worked examples decide the exit status.
  for (const auto& b : reproduce_paper_examples())
    if (!b.ok()) return example_regression;
  return ok;
}

int cmd_corpus(const Options& o) {
  const Corpus c = generate_corpus(corpus_config(o));
  if (o.format == "json") {
    for (const auto& it : c.items) {
      json j;
      j["schema"] = 1;
      j["id"] = it.id;
      j["ring"] = it.ring_text;
      j["module"] = it.module_text;
      j["order"] = it.module.order().str();
      j["submodules"] = it.lattice ? static_cast<std::int64_t>(it.lattice->size()) : -1;
      j["named"] = it.named;
      std::cout << j.dump() << "\n";
    }
    return ok;
  }
  for (const auto& it : c.items) {
    std::cout << it.id << "  " << it.ring_text << "  " << it.module_text;
    if (it.lattice) std::cout << "  order " << it.module.order().str() << ", " << it.lattice->size() << " submodules";
    if (it.named) std::cout << "  (named)";
    std::cout << "\n";
  }
  std::cout << c.items.size() << " modules over " << c.rings.size() << " rings\n";
  return ok;
}

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownStatement: return parse_error;
    case ErrorKind::BoundExceeded:
    case ErrorKind::InfiniteLattice:
    case ErrorKind::InfiniteEnumeration: return bound_exceeded;
    default: return other;
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"sa-small submodules: predicates, lattices and statement checks"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--ring", o.ring, "Z or Z/n")->capture_default_str();
    sub->add_option("--format", o.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--max-order", o.max_order, "bound on enumerated module orders");
    sub->add_option("--seed", o.seed, "seed for sampled slots");
    sub->add_flag("--strict-nonzero-X", o.strict, "quantify only nonzero X in the T-sa-small condition");
  };

  auto* lattice = app.add_subcommand("lattice", "enumerate the submodule lattice");
  common(lattice);
  lattice->add_option("--module", o.module)->required();

  auto* check = app.add_subcommand("check", "evaluate a predicate");
  common(check);
  check->add_option("predicate", o.predicate,
                    "small, sa-small, essential, t-sa-small, completely-irreducible, sa-hollow, t-sa-hollow, class")
      ->required();
  check->add_option("--module", o.module)->required();
  check->add_option("--sub", o.sub);
  check->add_option("--T", o.T);
  check->add_option("--witness", o.witness, "candidate X for a single-instance check");

  auto* examples = app.add_subcommand("examples", "recompute the worked examples");
  common(examples);

  auto* verify = app.add_subcommand("verify", "run registry statements over the corpus");
  common(verify);
  verify->add_option("statement", o.statement, "statement id or 'all'")->required();
  verify->add_option("--jobs", o.jobs, "worker threads (default: all cores)");

  auto* corpus = app.add_subcommand("corpus", "list the corpus");
  common(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : parse_error;
  }

  try {
    if (*lattice) return cmd_lattice(o);
    if (*check) return cmd_check(o);
    if (*examples) return cmd_examples(o);
    if (*verify) return cmd_verify(o);
    if (*corpus) return cmd_corpus(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return other;
  }
  return other;
}
