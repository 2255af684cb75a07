#include "sasmall/predicates.hpp"

#include <numeric>
#include <sstream>

namespace sasmall {

std::string_view to_string(VerdictValue v) {
  switch (v) {
    case VerdictValue::holds: return "holds";
    case VerdictValue::fails: return "fails";
    case VerdictValue::undecidable_here: return "undecidable_here";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// FiniteAnalysis

FiniteAnalysis::FiniteAnalysis(const FGModule& m, const LatticeOptions& opts)
    : FiniteAnalysis(enumerate_submodules(m, opts)) {}

FiniteAnalysis::FiniteAnalysis(std::shared_ptr<const SubmoduleLattice> lat) : lat_(std::move(lat)) {
  const RingDesc& r = ring();
  if (r.is_finite()) {
    ring_n_ = to_i64(r.modulus());
    for (const auto& d : divisors(r.modulus())) ideal_gens_.push_back(to_i64(d));
  } else {
    for (const auto& d : divisors(Integer(lat_->exponent()))) ideal_gens_.push_back(to_i64(d));
    ideal_gens_.push_back(0);
  }
}

Ideal FiniteAnalysis::ideal(std::int64_t gen) const { return Ideal(ring(), Integer(gen)); }

std::int64_t FiniteAnalysis::canonical(std::int64_t g) const { return ring_n_ == 0 ? g : std::gcd(g, ring_n_); }

bool FiniteAnalysis::ideal_small(std::int64_t i, std::int64_t a) {
  const auto key = std::make_pair(i, a);
  if (auto it = small_memo_.find(key); it != small_memo_.end()) return it->second;
  const bool v = is_small_ideal_in(ideal(i), ideal(a));
  small_memo_.emplace(key, v);
  return v;
}

namespace {

// Annihilators shrink as X grows and an ideal containing a non-small one is
// not small, so the X that violate a condition form a down-set. Since
// T <= N + X is monotone in X, the maximal violators decide.
std::vector<std::size_t> maximal_only(const SubmoduleLattice& l, const std::vector<std::size_t>& bad) {
  Bitset b(l.size());
  for (std::size_t x : bad) b.set(x);
  std::vector<std::size_t> out;
  for (std::size_t x : bad)
    if ((l.up(x) & b).count() == 1) out.push_back(x);
  return out;
}

}  // namespace

std::size_t FiniteAnalysis::join(std::size_t a, std::size_t b) {
  const std::size_t n = size();
  if (n > 1024) return lat_->join(a, b);
  if (join_table_.empty()) {
    join_table_.assign(n * n, 0);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x; y < n; ++y) {
        const auto j = static_cast<std::uint32_t>(lat_->join(x, y));
        join_table_[x * n + y] = j;
        join_table_[y * n + x] = j;
      }
  }
  return join_table_[a * n + b];
}

const Bitset& FiniteAnalysis::small_set() {
  if (!small_) {
    const std::size_t n = size();
    Bitset s(n);
    for (std::size_t a = 0; a < n; ++a)
      if (!small_witness(a)) s.set(a);
    small_ = std::move(s);
  }
  return *small_;
}

std::optional<std::size_t> FiniteAnalysis::small_witness(std::size_t a) {
  for (std::size_t l = 0; l < top(); ++l)
    if (join(a, l) == top()) return l;
  return std::nullopt;
}

std::optional<std::size_t> FiniteAnalysis::sa_witness(std::size_t a) {
  for (std::size_t l = 0; l < size(); ++l)
    if (join(a, l) == top() && !ideal_small(ann(l), canonical(1))) return l;
  return std::nullopt;
}

const Bitset& FiniteAnalysis::sa_set() {
  if (!sa_) {
    const std::size_t n = size();
    std::vector<std::size_t> bad;
    for (std::size_t l = 0; l < n; ++l)
      if (!ideal_small(ann(l), canonical(1))) bad.push_back(l);
    bad = maximal_only(*lat_, bad);
    Bitset s(n);
    for (std::size_t a = 0; a < n; ++a) {
      bool ok = true;
      for (std::size_t l : bad)
        if (join(a, l) == top()) {
          ok = false;
          break;
        }
      if (ok) s.set(a);
    }
    sa_ = std::move(s);
  }
  return *sa_;
}

std::optional<std::size_t> FiniteAnalysis::essential_witness(std::size_t a) {
  for (std::size_t k = 1; k < size(); ++k)
    if (lat_->meet(a, k) == 0) return k;
  return std::nullopt;
}

const Bitset& FiniteAnalysis::essential_set() {
  if (!essential_) {
    Bitset s(size());
    for (std::size_t a = 0; a < size(); ++a)
      if (!essential_witness(a)) s.set(a);
    essential_ = std::move(s);
  }
  return *essential_;
}

const Bitset& FiniteAnalysis::tsa_set(std::size_t t, bool strict) {
  const auto key = std::make_pair(t, strict);
  if (auto it = tsa_.find(key); it != tsa_.end()) return it->second;
  const std::size_t n = size();
  const std::int64_t tm = colon(t, top());
  std::vector<std::size_t> bad;
  for (std::size_t x = strict ? 1 : 0; x < n; ++x)
    if (!ideal_small(ann(x), tm)) bad.push_back(x);
  Bitset s(n);
  s.set_all();
  const Bitset& above_t = lat_->up(t);
  if (!bad.empty() && bad.back() == top()) {
    // X = M covers every N.
    s = Bitset(n);
  } else {
    for (std::size_t x : maximal_only(*lat_, bad))
      for (std::size_t a = 0; a < n; ++a)
        if (s.test(a) && above_t.test(join(a, x))) s.reset(a);
  }
  return tsa_.emplace(key, std::move(s)).first->second;
}

const Bitset& FiniteAnalysis::tsa_set_in(std::size_t t, std::size_t k, bool strict) {
  const auto key = std::make_tuple(t, k, strict);
  if (auto it = tsa_in_.find(key); it != tsa_in_.end()) return it->second;
  const std::int64_t tk = colon(t, k);
  const Bitset& inside = lat_->down(k);
  std::vector<std::size_t> bad;
  for (std::size_t x : inside.indices())
    if ((!strict || x != 0) && !ideal_small(ann(x), tk)) bad.push_back(x);
  Bitset s = inside;
  const Bitset& above_t = lat_->up(t);
  for (std::size_t x : maximal_only(*lat_, bad))
    for (std::size_t a : inside.indices())
      if (s.test(a) && above_t.test(join(a, x))) s.reset(a);
  return tsa_in_.emplace(key, std::move(s)).first->second;
}

std::optional<std::size_t> FiniteAnalysis::tsa_witness(std::size_t a, std::size_t t, bool strict) {
  const std::int64_t tm = colon(t, top());
  for (std::size_t x = strict ? 1 : 0; x < size(); ++x)
    if (lat_->leq(t, join(a, x)) && !ideal_small(ann(x), tm)) return x;
  return std::nullopt;
}

bool FiniteAnalysis::completely_irreducible(std::size_t a) {
  if (a == top()) return true;
  std::size_t m = top();
  for (std::size_t b : lat_->up(a).indices())
    if (b != a) m = lat_->meet(m, b);
  return m != a;
}

const Bitset& FiniteAnalysis::prime_set() {
  if (!prime_) {
    const std::size_t n = size();
    const std::int64_t e = lat_->exponent();
    const std::int64_t order = lat_->element_count();
    std::vector<std::vector<std::int64_t>> mult(static_cast<std::size_t>(e));
    for (std::int64_t r = 0; r < e; ++r)
      for (std::int64_t m = 0; m < order; ++m) mult[static_cast<std::size_t>(r)].push_back(lat_->element_scaled(m, r));
    std::vector<std::size_t> r_top;
    for (std::int64_t r = 0; r < e; ++r) r_top.push_back(lat_->scaled(top(), r));
    Bitset s(n);
    for (std::size_t p = 0; p + 1 < n; ++p) {
      const Bitset& elems = lat_->elements(p);
      bool prime = true;
      for (std::int64_t r = 0; r < e && prime; ++r) {
        if (lat_->leq(r_top[static_cast<std::size_t>(r)], p)) continue;
        for (std::int64_t m = 0; m < order; ++m)
          if (elems.test(static_cast<std::size_t>(mult[static_cast<std::size_t>(r)][static_cast<std::size_t>(m)])) &&
              !elems.test(static_cast<std::size_t>(m))) {
            prime = false;
            break;
          }
      }
      if (prime) s.set(p);
    }
    prime_ = std::move(s);
  }
  return *prime_;
}

std::size_t FiniteAnalysis::rad(std::size_t a) {
  std::size_t m = top();
  for (std::size_t p : prime_set().indices())
    if (lat_->leq(a, p)) m = lat_->meet(m, p);
  return m;
}

std::size_t FiniteAnalysis::jacobson() {
  if (!jacobson_) {
    std::size_t by_max = top();
    const auto& below_top = lat_->down(top());
    for (std::size_t m : below_top.indices()) {
      if (m == top()) continue;
      const auto cov = lat_->covers(m);
      if (cov.size() == 1 && cov.front() == top()) by_max = lat_->meet(by_max, m);
    }
    if (size() > 1) {
      std::size_t by_small = 0;
      for (std::size_t s : small_set().indices()) by_small = join(by_small, s);
      if (by_small != by_max) fail(ErrorKind::Internal, "J(M) computations disagree for " + to_string(module()));
    }
    jacobson_ = by_max;
  }
  return *jacobson_;
}

std::size_t FiniteAnalysis::j_sa_t(std::size_t t, bool strict) {
  std::size_t j = 0;
  for (std::size_t a : tsa_set(t, strict).indices()) j = join(j, a);
  return j;
}

const ModuleClass& FiniteAnalysis::module_class() {
  if (class_) return *class_;
  ModuleClass c;
  const std::size_t n = size();
  const std::int64_t ann_m = ann(top());
  c.is_prime = true;
  for (std::size_t x = 1; x < n; ++x)
    if (ann(x) != ann_m) c.is_prime = false;
  c.is_faithful = is_zero_ideal(ann_m);

  Bitset products(n), annihilated(n);
  std::map<std::size_t, std::int64_t> product_of;
  c.is_cancellation = true;
  c.satisfies_dac = true;
  for (std::int64_t d : ideal_gens_) {
    const std::size_t im = lat_->scaled(top(), d);
    products.set(im);
    if (!product_of.emplace(im, d).second) c.is_cancellation = false;
    const std::size_t am = lat_->killed_by(is_zero_ideal(d) ? 0 : d);
    annihilated.set(am);
    if (ann(am) != canonical(d)) c.satisfies_dac = false;
  }
  c.is_multiplication = products.count() == n;
  c.is_comultiplication = annihilated.count() == n;
  c.is_strong_comultiplication = c.is_comultiplication && c.satisfies_dac;

  c.is_semisimple_module = true;
  for (std::size_t a = 0; a < n && c.is_semisimple_module; ++a) {
    bool has_complement = false;
    for (std::size_t b = 0; b < n && !has_complement; ++b)
      has_complement = lat_->meet(a, b) == 0 && join(a, b) == top();
    c.is_semisimple_module = has_complement;
  }
  class_ = c;
  return *class_;
}

// ---------------------------------------------------------------------------
// Cache

std::string module_key(const FGModule& m) {
  std::ostringstream os;
  os << to_string(m.ring()) << '|' << m.rank() << '|';
  for (Eigen::Index i = 0; i < m.relations().rows(); ++i)
    for (Eigen::Index j = 0; j < m.relations().cols(); ++j) os << m.relations()(i, j).str() << ',';
  os << '|';
  for (const auto& s : m.scale()) os << s.str() << ',';
  return os.str();
}

std::shared_ptr<FiniteAnalysis> analysis_for(const FGModule& m, const LatticeOptions& opts) {
  thread_local std::map<std::string, std::shared_ptr<FiniteAnalysis>> cache;
  if (!m.is_finite()) fail(ErrorKind::InfiniteLattice, "submodule lattice of " + to_string(m) + " is infinite");
  if (m.order() > opts.max_order)
    fail(ErrorKind::BoundExceeded, "module order " + m.order().str() + " exceeds bound " + std::to_string(opts.max_order));
  const std::string key = module_key(m);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  if (cache.size() >= 2048) cache.clear();
  auto a = std::make_shared<FiniteAnalysis>(m, opts);
  cache.emplace(key, a);
  return a;
}

// ---------------------------------------------------------------------------
// Verdicts

namespace {

Verdict holds(std::string reason) { return {VerdictValue::holds, std::nullopt, std::move(reason)}; }

Verdict fails(Submodule w, std::string reason) { return {VerdictValue::fails, std::move(w), std::move(reason)}; }

void require_same_parent(const Submodule& a, const Submodule& b) {
  if (!(a.parent() == b.parent())) fail(ErrorKind::ParentMismatch, "submodules live in different modules");
}

[[noreturn]] void undecidable(const std::string& what, const FGModule& m) {
  fail(ErrorKind::Undecidable, what + " is not decidable on " + to_string(m) + "; supply a witness");
}

// True when X refutes "T in N + X implies Ann(X) small in (T:M)".
bool refutes(const Submodule& n, const Submodule& t, const Submodule& x, const Submodule& top) {
  return sub_contains(sub_sum(n, x), t) && !is_small_ideal_in(annihilator(x), colon(t, top));
}

std::string refutation_reason(const Submodule& t, const Submodule& x, const Submodule& top) {
  return "T is contained in N + " + to_string(x) + " but Ann(X) = " + to_string(annihilator(x)) +
         " is not small in (T:M) = " + to_string(colon(t, top));
}

}  // namespace

Verdict is_small(const Submodule& n, const PredicateOptions& opts) {
  const FGModule& m = n.parent();
  if (m.is_z_line()) {
    const Integer k = n.z_generator();
    if (k == 0) return holds("zero submodule is small");
    const auto w = z_line_submodule(m, k + 1);
    return fails(w, "N + " + to_string(w) + " = Z with " + to_string(w) + " != Z");
  }
  if (!m.is_finite()) undecidable("smallness", m);
  auto a = analysis_for(m, opts.lattice);
  const std::size_t i = a->lattice().index_of(n);
  if (const auto w = a->small_witness(i))
    return fails(a->lattice().at(*w), "N + L = M with L = " + to_string(a->lattice().at(*w)) + " != M");
  return holds(n.is_zero() ? "zero submodule is small" : "every L with N + L = M equals M");
}

Verdict is_essential(const Submodule& n, const PredicateOptions& opts) {
  const FGModule& m = n.parent();
  if (!m.is_finite()) undecidable("essentiality", m);
  auto a = analysis_for(m, opts.lattice);
  const std::size_t i = a->lattice().index_of(n);
  if (const auto w = a->essential_witness(i))
    return fails(a->lattice().at(*w), "N meets " + to_string(a->lattice().at(*w)) + " in 0");
  return holds("N meets every nonzero submodule");
}

namespace {

Verdict z_line_tsa(const Submodule& n, const Submodule& t, bool strict) {
  const FGModule& m = n.parent();
  const Submodule top = full_submodule(m);
  if (t.is_zero()) {
    if (strict) return holds("every nonzero X has Ann(X) = 0, which is small in (0:M) = 0");
    return fails(zero_submodule(m), "T = 0 lies in N + 0 and Ann(0) = Z is not small in (0:M) = 0");
  }
  for (const auto& x : z_line_divisor_candidates(n, t)) {
    if (strict && x.is_zero()) continue;
    if (refutes(n, t, x, top)) return fails(x, refutation_reason(t, x, top));
  }
  return holds("no divisor class X with T in N + X has Ann(X) outside the small ideals of (T:M)");
}

}  // namespace

Verdict is_sa_small(const Submodule& n, const PredicateOptions& opts) {
  const FGModule& m = n.parent();
  if (m.is_z_line()) {
    const Submodule top = full_submodule(m);
    for (const auto& l : z_line_divisor_candidates(n, top))
      if (refutes(n, top, l, top))
        return fails(l, "N + " + to_string(l) + " = M but Ann(L) = " + to_string(annihilator(l)) + " is not small in R");
    return holds("every L with N + L = M has Ann(L) small in R");
  }
  if (!m.is_finite()) {
    if (!n.is_zero()) undecidable("sa-smallness", m);
    const Submodule top = full_submodule(m);
    if (is_small_ideal_in(module_annihilator(m), Ideal::unit(m.ring())))
      return holds("0 + L = M forces L = M and Ann(M) = " + to_string(module_annihilator(m)) + " is small in R");
    return fails(top, "0 + M = M but Ann(M) is not small in R");
  }
  auto a = analysis_for(m, opts.lattice);
  const std::size_t i = a->lattice().index_of(n);
  if (const auto w = a->sa_witness(i)) {
    const auto& l = a->lattice().at(*w);
    return fails(l, "N + L = M with L = " + to_string(l) + " but Ann(L) = " + to_string(annihilator(l)) +
                        " is not small in R");
  }
  return holds("every L with N + L = M has Ann(L) small in R");
}

Verdict is_T_sa_small(const Submodule& n, const Submodule& t, const PredicateOptions& opts) {
  require_same_parent(n, t);
  const FGModule& m = n.parent();
  const bool strict = opts.strict_nonzero_x;
  if (m.is_z_line()) return z_line_tsa(n, t, strict);
  if (!m.is_finite()) {
    if (!strict && sub_contains(n, t)) {
      const auto z = zero_submodule(m);
      return fails(z, "T is contained in N + 0 and Ann(0) = R is not small in (T:M) = " +
                          to_string(colon(t, full_submodule(m))));
    }
    undecidable("T-sa-smallness", m);
  }
  auto a = analysis_for(m, opts.lattice);
  const std::size_t i = a->lattice().index_of(n);
  const std::size_t ti = a->lattice().index_of(t);
  if (const auto w = a->tsa_witness(i, ti, strict)) {
    const auto& x = a->lattice().at(*w);
    return fails(x, refutation_reason(t, x, full_submodule(m)));
  }
  return holds("every X with T in N + X has Ann(X) small in (T:M) = " + to_string(colon(t, full_submodule(m))));
}

Verdict refute_or_confirm_T_sa_small_with_witness(const Submodule& n, const Submodule& t, const Submodule& x) {
  require_same_parent(n, t);
  require_same_parent(n, x);
  const Submodule top = full_submodule(n.parent());
  if (!sub_contains(sub_sum(n, x), t))
    return {VerdictValue::undecidable_here, std::nullopt, "T is not contained in N + X; not refuted by this witness"};
  if (refutes(n, t, x, top)) return fails(x, refutation_reason(t, x, top));
  return {VerdictValue::undecidable_here, std::nullopt,
          "Ann(X) = " + to_string(annihilator(x)) + " is small in (T:M) = " + to_string(colon(t, top)) +
              "; not refuted by this witness"};
}

namespace {

std::vector<Submodule> collect(const SubmoduleLattice& l, const Bitset& b) {
  std::vector<Submodule> out;
  for (std::size_t i : b.indices()) out.push_back(l.at(i));
  return out;
}

}  // namespace

std::vector<Submodule> small_set(const FGModule& m, const PredicateOptions& opts) {
  auto a = analysis_for(m, opts.lattice);
  return collect(a->lattice(), a->small_set());
}

std::vector<Submodule> sa_small_set(const FGModule& m, const PredicateOptions& opts) {
  auto a = analysis_for(m, opts.lattice);
  return collect(a->lattice(), a->sa_set());
}

std::vector<Submodule> T_sa_small_set(const FGModule& m, const Submodule& t, const PredicateOptions& opts) {
  auto a = analysis_for(m, opts.lattice);
  return collect(a->lattice(), a->tsa_set(a->lattice().index_of(t), opts.strict_nonzero_x));
}

std::string z_line_set_description(const std::string& which, const Submodule* t, const PredicateOptions& opts) {
  if (which == "small") return "{0}";
  if (which == "sa-small") return "{kZ : k != 1} (every proper submodule)";
  if (which == "t-sa-small") {
    if (t == nullptr) fail(ErrorKind::Internal, "T required");
    const Integer tg = t->z_generator();
    if (opts.strict_nonzero_x) return "{kZ : k >= 0} (every submodule)";
    if (tg == 0) return "{} (no submodule)";
    return "{kZ : k does not divide " + tg.str() + "} (T not contained in N)";
  }
  fail(ErrorKind::ParseError, "unknown set " + which);
}

Submodule jacobson_radical_module(const FGModule& m, const PredicateOptions& opts) {
  if (m.is_z_line()) return zero_submodule(m);
  if (!m.is_finite()) undecidable("J(M)", m);
  auto a = analysis_for(m, opts.lattice);
  return a->lattice().at(a->jacobson());
}

Submodule j_sa_T(const FGModule& m, const Submodule& t, const PredicateOptions& opts) {
  if (!m.is_finite()) undecidable("J_T^sa(M)", m);
  auto a = analysis_for(m, opts.lattice);
  return a->lattice().at(a->j_sa_t(a->lattice().index_of(t), opts.strict_nonzero_x));
}

Verdict is_sa_hollow(const FGModule& m, const PredicateOptions& opts) {
  if (m.is_z_line()) return holds("every proper kZ is sa-small in Z");
  if (!m.is_finite()) undecidable("sa-hollowness", m);
  if (m.is_zero()) return fails(zero_submodule(m), "the zero module is not sa-hollow");
  auto a = analysis_for(m, opts.lattice);
  const Bitset& s = a->sa_set();
  for (std::size_t i = 0; i < a->top(); ++i)
    if (!s.test(i)) return fails(a->lattice().at(i), "proper submodule " + to_string(a->lattice().at(i)) + " is not sa-small");
  return holds("every proper submodule is sa-small");
}

Verdict is_T_sa_hollow(const FGModule& m, const Submodule& t, const PredicateOptions& opts) {
  if (!(t.parent() == m)) fail(ErrorKind::ParentMismatch, "T is not a submodule of M");
  if (m.is_z_line()) {
    if (opts.strict_nonzero_x) return holds("every nonzero X in Z has Ann(X) = 0");
    return fails(full_submodule(m), "N = Z contains T, so X = 0 refutes");
  }
  if (!m.is_finite()) undecidable("T-sa-hollowness", m);
  auto a = analysis_for(m, opts.lattice);
  const Bitset& s = a->tsa_set(a->lattice().index_of(t), opts.strict_nonzero_x);
  for (std::size_t i = 0; i < a->size(); ++i)
    if (!s.test(i)) return fails(a->lattice().at(i), "submodule " + to_string(a->lattice().at(i)) + " is not T-sa-small");
  return holds("every submodule is T-sa-small");
}

ModuleClass module_class(const FGModule& m, const PredicateOptions& opts) {
  if (m.is_z_line()) {
    ModuleClass c;
    c.is_prime = c.is_faithful = c.is_multiplication = c.is_cancellation = true;
    return c;
  }
  if (!m.is_finite()) undecidable("module class flags", m);
  return analysis_for(m, opts.lattice)->module_class();
}

Verdict is_completely_irreducible(const Submodule& n, const PredicateOptions& opts) {
  const FGModule& m = n.parent();
  if (!m.is_finite()) undecidable("complete irreducibility", m);
  auto a = analysis_for(m, opts.lattice);
  const std::size_t i = a->lattice().index_of(n);
  if (a->completely_irreducible(i)) return holds(i == a->top() ? "N = M" : "N is not the intersection of strictly larger submodules");
  return fails(a->lattice().at(a->lattice().covers(i).front()), "N is the intersection of its strict supersets");
}

std::vector<Submodule> prime_submodules(const FGModule& m, const PredicateOptions& opts) {
  if (!m.is_finite()) undecidable("prime submodules", m);
  auto a = analysis_for(m, opts.lattice);
  return collect(a->lattice(), a->prime_set());
}

Submodule rad_submodule(const Submodule& n, const PredicateOptions& opts) {
  const FGModule& m = n.parent();
  if (!m.is_finite()) undecidable("rad(N)", m);
  auto a = analysis_for(m, opts.lattice);
  return a->lattice().at(a->rad(a->lattice().index_of(n)));
}

}  // namespace sasmall
