#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sasmall/lattice.hpp"

namespace sasmall {

enum class VerdictValue { holds, fails, undecidable_here };
std::string_view to_string(VerdictValue v);

struct Verdict {
  VerdictValue value = VerdictValue::undecidable_here;
  std::optional<Submodule> witness;
  std::string reason;

  bool holds() const { return value == VerdictValue::holds; }
  bool fails() const { return value == VerdictValue::fails; }
};

struct PredicateOptions {
  /// Quantify only nonzero X in the T-sa-small condition (the literal
  /// reading of the definition); the default also takes X = 0.
  bool strict_nonzero_x = false;
  LatticeOptions lattice;
};

struct ModuleClass {
  bool is_prime = false;
  bool is_faithful = false;
  bool is_multiplication = false;
  bool is_comultiplication = false;
  bool satisfies_dac = false;
  bool is_strong_comultiplication = false;
  bool is_cancellation = false;
  bool is_semisimple_module = false;
};

/// Cached predicate tables over the lattice of one finite module. Ideals are
/// handled through their canonical generators (a divisor of n over Z/n, a
/// nonnegative integer over Z). Not thread-safe; use one per worker.
class FiniteAnalysis {
 public:
  explicit FiniteAnalysis(std::shared_ptr<const SubmoduleLattice> lat);
  explicit FiniteAnalysis(const FGModule& m, const LatticeOptions& opts = {});

  const SubmoduleLattice& lattice() const { return *lat_; }
  const FGModule& module() const { return lat_->module(); }
  const RingDesc& ring() const { return lat_->module().ring(); }
  std::size_t size() const { return lat_->size(); }
  std::size_t top() const { return lat_->top(); }

  Ideal ideal(std::int64_t gen) const;
  std::int64_t zero_ideal() const { return ring_n_; }
  bool is_zero_ideal(std::int64_t g) const { return g == ring_n_; }
  /// Generators of every ideal that can matter for this module: all ideals
  /// of Z/n, or dZ for d | exponent together with 0 over Z.
  const std::vector<std::int64_t>& ideal_gens() const { return ideal_gens_; }
  std::int64_t ann(std::size_t x) const { return canonical(lat_->exponent_of(x)); }
  std::int64_t colon(std::size_t n, std::size_t k) const { return canonical(lat_->colon_exponent(n, k)); }
  std::int64_t canonical(std::int64_t g) const;
  bool ideal_small(std::int64_t i, std::int64_t a);
  std::size_t join(std::size_t a, std::size_t b);

  const Bitset& small_set();
  const Bitset& sa_set();
  const Bitset& essential_set();
  const Bitset& tsa_set(std::size_t t, bool strict);
  /// N <<_T K inside the submodule K: X ranges over submodules of K and the
  /// colon is (T : K). Only meaningful for N, T <= K.
  const Bitset& tsa_set_in(std::size_t t, std::size_t k, bool strict);

  std::optional<std::size_t> small_witness(std::size_t n);
  std::optional<std::size_t> sa_witness(std::size_t n);
  std::optional<std::size_t> essential_witness(std::size_t n);
  std::optional<std::size_t> tsa_witness(std::size_t n, std::size_t t, bool strict);

  bool completely_irreducible(std::size_t n);
  const Bitset& prime_set();
  std::size_t rad(std::size_t n);
  /// J(M) from maximal submodules, cross-checked against the sum of small ones.
  std::size_t jacobson();
  std::size_t j_sa_t(std::size_t t, bool strict);
  const ModuleClass& module_class();

 private:
  std::shared_ptr<const SubmoduleLattice> lat_;
  std::int64_t ring_n_ = 0;
  std::vector<std::int64_t> ideal_gens_;
  std::map<std::pair<std::int64_t, std::int64_t>, bool> small_memo_;
  std::vector<std::uint32_t> join_table_;
  std::optional<Bitset> small_, sa_, essential_, prime_;
  std::map<std::pair<std::size_t, bool>, Bitset> tsa_;
  std::map<std::tuple<std::size_t, std::size_t, bool>, Bitset> tsa_in_;
  std::optional<ModuleClass> class_;
  std::optional<std::size_t> jacobson_;
};

/// Per-thread cache of analyses keyed by module structure.
std::shared_ptr<FiniteAnalysis> analysis_for(const FGModule& m, const LatticeOptions& opts = {});
/// Identity of a module for caching: ring, relations and coordinate scale.
std::string module_key(const FGModule& m);

Verdict is_small(const Submodule& n, const PredicateOptions& opts = {});
Verdict is_essential(const Submodule& n, const PredicateOptions& opts = {});
Verdict is_sa_small(const Submodule& n, const PredicateOptions& opts = {});
Verdict is_T_sa_small(const Submodule& n, const Submodule& t, const PredicateOptions& opts = {});
/// Single-instance check of the T-sa-small condition at the supplied X.
Verdict refute_or_confirm_T_sa_small_with_witness(const Submodule& n, const Submodule& t, const Submodule& x);

std::vector<Submodule> small_set(const FGModule& m, const PredicateOptions& opts = {});
std::vector<Submodule> sa_small_set(const FGModule& m, const PredicateOptions& opts = {});
std::vector<Submodule> T_sa_small_set(const FGModule& m, const Submodule& t, const PredicateOptions& opts = {});
/// Closed-form description of the sets on the module Z.
std::string z_line_set_description(const std::string& which, const Submodule* t, const PredicateOptions& opts = {});

Submodule jacobson_radical_module(const FGModule& m, const PredicateOptions& opts = {});
Submodule j_sa_T(const FGModule& m, const Submodule& t, const PredicateOptions& opts = {});

Verdict is_sa_hollow(const FGModule& m, const PredicateOptions& opts = {});
Verdict is_T_sa_hollow(const FGModule& m, const Submodule& t, const PredicateOptions& opts = {});

ModuleClass module_class(const FGModule& m, const PredicateOptions& opts = {});

Verdict is_completely_irreducible(const Submodule& n, const PredicateOptions& opts = {});
std::vector<Submodule> prime_submodules(const FGModule& m, const PredicateOptions& opts = {});
Submodule rad_submodule(const Submodule& n, const PredicateOptions& opts = {});

}  // namespace sasmall
