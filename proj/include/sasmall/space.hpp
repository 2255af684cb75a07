#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "sasmall/predicates.hpp"

namespace sasmall {

/// Uniform view of a module whose submodules can be quantified: a finite
/// module (handles are lattice indices) or the module Z (handles are the
/// generators k of kZ, quantified over 0..bound). Ideals of the ring are
/// passed around as canonical generators.
class Space {
 public:
  using Sub = std::int64_t;
  virtual ~Space() = default;

  virtual const FGModule& module() const = 0;
  const RingDesc& ring() const { return module().ring(); }

  /// Quantification domain, canonical order.
  virtual const std::vector<Sub>& subs() const = 0;
  virtual Sub zero() const = 0;
  virtual Sub top() const = 0;
  virtual std::vector<Sub> above(Sub a) const = 0;
  virtual std::vector<Sub> below(Sub a) const = 0;
  virtual std::vector<Sub> maximals() const = 0;

  virtual bool leq(Sub a, Sub b) = 0;
  virtual Sub join(Sub a, Sub b) = 0;
  virtual Sub meet(Sub a, Sub b) = 0;

  virtual std::int64_t ann(Sub a) = 0;
  virtual std::int64_t colon(Sub n, Sub k) = 0;
  virtual std::int64_t zero_ideal() const = 0;
  bool is_zero_ideal(std::int64_t g) const { return g == zero_ideal(); }
  virtual std::int64_t canonical(std::int64_t g) const = 0;
  virtual bool ideal_small(std::int64_t i, std::int64_t a) = 0;
  /// dM.
  virtual Sub scaled_top(std::int64_t d) = 0;

  virtual bool small(Sub a) = 0;
  virtual bool sa(Sub a) = 0;
  virtual bool tsa(Sub n, Sub t, bool strict) = 0;
  /// N <<_T K computed inside K.
  virtual bool tsa_in(Sub n, Sub t, Sub k, bool strict) = 0;
  virtual bool essential(Sub a) = 0;
  virtual bool completely_irreducible(Sub a) = 0;
  virtual Sub rad(Sub a) = 0;
  /// Sum of the T-sa-small submodules; finite modules only.
  virtual Sub j_tsa(Sub t, bool strict) = 0;
  virtual const ModuleClass& module_class() = 0;
  bool is_zero_module() const { return module().is_zero(); }

  bool tsa_hollow(Sub t, bool strict);
  bool sa_hollow();

  virtual std::string text(Sub a) = 0;
  virtual Sub parse(const std::string& text) = 0;
  virtual Submodule submodule(Sub a) = 0;
  virtual Sub handle(const Submodule& s) = 0;

  /// For R as a module over itself: the ideal a handle stands for, and back.
  std::int64_t ideal_of(Sub h) { return colon(h, top()); }
  Sub of_ideal(std::int64_t g) { return scaled_top(g); }
};

class FiniteSpace final : public Space {
 public:
  explicit FiniteSpace(std::shared_ptr<FiniteAnalysis> a);

  const FGModule& module() const override { return a_->module(); }
  const std::vector<Sub>& subs() const override { return subs_; }
  Sub zero() const override { return 0; }
  Sub top() const override { return static_cast<Sub>(a_->top()); }
  std::vector<Sub> above(Sub a) const override;
  std::vector<Sub> below(Sub a) const override;
  std::vector<Sub> maximals() const override;

  bool leq(Sub a, Sub b) override { return lat().leq(u(a), u(b)); }
  Sub join(Sub a, Sub b) override { return static_cast<Sub>(a_->join(u(a), u(b))); }
  Sub meet(Sub a, Sub b) override { return static_cast<Sub>(lat().meet(u(a), u(b))); }

  std::int64_t ann(Sub a) override { return a_->ann(u(a)); }
  std::int64_t colon(Sub n, Sub k) override { return a_->colon(u(n), u(k)); }
  std::int64_t zero_ideal() const override { return a_->zero_ideal(); }
  std::int64_t canonical(std::int64_t g) const override { return a_->canonical(g); }
  bool ideal_small(std::int64_t i, std::int64_t a) override { return a_->ideal_small(i, a); }
  Sub scaled_top(std::int64_t d) override { return static_cast<Sub>(lat().scaled(a_->top(), d)); }

  bool small(Sub a) override { return a_->small_set().test(u(a)); }
  bool sa(Sub a) override { return a_->sa_set().test(u(a)); }
  bool tsa(Sub n, Sub t, bool strict) override { return a_->tsa_set(u(t), strict).test(u(n)); }
  bool tsa_in(Sub n, Sub t, Sub k, bool strict) override { return a_->tsa_set_in(u(t), u(k), strict).test(u(n)); }
  bool essential(Sub a) override { return a_->essential_set().test(u(a)); }
  bool completely_irreducible(Sub a) override { return a_->completely_irreducible(u(a)); }
  Sub rad(Sub a) override { return static_cast<Sub>(a_->rad(u(a))); }
  Sub j_tsa(Sub t, bool strict) override { return static_cast<Sub>(a_->j_sa_t(u(t), strict)); }
  const ModuleClass& module_class() override { return a_->module_class(); }

  std::string text(Sub a) override { return to_string(lat().at(u(a))); }
  Sub parse(const std::string& text) override;
  Submodule submodule(Sub a) override { return lat().at(u(a)); }
  Sub handle(const Submodule& s) override { return static_cast<Sub>(lat().index_of(s)); }

  FiniteAnalysis& analysis() { return *a_; }

 private:
  static std::size_t u(Sub a) { return static_cast<std::size_t>(a); }
  const SubmoduleLattice& lat() const { return a_->lattice(); }
  std::shared_ptr<FiniteAnalysis> a_;
  std::vector<Sub> subs_;
};

/// The module Z over Z; every kZ with k in 0..bound is quantified.
class ZLineSpace final : public Space {
 public:
  explicit ZLineSpace(std::int64_t bound);

  const FGModule& module() const override { return m_; }
  const std::vector<Sub>& subs() const override { return subs_; }
  Sub zero() const override { return 0; }
  Sub top() const override { return 1; }
  std::vector<Sub> above(Sub a) const override;
  std::vector<Sub> below(Sub a) const override;
  std::vector<Sub> maximals() const override;

  bool leq(Sub a, Sub b) override { return b == 0 ? a == 0 : a % b == 0; }
  Sub join(Sub a, Sub b) override;
  Sub meet(Sub a, Sub b) override;

  std::int64_t ann(Sub a) override { return a == 0 ? 1 : 0; }
  std::int64_t colon(Sub n, Sub k) override;
  std::int64_t zero_ideal() const override { return 0; }
  std::int64_t canonical(std::int64_t g) const override { return g < 0 ? -g : g; }
  bool ideal_small(std::int64_t i, std::int64_t a) override;
  Sub scaled_top(std::int64_t d) override { return d < 0 ? -d : d; }

  bool small(Sub a) override { return a == 0; }
  bool sa(Sub a) override { return a != 1; }
  bool tsa(Sub n, Sub t, bool strict) override;
  bool tsa_in(Sub n, Sub t, Sub k, bool strict) override;
  bool essential(Sub a) override { return a != 0; }
  bool completely_irreducible(Sub a) override;
  Sub rad(Sub a) override;
  Sub j_tsa(Sub t, bool strict) override;
  const ModuleClass& module_class() override { return class_; }

  std::string text(Sub a) override;
  Sub parse(const std::string& text) override;
  Submodule submodule(Sub a) override { return z_line_submodule(m_, a); }
  Sub handle(const Submodule& s) override { return to_i64(s.z_generator()); }

 private:
  FGModule m_;
  std::int64_t bound_;
  std::vector<Sub> subs_;
  ModuleClass class_;
  std::map<std::tuple<Sub, Sub, bool>, bool> tsa_memo_;
  std::map<std::pair<std::int64_t, std::int64_t>, bool> small_memo_;
};

/// A space for any finite module or the module Z.
std::unique_ptr<Space> make_space(const FGModule& m, std::int64_t z_bound, const LatticeOptions& opts = {});
/// R as a module over itself.
std::unique_ptr<Space> ring_space(const RingDesc& r, std::int64_t z_bound);

}  // namespace sasmall
