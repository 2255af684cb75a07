#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sasmall/normal_form.hpp"
#include "sasmall/ring.hpp"

namespace sasmall {

enum class ModuleBackend { finite, z_line, z_presented };

std::string_view to_string(ModuleBackend b);

/// A finitely generated module presented as Z^k / R, where R is the row
/// lattice of `relations` (kept in Hermite form). Coordinates are the ones
/// the module was built with; `scale` records a per-coordinate display factor
/// so that e.g. 2Z x Z/8 stores (a, b) as (a/2, b).
class FGModule {
 public:
  FGModule();  // the zero module over Z

  const RingDesc& ring() const { return d_->ring; }
  ModuleBackend backend() const { return d_->backend; }
  bool is_finite() const { return d_->backend == ModuleBackend::finite; }
  bool is_z_line() const { return d_->backend == ModuleBackend::z_line; }
  bool is_zero() const { return is_finite() && d_->order == 1; }

  /// Number of coordinates k.
  Eigen::Index rank() const { return d_->relations.cols(); }
  const IntMatrix& relations() const { return d_->relations; }
  const std::vector<Integer>& scale() const { return d_->scale; }
  /// Nonunit Smith invariants of the torsion part, d1 | d2 | ...
  const std::vector<Integer>& invariant_factors() const { return d_->invariant_factors; }
  std::size_t free_rank() const { return d_->free_rank; }
  /// |M|, or 0 when infinite.
  const Integer& order() const { return d_->order; }
  /// Least e > 0 with eM = 0, or 0 when none.
  const Integer& exponent() const { return d_->exponent; }

  friend bool operator==(const FGModule& a, const FGModule& b);

 private:
  struct Data {
    RingDesc ring = RingDesc::integers();
    IntMatrix relations;
    std::vector<Integer> scale;
    std::vector<Integer> invariant_factors;
    std::size_t free_rank = 0;
    Integer order;
    Integer exponent;
    ModuleBackend backend = ModuleBackend::finite;
  };
  explicit FGModule(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;

  friend FGModule module_from_relations(const RingDesc&, const IntMatrix&, std::vector<Integer>);
};

/// Z^k / rowspan(relations). `scale` defaults to all ones.
FGModule module_from_relations(const RingDesc& ring, const IntMatrix& relations,
                               std::vector<Integer> scale = {});

/// Direct product of cyclic factors Z/d; a factor 0 stands for a free copy of Z.
/// The single factor {0} over Z gives the z_line backend.
FGModule module_make(const RingDesc& ring, const std::vector<Integer>& factors);

/// The module Z over Z.
FGModule z_line();

/// The same abelian group viewed over another ring; BadFactors unless the new
/// ring annihilates it.
FGModule with_ring(const FGModule& m, const RingDesc& ring);

/// Element of M in internal coordinates.
using Element = IntRow;

/// User coordinates (scaled) to internal ones; ElementOutOfRange if a
/// coordinate is not a multiple of its scale or the length is wrong.
Element element_from_user(const FGModule& m, const std::vector<Integer>& coords);
std::vector<Integer> element_to_user(const FGModule& m, const Element& e);
/// Canonical representative modulo the relation lattice.
Element reduce_element(const FGModule& m, Element e);

/// A submodule L/R of M = Z^k/R stored as the Hermite basis of L (which
/// contains R). Equal canonical bases mean equal submodules.
class Submodule {
 public:
  struct Canonical {};
  /// Canonicalizes: the span of `gens` plus the relations, in Hermite form.
  Submodule(FGModule parent, const IntMatrix& gens);
  /// Trusts that `basis` already is the canonical Hermite basis.
  Submodule(FGModule parent, IntMatrix basis, Canonical) : parent_(std::move(parent)), basis_(std::move(basis)) {}

  const FGModule& parent() const { return parent_; }
  const IntMatrix& basis() const { return basis_; }

  bool is_zero() const;
  bool is_full() const;
  /// |L/R|, 0 when infinite.
  Integer order() const;
  /// For the z_line backend: the k with this = kZ.
  Integer z_generator() const;
  /// Nonzero canonical generators modulo R (internal coordinates).
  std::vector<Element> generators() const;

  friend bool operator==(const Submodule& a, const Submodule& b) {
    return same_matrix(a.basis_, b.basis_) && a.parent_ == b.parent_;
  }

 private:
  FGModule parent_;
  IntMatrix basis_;
};

Submodule zero_submodule(const FGModule& m);
Submodule full_submodule(const FGModule& m);
Submodule submodule_from_generators(const FGModule& m, const std::vector<Element>& gens);
/// kZ inside the z_line module.
Submodule z_line_submodule(const FGModule& m, const Integer& k);

Submodule sub_sum(const Submodule& n, const Submodule& k);
Submodule sub_intersect(const Submodule& n, const Submodule& k);
/// True iff k is a subset of n.
bool sub_contains(const Submodule& n, const Submodule& k);
bool sub_equals(const Submodule& n, const Submodule& k);
bool sub_membership(const Submodule& n, const Element& m);
/// rN for an integer r.
Submodule sub_scale(const Submodule& n, const Integer& r);

/// Ann_R(X) as an ideal of the parent ring.
Ideal annihilator(const Submodule& x);
Ideal module_annihilator(const FGModule& m);
/// (N : K) = {r : rK in N}.
Ideal colon(const Submodule& n, const Submodule& k);
/// Ann_M(I) = {m : Im = 0}.
Submodule annihilator_in(const FGModule& m, const Ideal& i);
/// IM.
Submodule ideal_times(const Ideal& i, const FGModule& m);

/// Sub-bounds used in the z_line case split: every sZ that can change the
/// verdict of "T in N + sZ implies Ann(sZ) small in (T:M)" is equivalent to one
/// of the returned representatives (divisors of k, or of t when k = 0, and 0).
std::vector<Submodule> z_line_divisor_candidates(const Submodule& n, const Submodule& t);

std::string to_string(const FGModule& m);
std::string to_string(const Submodule& s);
std::string element_to_string(const FGModule& m, const Element& e);

}  // namespace sasmall
