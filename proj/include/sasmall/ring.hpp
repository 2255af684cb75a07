#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sasmall/integer.hpp"

namespace sasmall {

/// Either Z/nZ (n >= 2) or the integers.
class RingDesc {
 public:
  static RingDesc integers() { return RingDesc(Integer(0)); }
  static RingDesc finite(const Integer& n) {
    if (n < 2) fail(ErrorKind::BadRing, "Z/n requires n >= 2, got " + n.str());
    return RingDesc(n);
  }

  bool is_finite() const { return modulus_ != 0; }
  bool is_integers() const { return modulus_ == 0; }
  /// n for Z/n, 0 for Z.
  const Integer& modulus() const { return modulus_; }

  friend bool operator==(const RingDesc&, const RingDesc&) = default;

 private:
  explicit RingDesc(Integer n) : modulus_(std::move(n)) {}
  Integer modulus_;
};

/// Principal ideal dR with a canonical nonnegative generator: a divisor of n
/// (n itself meaning zero) for Z/n, and |d| for Z.
class Ideal {
 public:
  Ideal(RingDesc ring, const Integer& gen);

  static Ideal unit(const RingDesc& r) { return Ideal(r, Integer(1)); }
  static Ideal zero(const RingDesc& r) { return Ideal(r, Integer(0)); }

  const RingDesc& ring() const { return ring_; }
  const Integer& generator() const { return gen_; }

  bool is_zero() const { return ring_.is_finite() ? gen_ == ring_.modulus() : gen_ == 0; }
  bool is_unit() const { return gen_ == 1; }
  /// True iff `other` is a subset of this ideal.
  bool contains(const Ideal& other) const;
  bool contains_element(const Integer& r) const;

  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  RingDesc ring_;
  Integer gen_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);

/// All ideals of Z/n, unit ideal first and zero ideal last.
std::vector<Ideal> ideal_lattice(const RingDesc& ring);

Ideal jacobson_radical_ring(const RingDesc& ring);

/// Smallness of I inside the R-module A: every ideal L <= A with I + L = A is
/// A itself. Returns false when I is not contained in A.
bool is_small_ideal_in(const Ideal& i, const Ideal& a);

Ideal rad_ideal(const Ideal& i);

struct RingPredicates {
  bool is_semisimple = false;
  bool is_simple = false;
  bool is_local = false;
  bool is_vnr = false;
  bool is_domain = false;
  bool is_field = false;
  // Present for finite rings only.
  std::optional<std::vector<Integer>> idempotents;
  std::optional<std::vector<Integer>> units;
  std::optional<std::vector<Integer>> zero_divisors;  // includes 0
};

RingPredicates ring_predicates(const RingDesc& ring);

/// Residues 0..n-1; InfiniteEnumeration for Z.
std::vector<Integer> ring_elements(const RingDesc& ring);

/// Maximal ideals of Z/n: (p) for every prime p | n.
std::vector<Ideal> maximal_ideals(const RingDesc& ring);

std::string to_string(const RingDesc& ring);
std::string to_string(const Ideal& ideal);

}  // namespace sasmall
