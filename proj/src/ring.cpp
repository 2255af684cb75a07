#include "sasmall/ring.hpp"

namespace sasmall {

namespace {

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) fail(ErrorKind::RingMismatch, to_string(a) + " vs " + to_string(b));
}

// a | b with the convention that 0 divides only 0.
bool divides(const Integer& a, const Integer& b) {
  if (a == 0) return b == 0;
  return b % a == 0;
}

}  // namespace

Ideal::Ideal(RingDesc ring, const Integer& gen) : ring_(std::move(ring)) {
  if (ring_.is_finite())
    gen_ = gcd_of(gen, ring_.modulus());
  else
    gen_ = abs_value(gen);
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(*this, other);
  return divides(gen_, other.gen_);
}

bool Ideal::contains_element(const Integer& r) const { return contains(Ideal(ring_, r)); }

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return Ideal(a.ring(), gcd_of(a.generator(), b.generator()));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return Ideal(a.ring(), lcm_of(a.generator(), b.generator()));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return Ideal(a.ring(), a.generator() * b.generator());
}

std::vector<Ideal> ideal_lattice(const RingDesc& ring) {
  if (ring.is_integers()) fail(ErrorKind::InfiniteLattice, "the ideal lattice of Z is infinite");
  std::vector<Ideal> out;
  for (const auto& d : divisors(ring.modulus())) out.emplace_back(ring, d);
  return out;
}

Ideal jacobson_radical_ring(const RingDesc& ring) {
  if (ring.is_integers()) return Ideal::zero(ring);
  return Ideal(ring, squarefree_kernel(ring.modulus()));
}

bool is_small_ideal_in(const Ideal& i, const Ideal& a) {
  require_same_ring(i, a);
  if (!a.contains(i)) return false;
  if (i.ring().is_integers()) return i.is_zero();
  for (const auto& l : ideal_lattice(i.ring())) {
    if (!a.contains(l) || l == a) continue;
    if (ideal_sum(i, l) == a) return false;
  }
  return true;
}

Ideal rad_ideal(const Ideal& i) {
  if (i.ring().is_integers()) return Ideal(i.ring(), squarefree_kernel(i.generator()));
  return Ideal(i.ring(), squarefree_kernel(i.generator()));
}

std::vector<Integer> ring_elements(const RingDesc& ring) {
  if (ring.is_integers()) fail(ErrorKind::InfiniteEnumeration, "Z has infinitely many elements");
  std::vector<Integer> out;
  for (Integer r = 0; r < ring.modulus(); ++r) out.push_back(r);
  return out;
}

std::vector<Ideal> maximal_ideals(const RingDesc& ring) {
  if (ring.is_integers()) fail(ErrorKind::InfiniteEnumeration, "Z has infinitely many maximal ideals");
  std::vector<Ideal> out;
  for (const auto& p : prime_factors(ring.modulus())) out.emplace_back(ring, p);
  return out;
}

RingPredicates ring_predicates(const RingDesc& ring) {
  RingPredicates p;
  if (ring.is_integers()) {
    p.is_domain = true;
    return p;
  }
  const Integer& n = ring.modulus();
  p.is_semisimple = is_squarefree(n);
  p.is_vnr = p.is_semisimple;
  p.is_local = is_prime_power(n);
  p.is_field = is_prime(n);
  p.is_simple = p.is_field;
  p.is_domain = p.is_field;
  std::vector<Integer> idem, units, zd;
  for (Integer x = 0; x < n; ++x) {
    if ((x * x) % n == x) idem.push_back(x);
    if (gcd_of(x, n) == 1) units.push_back(x);
    for (Integer y = 1; y < n; ++y)
      if ((x * y) % n == 0) {
        zd.push_back(x);
        break;
      }
  }
  p.idempotents = std::move(idem);
  p.units = std::move(units);
  p.zero_divisors = std::move(zd);
  return p;
}

std::string to_string(const RingDesc& ring) {
  return ring.is_integers() ? "Z" : "Z/" + ring.modulus().str();
}

std::string to_string(const Ideal& ideal) {
  const auto& g = ideal.generator();
  if (ideal.ring().is_integers()) {
    if (g == 0) return "0";
    if (g == 1) return "Z";
    return g.str() + "Z";
  }
  return "(" + g.str() + ") mod " + ideal.ring().modulus().str();
}

}  // namespace sasmall
