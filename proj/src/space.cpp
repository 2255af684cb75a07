#include "sasmall/space.hpp"

#include <numeric>

#include "sasmall/syntax.hpp"

namespace sasmall {

bool Space::tsa_hollow(Sub t, bool strict) {
  for (Sub n : subs())
    if (!tsa(n, t, strict)) return false;
  return true;
}

bool Space::sa_hollow() {
  for (Sub n : subs())
    if (n != top() && !sa(n)) return false;
  return true;
}

// ---------------------------------------------------------------------------

FiniteSpace::FiniteSpace(std::shared_ptr<FiniteAnalysis> a) : a_(std::move(a)) {
  subs_.resize(a_->size());
  std::iota(subs_.begin(), subs_.end(), Sub{0});
}

namespace {

std::vector<Space::Sub> to_handles(const std::vector<std::size_t>& idx) { return {idx.begin(), idx.end()}; }

}  // namespace

std::vector<Space::Sub> FiniteSpace::above(Sub a) const { return to_handles(lat().up(u(a)).indices()); }

std::vector<Space::Sub> FiniteSpace::below(Sub a) const { return to_handles(lat().down(u(a)).indices()); }

std::vector<Space::Sub> FiniteSpace::maximals() const {
  std::vector<Sub> out;
  const std::size_t t = a_->top();
  for (std::size_t i = 0; i < t; ++i) {
    const auto c = lat().covers(i);
    if (c.size() == 1 && c.front() == t) out.push_back(static_cast<Sub>(i));
  }
  return out;
}

Space::Sub FiniteSpace::parse(const std::string& text) { return handle(parse_submodule(module(), text)); }

// ---------------------------------------------------------------------------

ZLineSpace::ZLineSpace(std::int64_t bound) : m_(z_line()), bound_(bound) {
  for (Sub k = 0; k <= bound; ++k) subs_.push_back(k);
  // Z over Z: a faithful prime multiplication module that is neither
  // comultiplication nor semisimple.
  class_.is_prime = true;
  class_.is_faithful = true;
  class_.is_multiplication = true;
  class_.is_cancellation = true;
}

std::vector<Space::Sub> ZLineSpace::above(Sub a) const {
  if (a == 0) return subs_;
  std::vector<Sub> out;
  for (const auto& d : divisors(Integer(a))) out.push_back(to_i64(d));
  return out;
}

std::vector<Space::Sub> ZLineSpace::below(Sub a) const {
  if (a == 0) return {0};
  std::vector<Sub> out{0};
  for (Sub k = a; k <= bound_; k += a) out.push_back(k);
  return out;
}

std::vector<Space::Sub> ZLineSpace::maximals() const {
  std::vector<Sub> out;
  for (Sub p = 2; p <= bound_; ++p)
    if (is_prime(Integer(p))) out.push_back(p);
  return out;
}

Space::Sub ZLineSpace::join(Sub a, Sub b) { return std::gcd(a, b); }

Space::Sub ZLineSpace::meet(Sub a, Sub b) { return (a == 0 || b == 0) ? 0 : std::lcm(a, b); }

std::int64_t ZLineSpace::colon(Sub n, Sub k) {
  if (k == 0) return 1;
  if (n == 0) return 0;
  return n / std::gcd(n, k);
}

bool ZLineSpace::ideal_small(std::int64_t i, std::int64_t a) {
  const auto key = std::make_pair(i, a);
  if (auto it = small_memo_.find(key); it != small_memo_.end()) return it->second;
  const bool v = is_small_ideal_in(Ideal(ring(), Integer(i)), Ideal(ring(), Integer(a)));
  small_memo_.emplace(key, v);
  return v;
}

bool ZLineSpace::tsa(Sub n, Sub t, bool strict) {
  const auto key = std::make_tuple(n, t, strict);
  if (auto it = tsa_memo_.find(key); it != tsa_memo_.end()) return it->second;
  PredicateOptions o;
  o.strict_nonzero_x = strict;
  const bool v = is_T_sa_small(submodule(n), submodule(t), o).holds();
  tsa_memo_.emplace(key, v);
  return v;
}

bool ZLineSpace::tsa_in(Sub n, Sub t, Sub k, bool strict) {
  // K = kZ is isomorphic to Z through x -> x / k, carrying annihilators and
  // colons along; K = 0 leaves only X = 0.
  if (k == 0) return strict;
  return tsa(n / k, t / k, strict);
}

bool ZLineSpace::completely_irreducible(Sub a) { return a == 1 || (a > 1 && is_prime_power(Integer(a))); }

Space::Sub ZLineSpace::rad(Sub a) {
  if (a == 0 || a == 1) return a;
  return to_i64(squarefree_kernel(Integer(a)));
}

Space::Sub ZLineSpace::j_tsa(Sub, bool) {
  fail(ErrorKind::InfiniteEnumeration, "the sum of T-sa-small submodules of Z is not enumerable");
}

std::string ZLineSpace::text(Sub a) { return to_string(submodule(a)); }

Space::Sub ZLineSpace::parse(const std::string& text) { return handle(parse_submodule(m_, text)); }

// ---------------------------------------------------------------------------

std::unique_ptr<Space> make_space(const FGModule& m, std::int64_t z_bound, const LatticeOptions& opts) {
  if (m.is_z_line()) return std::make_unique<ZLineSpace>(z_bound);
  return std::make_unique<FiniteSpace>(std::make_shared<FiniteAnalysis>(m, opts));
}

std::unique_ptr<Space> ring_space(const RingDesc& r, std::int64_t z_bound) {
  if (r.is_integers()) return std::make_unique<ZLineSpace>(z_bound);
  return make_space(module_make(r, {r.modulus()}), z_bound);
}

}  // namespace sasmall
