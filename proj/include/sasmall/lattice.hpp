#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sasmall/module.hpp"

namespace sasmall {

/// Fixed-size bitset with first/last set-bit queries.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
  void set_all();

  bool any() const;
  std::size_t count() const;
  /// Index of the lowest set bit, or size() when empty.
  std::size_t first() const;
  /// Index of the highest set bit, or size() when empty.
  std::size_t last() const;
  /// Lowest set bit of (*this & other), or size().
  std::size_t first_common(const Bitset& other) const;
  std::size_t last_common(const Bitset& other) const;
  bool subset_of(const Bitset& other) const;
  bool intersects(const Bitset& other) const;

  Bitset& operator&=(const Bitset& o);
  Bitset& operator|=(const Bitset& o);
  Bitset& subtract(const Bitset& o);
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  std::vector<std::size_t> indices() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct LatticeOptions {
  std::int64_t max_order = 4096;
  std::size_t max_submodules = 200000;
};

/// Every submodule of a finite module, in canonical order: by order, then by
/// the row-major Hermite basis. Index 0 is the zero submodule and the last
/// index is the whole module.
class SubmoduleLattice {
 public:
  explicit SubmoduleLattice(const FGModule& m, const LatticeOptions& opts = {});

  const FGModule& module() const { return module_; }
  std::size_t size() const { return subs_.size(); }
  const Submodule& at(std::size_t i) const { return subs_[i]; }
  const std::vector<Submodule>& all() const { return subs_; }
  std::size_t zero() const { return 0; }
  std::size_t top() const { return subs_.size() - 1; }
  /// Position of a submodule of module(); Internal error if absent.
  std::size_t index_of(const Submodule& s) const;

  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  std::size_t join(std::size_t a, std::size_t b) const;
  std::size_t meet(std::size_t a, std::size_t b) const;
  const Bitset& up(std::size_t a) const { return up_[a]; }
  const Bitset& down(std::size_t a) const { return down_[a]; }
  const Bitset& elements(std::size_t a) const { return elems_[a]; }
  std::int64_t order_of(std::size_t a) const { return order_[a]; }
  /// Exponent of the submodule: Ann(X) is generated by it.
  std::int64_t exponent_of(std::size_t a) const { return exponent_[a]; }
  /// Index of r * X.
  std::size_t scaled(std::size_t a, std::int64_t r) const;
  /// The largest submodule killed by d.
  std::size_t killed_by(std::int64_t d) const;
  /// Smallest t > 0 with t * K inside N, i.e. the generator of (N : K).
  std::int64_t colon_exponent(std::size_t n, std::size_t k) const;
  /// Upper covers of a in the Hasse diagram.
  std::vector<std::size_t> covers(std::size_t a) const;

  std::int64_t element_count() const { return module_order_; }
  std::int64_t exponent() const { return module_exponent_; }
  Element element_at(std::int64_t idx) const;
  std::int64_t element_index(const Element& e) const;
  /// Index of r * element.
  std::int64_t element_scaled(std::int64_t idx, std::int64_t r) const;
  /// Cyclic submodule generated by an element index.
  std::size_t cyclic(std::int64_t idx) const;

 private:
  using Key = std::vector<std::int64_t>;
  using Mat = Matrix<std::int64_t>;

  Key key_of(const Mat& hnf) const;
  std::vector<std::int64_t> reduce(std::vector<std::int64_t> x) const;
  std::int64_t index_of_vector(const std::vector<std::int64_t>& x) const;
  std::size_t lookup(const Mat& gens) const;

  FGModule module_;
  Eigen::Index k_ = 0;
  Mat rel_;
  std::vector<std::int64_t> diag_;
  std::vector<std::int64_t> stride_;
  std::int64_t module_order_ = 1;
  std::int64_t module_exponent_ = 1;

  std::vector<Submodule> subs_;
  std::vector<Mat> bases_;
  std::map<Key, std::size_t> index_;
  std::vector<Bitset> elems_, up_, down_;
  std::vector<std::int64_t> order_, exponent_;
  std::vector<std::size_t> cyclic_of_;
};

/// Shared, immutable lattice.
std::shared_ptr<const SubmoduleLattice> enumerate_submodules(const FGModule& m, const LatticeOptions& opts = {});

std::string lattice_to_dot(const SubmoduleLattice& l);
std::string lattice_to_json(const SubmoduleLattice& l);

}  // namespace sasmall
