#include "sasmall/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace sasmall {

// ---------------------------------------------------------------------------
// Bitset

void Bitset::set_all() {
  std::fill(w_.begin(), w_.end(), ~std::uint64_t{0});
  if (n_ % 64 != 0 && !w_.empty()) w_.back() = (std::uint64_t{1} << (n_ % 64)) - 1;
}

bool Bitset::any() const {
  return std::any_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x != 0; });
}

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

std::size_t Bitset::first() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
  return n_;
}

std::size_t Bitset::last() const {
  for (std::size_t i = w_.size(); i-- > 0;)
    if (w_[i]) return i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(w_[i]));
  return n_;
}

std::size_t Bitset::first_common(const Bitset& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (const auto x = w_[i] & o.w_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(x));
  return n_;
}

std::size_t Bitset::last_common(const Bitset& o) const {
  for (std::size_t i = w_.size(); i-- > 0;)
    if (const auto x = w_[i] & o.w_[i]) return i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(x));
  return n_;
}

bool Bitset::subset_of(const Bitset& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

bool Bitset::intersects(const Bitset& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & o.w_[i]) return true;
  return false;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

std::vector<std::size_t> Bitset::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w_.size(); ++i)
    for (auto x = w_[i]; x; x &= x - 1) out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
  return out;
}

// ---------------------------------------------------------------------------
// SubmoduleLattice

SubmoduleLattice::SubmoduleLattice(const FGModule& m, const LatticeOptions& opts) : module_(m) {
  if (!m.is_finite()) fail(ErrorKind::InfiniteLattice, "submodule lattice of " + to_string(m) + " is infinite");
  if (m.order() > opts.max_order)
    fail(ErrorKind::BoundExceeded, "module order " + m.order().str() + " exceeds bound " + std::to_string(opts.max_order));
  k_ = m.rank();
  rel_ = convert_matrix<std::int64_t>(m.relations());
  module_order_ = to_i64(m.order());
  module_exponent_ = to_i64(m.exponent());
  diag_.resize(static_cast<std::size_t>(k_));
  stride_.resize(static_cast<std::size_t>(k_));
  for (Eigen::Index i = 0; i < k_; ++i) diag_[static_cast<std::size_t>(i)] = rel_(i, i);
  std::int64_t s = 1;
  for (Eigen::Index i = k_; i-- > 0;) {
    stride_[static_cast<std::size_t>(i)] = s;
    s *= diag_[static_cast<std::size_t>(i)];
  }

  const std::int64_t e = module_exponent_;
  auto canon = [&](const Mat& gens) -> Mat {
    if (k_ == 0) return Mat(0, 0);
    return hermite_normal_form_mod(stack_rows(gens, rel_), e);
  };

  // Breadth-first closure: cyclic seeds, then sums with seeds until stable.
  std::map<Key, Mat> found;
  std::vector<Key> queue;
  auto add = [&](const Mat& h) -> const Key& {
    Key key = key_of(h);
    auto [it, inserted] = found.emplace(key, h);
    if (inserted) {
      if (found.size() > opts.max_submodules)
        fail(ErrorKind::BoundExceeded, "more than " + std::to_string(opts.max_submodules) + " submodules");
      queue.push_back(key);
    }
    return it->first;
  };
  add(canon(Mat(0, k_)));
  std::vector<Key> seed_keys;
  std::map<Key, Mat> seeds;
  std::vector<Key> element_seed(static_cast<std::size_t>(module_order_));
  for (std::int64_t idx = 0; idx < module_order_; ++idx) {
    std::vector<std::int64_t> x(static_cast<std::size_t>(k_));
    std::int64_t rest = idx;
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = rest / stride_[i];
      rest %= stride_[i];
    }
    Mat row(1, k_);
    for (Eigen::Index j = 0; j < k_; ++j) row(0, j) = x[static_cast<std::size_t>(j)];
    const Mat h = canon(row);
    const Key& key = add(h);
    element_seed[static_cast<std::size_t>(idx)] = key;
    if (seeds.emplace(key, h).second) seed_keys.push_back(key);
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Mat cur = found.at(queue[qi]);
    for (const auto& sk : seed_keys) add(hermite_normal_form_mod(stack_rows(cur, seeds.at(sk)), e));
  }

  // Canonical order.
  struct Entry {
    std::int64_t order;
    Key key;
    Mat basis;
  };
  std::vector<Entry> entries;
  for (auto& [key, h] : found) {
    std::int64_t denom = 1;
    for (Eigen::Index i = 0; i < k_; ++i) denom *= h(i, i);
    entries.push_back({module_order_ / denom, key, h});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.order != b.order ? a.order < b.order : a.key < b.key;
  });

  const std::size_t n = entries.size();
  for (std::size_t i = 0; i < n; ++i) {
    index_.emplace(entries[i].key, i);
    bases_.push_back(entries[i].basis);
    order_.push_back(entries[i].order);
    subs_.emplace_back(module_, convert_matrix<Integer>(entries[i].basis), Submodule::Canonical{});
  }
  cyclic_of_.resize(static_cast<std::size_t>(module_order_));
  for (std::int64_t idx = 0; idx < module_order_; ++idx)
    cyclic_of_[static_cast<std::size_t>(idx)] = index_.at(element_seed[static_cast<std::size_t>(idx)]);

  // Element sets: sum c_i * B_i with 0 <= c_i < diag_i / B_ii is a transversal of L / R.
  for (std::size_t a = 0; a < n; ++a) {
    Bitset bits(static_cast<std::size_t>(module_order_));
    const Mat& b = bases_[a];
    std::vector<std::int64_t> range(static_cast<std::size_t>(k_)), c(static_cast<std::size_t>(k_), 0);
    for (Eigen::Index i = 0; i < k_; ++i) range[static_cast<std::size_t>(i)] = diag_[static_cast<std::size_t>(i)] / b(i, i);
    for (;;) {
      std::vector<std::int64_t> x(static_cast<std::size_t>(k_), 0);
      for (Eigen::Index i = 0; i < k_; ++i)
        for (Eigen::Index j = 0; j < k_; ++j) x[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(i)] * b(i, j);
      bits.set(static_cast<std::size_t>(index_of_vector(reduce(std::move(x)))));
      std::size_t p = 0;
      while (p < c.size() && ++c[p] == range[p]) c[p++] = 0;
      if (p == c.size()) break;
    }
    elems_.push_back(std::move(bits));
  }

  up_.assign(n, Bitset(n));
  down_.assign(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      if (order_[b] % order_[a] == 0 && elems_[a].subset_of(elems_[b])) {
        up_[a].set(b);
        down_[b].set(a);
      }

  // Exponent: lcm of the orders of the basis rows modulo R.
  for (std::size_t a = 0; a < n; ++a) {
    std::int64_t ex = 1;
    for (Eigen::Index i = 0; i < k_; ++i) {
      std::vector<std::int64_t> row(static_cast<std::size_t>(k_));
      for (Eigen::Index j = 0; j < k_; ++j) row[static_cast<std::size_t>(j)] = bases_[a](i, j);
      const std::int64_t idx = index_of_vector(reduce(row));
      std::int64_t ord = 1;
      while (element_scaled(idx, ord) != 0) ++ord;
      ex = std::lcm(ex, ord);
    }
    exponent_.push_back(ex);
  }
}

SubmoduleLattice::Key SubmoduleLattice::key_of(const Mat& hnf) const {
  Key key;
  key.reserve(static_cast<std::size_t>(hnf.size()));
  for (Eigen::Index i = 0; i < hnf.rows(); ++i)
    for (Eigen::Index j = 0; j < hnf.cols(); ++j) key.push_back(hnf(i, j));
  return key;
}

std::vector<std::int64_t> SubmoduleLattice::reduce(std::vector<std::int64_t> x) const {
  for (Eigen::Index i = 0; i < k_; ++i) {
    const std::int64_t q = floor_div(x[static_cast<std::size_t>(i)], rel_(i, i));
    if (q != 0)
      for (Eigen::Index j = i; j < k_; ++j) x[static_cast<std::size_t>(j)] -= q * rel_(i, j);
  }
  return x;
}

std::int64_t SubmoduleLattice::index_of_vector(const std::vector<std::int64_t>& x) const {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) idx += x[i] * stride_[i];
  return idx;
}

std::size_t SubmoduleLattice::lookup(const Mat& gens) const {
  const Mat h = k_ == 0 ? Mat(0, 0) : hermite_normal_form_mod(stack_rows(gens, rel_), module_exponent_);
  const auto it = index_.find(key_of(h));
  if (it == index_.end()) fail(ErrorKind::Internal, "submodule missing from lattice");
  return it->second;
}

std::size_t SubmoduleLattice::index_of(const Submodule& s) const {
  if (!(s.parent() == module_)) fail(ErrorKind::ParentMismatch, "submodule of another module");
  return lookup(convert_matrix<std::int64_t>(s.basis()));
}

std::size_t SubmoduleLattice::join(std::size_t a, std::size_t b) const { return up_[a].first_common(up_[b]); }

std::size_t SubmoduleLattice::meet(std::size_t a, std::size_t b) const { return down_[a].last_common(down_[b]); }

std::size_t SubmoduleLattice::scaled(std::size_t a, std::int64_t r) const {
  return lookup(Mat(bases_[a] * floor_mod(r, std::max<std::int64_t>(module_exponent_, 1))));
}

std::size_t SubmoduleLattice::killed_by(std::int64_t d) const {
  for (std::size_t a = subs_.size(); a-- > 0;)
    if (d == 0 || d % exponent_[a] == 0) return a;
  return 0;
}

std::int64_t SubmoduleLattice::colon_exponent(std::size_t n, std::size_t k) const {
  for (std::int64_t t = 1; t <= module_exponent_; ++t)
    if (module_exponent_ % t == 0 && leq(scaled(k, t), n)) return t;
  fail(ErrorKind::Internal, "colon exponent not found");
}

std::vector<std::size_t> SubmoduleLattice::covers(std::size_t a) const {
  std::vector<std::size_t> out;
  for (std::size_t b : up_[a].indices())
    if (b != a && (up_[a] & down_[b]).count() == 2) out.push_back(b);
  return out;
}

Element SubmoduleLattice::element_at(std::int64_t idx) const {
  Element e(k_);
  for (Eigen::Index i = 0; i < k_; ++i) {
    e(i) = idx / stride_[static_cast<std::size_t>(i)];
    idx %= stride_[static_cast<std::size_t>(i)];
  }
  return e;
}

std::int64_t SubmoduleLattice::element_index(const Element& e) const {
  if (e.cols() != k_) fail(ErrorKind::ElementOutOfRange, "element has the wrong length");
  std::vector<std::int64_t> x(static_cast<std::size_t>(k_));
  for (Eigen::Index i = 0; i < k_; ++i) x[static_cast<std::size_t>(i)] = to_i64(floor_mod(Integer(e(i)), Integer(module_exponent_)));
  return index_of_vector(reduce(std::move(x)));
}

std::int64_t SubmoduleLattice::element_scaled(std::int64_t idx, std::int64_t r) const {
  std::vector<std::int64_t> x(static_cast<std::size_t>(k_));
  r = floor_mod(r, std::max<std::int64_t>(module_exponent_, 1));
  for (Eigen::Index i = 0; i < k_; ++i) {
    x[static_cast<std::size_t>(i)] = (idx / stride_[static_cast<std::size_t>(i)]) * r;
    idx %= stride_[static_cast<std::size_t>(i)];
  }
  for (auto& v : x) v %= std::max<std::int64_t>(module_exponent_, 1);
  return index_of_vector(reduce(std::move(x)));
}

std::size_t SubmoduleLattice::cyclic(std::int64_t idx) const { return cyclic_of_[static_cast<std::size_t>(idx)]; }

std::shared_ptr<const SubmoduleLattice> enumerate_submodules(const FGModule& m, const LatticeOptions& opts) {
  return std::make_shared<const SubmoduleLattice>(m, opts);
}

std::string lattice_to_dot(const SubmoduleLattice& l) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < l.size(); ++i) os << "  n" << i << " [label=\"" << to_string(l.at(i)) << "\"];\n";
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j : l.covers(i)) os << "  n" << i << " -> n" << j << ";\n";
  os << "}\n";
  return os.str();
}

std::string lattice_to_json(const SubmoduleLattice& l) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["module"] = to_string(l.module());
  j["ring"] = to_string(l.module().ring());
  auto subs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < l.size(); ++i)
    subs.push_back({{"id", i}, {"submodule", to_string(l.at(i))}, {"order", l.order_of(i)}});
  j["submodules"] = subs;
  auto covers = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t c : l.covers(i)) covers.push_back({i, c});
  j["covers"] = covers;
  return j.dump();
}

}  // namespace sasmall
