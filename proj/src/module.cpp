#include "sasmall/module.hpp"

#include <sstream>

namespace sasmall {

std::string_view to_string(ModuleBackend b) {
  switch (b) {
    case ModuleBackend::finite: return "finite";
    case ModuleBackend::z_line: return "z_line";
    case ModuleBackend::z_presented: return "z_presented";
  }
  return "unknown";
}

FGModule::FGModule() : FGModule(module_from_relations(RingDesc::integers(), IntMatrix(0, 0))) {}

bool operator==(const FGModule& a, const FGModule& b) {
  if (a.d_ == b.d_) return true;
  return a.ring() == b.ring() && a.d_->scale == b.d_->scale && same_matrix(a.relations(), b.relations());
}

FGModule module_from_relations(const RingDesc& ring, const IntMatrix& relations, std::vector<Integer> scale) {
  const Eigen::Index k = relations.cols();
  if (scale.empty()) scale.assign(static_cast<std::size_t>(k), Integer(1));
  if (static_cast<Eigen::Index>(scale.size()) != k) fail(ErrorKind::BadFactors, "scale length mismatch");
  for (const auto& s : scale)
    if (s < 1) fail(ErrorKind::BadFactors, "coordinate scale must be positive");

  auto d = std::make_shared<FGModule::Data>();
  d->ring = ring;
  d->relations = hermite_normal_form(relations);
  d->scale = std::move(scale);
  const Eigen::Index r = d->relations.rows();
  d->free_rank = static_cast<std::size_t>(k - r);
  Integer order = 1, exponent = 1;
  for (const auto& x : smith_diagonal(d->relations)) {
    order *= x;
    exponent = lcm_of(exponent, x);
    if (x != 1) d->invariant_factors.push_back(x);
  }
  if (d->free_rank > 0) {
    order = 0;
    exponent = 0;
  }
  d->order = order;
  d->exponent = exponent;

  if (ring.is_finite()) {
    if (d->free_rank > 0 || ring.modulus() % exponent != 0)
      fail(ErrorKind::BadFactors, "module is not annihilated by " + ring.modulus().str());
    for (std::size_t i = 0; i < d->scale.size(); ++i)
      if (d->scale[i] != 1) fail(ErrorKind::BadFactors, "scaled coordinates need the ring Z");
  }
  if (d->free_rank == 0)
    d->backend = ModuleBackend::finite;
  else if (k == 1 && d->scale[0] == 1)
    d->backend = ModuleBackend::z_line;
  else
    d->backend = ModuleBackend::z_presented;
  return FGModule(std::move(d));
}

FGModule module_make(const RingDesc& ring, const std::vector<Integer>& factors) {
  const auto k = static_cast<Eigen::Index>(factors.size());
  IntMatrix rel = IntMatrix::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const Integer& f = factors[static_cast<std::size_t>(i)];
    if (f < 0 || (f == 0 && ring.is_finite()))
      fail(ErrorKind::BadFactors, "invalid invariant factor " + f.str());
    if (ring.is_finite() && ring.modulus() % f != 0)
      fail(ErrorKind::BadFactors, f.str() + " does not divide " + ring.modulus().str());
    rel(i, i) = f;
  }
  return module_from_relations(ring, rel);
}

FGModule z_line() { return module_make(RingDesc::integers(), {Integer(0)}); }

FGModule with_ring(const FGModule& m, const RingDesc& ring) {
  return module_from_relations(ring, m.relations(), m.scale());
}

Element element_from_user(const FGModule& m, const std::vector<Integer>& coords) {
  if (static_cast<Eigen::Index>(coords.size()) != m.rank())
    fail(ErrorKind::ElementOutOfRange, "element has " + std::to_string(coords.size()) + " coordinates, module has " +
                                           std::to_string(m.rank()));
  Element e(m.rank());
  for (Eigen::Index i = 0; i < m.rank(); ++i) {
    const Integer& s = m.scale()[static_cast<std::size_t>(i)];
    const Integer& c = coords[static_cast<std::size_t>(i)];
    if (c % s != 0)
      fail(ErrorKind::ElementOutOfRange, "coordinate " + c.str() + " is not a multiple of " + s.str());
    e(i) = c / s;
  }
  return e;
}

std::vector<Integer> element_to_user(const FGModule& m, const Element& e) {
  std::vector<Integer> out;
  for (Eigen::Index i = 0; i < e.cols(); ++i) out.push_back(e(i) * m.scale()[static_cast<std::size_t>(i)]);
  return out;
}

Element reduce_element(const FGModule& m, Element e) {
  const IntMatrix& r = m.relations();
  const auto piv = pivot_columns(r);
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    const Eigen::Index c = piv[static_cast<std::size_t>(i)];
    const Integer q = floor_div(Integer(e(c)), Integer(r(i, c)));
    if (q != 0) e -= q * r.row(i);
  }
  return e;
}

namespace {

IntMatrix canonical_basis(const FGModule& m, const IntMatrix& gens) {
  if (gens.cols() != m.rank()) fail(ErrorKind::ElementOutOfRange, "generator width does not match module rank");
  const IntMatrix all = stack_rows(gens, m.relations());
  if (m.is_finite()) {
    if (m.rank() == 0) return IntMatrix(0, 0);
    return hermite_normal_form_mod(all, m.exponent());
  }
  return hermite_normal_form(all);
}

void require_same_parent(const Submodule& a, const Submodule& b) {
  if (!(a.parent() == b.parent())) fail(ErrorKind::ParentMismatch, "submodules live in different modules");
}

}  // namespace

Submodule::Submodule(FGModule parent, const IntMatrix& gens)
    : parent_(std::move(parent)), basis_(canonical_basis(parent_, gens)) {}

bool Submodule::is_zero() const { return same_matrix(basis_, parent_.relations()); }

bool Submodule::is_full() const {
  const Eigen::Index k = parent_.rank();
  return same_matrix(basis_, IntMatrix(IntMatrix::Identity(k, k)));
}

Integer Submodule::order() const {
  const IntMatrix& r = parent_.relations();
  if (r.rows() != basis_.rows()) return Integer(0);
  Integer num = 1, den = 1;
  const auto pr = pivot_columns(r);
  const auto pb = pivot_columns(basis_);
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    num *= r(i, pr[static_cast<std::size_t>(i)]);
    den *= basis_(i, pb[static_cast<std::size_t>(i)]);
  }
  return num / den;
}

Integer Submodule::z_generator() const {
  if (!parent_.is_z_line()) fail(ErrorKind::Internal, "z_generator on a non z_line module");
  return basis_.rows() == 0 ? Integer(0) : Integer(basis_(0, 0));
}

std::vector<Element> Submodule::generators() const {
  std::vector<Element> out;
  for (Eigen::Index i = 0; i < basis_.rows(); ++i) {
    Element e = reduce_element(parent_, Element(basis_.row(i)));
    bool nonzero = false;
    for (Eigen::Index j = 0; j < e.cols(); ++j) nonzero = nonzero || e(j) != 0;
    if (nonzero) out.push_back(std::move(e));
  }
  return out;
}

Submodule zero_submodule(const FGModule& m) { return Submodule(m, m.relations(), Submodule::Canonical{}); }

Submodule full_submodule(const FGModule& m) {
  return Submodule(m, IntMatrix(IntMatrix::Identity(m.rank(), m.rank())), Submodule::Canonical{});
}

Submodule submodule_from_generators(const FGModule& m, const std::vector<Element>& gens) {
  IntMatrix g(static_cast<Eigen::Index>(gens.size()), m.rank());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].cols() != m.rank()) fail(ErrorKind::ElementOutOfRange, "generator has the wrong length");
    g.row(static_cast<Eigen::Index>(i)) = gens[i];
  }
  return Submodule(m, g);
}

Submodule z_line_submodule(const FGModule& m, const Integer& k) {
  if (!m.is_z_line()) fail(ErrorKind::Internal, "z_line_submodule needs the module Z");
  IntMatrix g(1, 1);
  g(0, 0) = k;
  return Submodule(m, g);
}

Submodule sub_sum(const Submodule& n, const Submodule& k) {
  require_same_parent(n, k);
  return Submodule(n.parent(), stack_rows(n.basis(), k.basis()));
}

Submodule sub_intersect(const Submodule& n, const Submodule& k) {
  require_same_parent(n, k);
  return Submodule(n.parent(), lattice_intersection(n.basis(), k.basis()));
}

bool sub_contains(const Submodule& n, const Submodule& k) {
  require_same_parent(n, k);
  for (Eigen::Index i = 0; i < k.basis().rows(); ++i)
    if (!lattice_contains(n.basis(), IntRow(k.basis().row(i)))) return false;
  return true;
}

bool sub_equals(const Submodule& n, const Submodule& k) {
  require_same_parent(n, k);
  return n == k;
}

bool sub_membership(const Submodule& n, const Element& m) {
  if (m.cols() != n.parent().rank()) fail(ErrorKind::ElementOutOfRange, "element has the wrong length");
  return lattice_contains(n.basis(), m);
}

Submodule sub_scale(const Submodule& n, const Integer& r) {
  return Submodule(n.parent(), IntMatrix(n.basis() * r));
}

Ideal annihilator(const Submodule& x) {
  return Ideal(x.parent().ring(), lattice_exponent(x.basis(), x.parent().relations()));
}

Ideal module_annihilator(const FGModule& m) { return Ideal(m.ring(), m.exponent()); }

Ideal colon(const Submodule& n, const Submodule& k) {
  require_same_parent(n, k);
  return Ideal(n.parent().ring(), lattice_exponent(sub_sum(n, k).basis(), n.basis()));
}

Submodule annihilator_in(const FGModule& m, const Ideal& i) {
  if (!(i.ring() == m.ring())) fail(ErrorKind::RingMismatch, "ideal and module over different rings");
  const Integer d = i.is_zero() ? Integer(0) : i.generator();
  if (d == 0) return full_submodule(m);
  const Eigen::Index k = m.rank();
  const IntMatrix mult = IntMatrix(IntMatrix::Identity(k, k)) * d;
  return Submodule(m, lattice_preimage(mult, m.relations()));
}

Submodule ideal_times(const Ideal& i, const FGModule& m) {
  if (!(i.ring() == m.ring())) fail(ErrorKind::RingMismatch, "ideal and module over different rings");
  return sub_scale(full_submodule(m), i.generator());
}

std::vector<Submodule> z_line_divisor_candidates(const Submodule& n, const Submodule& t) {
  require_same_parent(n, t);
  if (!n.parent().is_z_line()) fail(ErrorKind::Internal, "divisor candidates need the module Z");
  const Integer tg = t.z_generator();
  if (tg == 0) fail(ErrorKind::ZeroT, "T = 0 has no divisor case split");
  const Integer k = n.z_generator();
  std::vector<Submodule> out;
  for (const auto& s : divisors(k != 0 ? k : tg)) out.push_back(z_line_submodule(n.parent(), s));
  out.push_back(zero_submodule(n.parent()));
  return out;
}

namespace {

// Diagonal relations let a module print as a product of cyclic factors.
bool relations_are_diagonal(const FGModule& m, std::vector<Integer>& factors) {
  const IntMatrix& r = m.relations();
  factors.assign(static_cast<std::size_t>(m.rank()), Integer(0));
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    Eigen::Index nz = -1;
    for (Eigen::Index j = 0; j < r.cols(); ++j) {
      if (r(i, j) == 0) continue;
      if (nz >= 0) return false;
      nz = j;
    }
    factors[static_cast<std::size_t>(nz)] = r(i, nz);
  }
  return true;
}

std::string matrix_text(const IntMatrix& a) {
  std::ostringstream os;
  os << '[';
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (i) os << ',';
    os << '[';
    for (Eigen::Index j = 0; j < a.cols(); ++j) os << (j ? "," : "") << a(i, j).str();
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace

std::string to_string(const FGModule& m) {
  if (m.rank() == 0) return "0";
  if (m.is_z_line()) return "Z";
  std::vector<Integer> factors;
  if (!relations_are_diagonal(m, factors)) return "presented" + matrix_text(m.relations());
  std::string out = m.is_finite() ? "" : "presented:";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " x ";
    const Integer& s = m.scale()[i];
    if (factors[i] == 0)
      out += s == 1 ? std::string("Z") : s.str() + "Z";
    else
      out += "Z/" + factors[i].str();
  }
  return out;
}

std::string element_to_string(const FGModule& m, const Element& e) {
  const auto u = element_to_user(m, e);
  if (u.size() == 1) return u[0].str();
  std::string out = "(";
  for (std::size_t i = 0; i < u.size(); ++i) out += (i ? "," : "") + u[i].str();
  return out + ")";
}

std::string to_string(const Submodule& s) {
  if (s.is_zero()) return "0";
  if (s.parent().is_z_line()) {
    const Integer k = s.z_generator();
    return k == 1 ? std::string("Z") : k.str() + "Z";
  }
  std::string out = "<";
  bool first = true;
  for (const auto& g : s.generators()) {
    if (!first) out += ", ";
    first = false;
    out += element_to_string(s.parent(), g);
  }
  return out + ">";
}

}  // namespace sasmall
