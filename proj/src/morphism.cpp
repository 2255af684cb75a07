#include "sasmall/morphism.hpp"

#include <set>

namespace sasmall {

namespace {

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out = IntMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  if (a.rows() > 0 && a.cols() > 0) out.topLeftCorner(a.rows(), a.cols()) = a;
  if (b.rows() > 0 && b.cols() > 0) out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

void require_parent(const Submodule& s, const FGModule& m, const char* what) {
  if (!(s.parent() == m)) fail(ErrorKind::ParentMismatch, std::string(what) + " is not a submodule of the expected module");
}

}  // namespace

Element Hom::apply(const Element& x) const {
  if (x.cols() != source_.rank()) fail(ErrorKind::ElementOutOfRange, "element has the wrong length");
  return reduce_element(target_, Element(x * matrix_));
}

Hom hom_make(const FGModule& source, const FGModule& target, const IntMatrix& matrix) {
  if (!(source.ring() == target.ring())) fail(ErrorKind::RingMismatch, "maps need a common ring");
  if (matrix.rows() != source.rank() || matrix.cols() != target.rank())
    fail(ErrorKind::NotWellDefined, "matrix is " + std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) +
                                        ", expected " + std::to_string(source.rank()) + "x" + std::to_string(target.rank()));
  IntMatrix a = matrix;
  for (Eigen::Index i = 0; i < a.rows(); ++i) a.row(i) = reduce_element(target, Element(a.row(i)));
  const IntMatrix& rel = source.relations();
  for (Eigen::Index i = 0; i < rel.rows(); ++i)
    if (!lattice_contains(target.relations(), IntRow(rel.row(i) * a)))
      fail(ErrorKind::NotWellDefined, "relation " + std::to_string(i) + " of " + to_string(source) +
                                          " does not map to zero in " + to_string(target));
  Hom f(source, target, std::move(a));
  f.epi_ = image(f).is_full();
  f.mono_ = kernel(f).is_zero();
  return f;
}

Hom identity_hom(const FGModule& m) { return hom_make(m, m, IntMatrix::Identity(m.rank(), m.rank())); }

Submodule kernel(const Hom& f) {
  return Submodule(f.source(), lattice_preimage(f.matrix(), f.target().relations()));
}

Submodule image(const Hom& f) { return Submodule(f.target(), f.matrix()); }

Submodule preimage(const Hom& f, const Submodule& y) {
  require_parent(y, f.target(), "preimage argument");
  return Submodule(f.source(), lattice_preimage(f.matrix(), y.basis()));
}

Submodule push(const Hom& f, const Submodule& x) {
  require_parent(x, f.source(), "pushed submodule");
  return Submodule(f.target(), IntMatrix(x.basis() * f.matrix()));
}

Hom compose(const Hom& g, const Hom& f) {
  if (!(f.target() == g.source())) fail(ErrorKind::ParentMismatch, "maps do not compose");
  return hom_make(f.source(), g.target(), IntMatrix(f.matrix() * g.matrix()));
}

Quotient quotient_module(const FGModule& m, const Submodule& n) {
  require_parent(n, m, "quotient denominator");
  const IntMatrix& l = n.basis();
  const Eigen::Index k = m.rank();
  const auto snf = smith_normal_form(l);
  std::vector<Eigen::Index> kept;
  std::vector<Integer> diag;
  for (Eigen::Index j = 0; j < k; ++j) {
    const Integer d = j < snf.d.rows() ? Integer(snf.d(j, j)) : Integer(0);
    if (d == 1) continue;
    kept.push_back(j);
    diag.push_back(d);
  }
  const auto q = static_cast<Eigen::Index>(kept.size());
  IntMatrix rel = IntMatrix::Zero(q, q);
  IntMatrix proj(k, q);
  for (Eigen::Index c = 0; c < q; ++c) {
    rel(c, c) = diag[static_cast<std::size_t>(c)];
    proj.col(c) = snf.v.col(kept[static_cast<std::size_t>(c)]);
  }
  FGModule qm = module_from_relations(m.ring(), rel);
  Hom p = hom_make(m, qm, proj);
  if (!p.is_epi() || !(kernel(p) == n)) fail(ErrorKind::Internal, "quotient projection has the wrong kernel");
  return {std::move(qm), std::move(p)};
}

Hom quotient_map(const FGModule& m, const Submodule& k) { return quotient_module(m, k).projection; }

DirectSum direct_sum(const FGModule& a, const FGModule& b) {
  if (!(a.ring() == b.ring())) fail(ErrorKind::RingMismatch, "direct sum needs a common ring");
  std::vector<Integer> scale = a.scale();
  scale.insert(scale.end(), b.scale().begin(), b.scale().end());
  FGModule d = module_from_relations(a.ring(), block_diagonal(a.relations(), b.relations()), scale);
  const Eigen::Index ka = a.rank(), kb = b.rank();
  IntMatrix i1 = IntMatrix::Zero(ka, ka + kb), i2 = IntMatrix::Zero(kb, ka + kb);
  IntMatrix p1 = IntMatrix::Zero(ka + kb, ka), p2 = IntMatrix::Zero(ka + kb, kb);
  for (Eigen::Index i = 0; i < ka; ++i) i1(i, i) = p1(i, i) = 1;
  for (Eigen::Index i = 0; i < kb; ++i) i2(i, ka + i) = p2(ka + i, i) = 1;
  Hom in1 = hom_make(a, d, i1), in2 = hom_make(b, d, i2);
  Hom pr1 = hom_make(d, a, p1), pr2 = hom_make(d, b, p2);
  return {d, in1, in2, pr1, pr2};
}

Submodule sub_direct_sum(const Submodule& n1, const Submodule& n2) {
  const FGModule d = direct_sum(n1.parent(), n2.parent()).module;
  return Submodule(d, block_diagonal(n1.basis(), n2.basis()));
}

FGModule tensor_with_free(const FGModule& m, int k) {
  if (k < 1) fail(ErrorKind::BadFactors, "free rank must be at least 1");
  FGModule out = m;
  for (int i = 1; i < k; ++i) out = direct_sum(out, m).module;
  return out;
}

Submodule tensor_submodule(const Submodule& n, int k) {
  if (k < 1) fail(ErrorKind::BadFactors, "free rank must be at least 1");
  Submodule out = n;
  for (int i = 1; i < k; ++i) out = sub_direct_sum(out, n);
  return out;
}

Localization localize(const FGModule& m, const std::vector<Integer>& s_gens) {
  if (!m.ring().is_finite()) fail(ErrorKind::NotMCS, "localization is supported over Z/n only");
  if (!m.is_finite()) fail(ErrorKind::NotMCS, "localization needs a finite module");
  const Integer& n = m.ring().modulus();
  std::set<Integer> closure{Integer(1)};
  std::vector<Integer> frontier{Integer(1)};
  std::vector<Integer> gens;
  for (const auto& g : s_gens) gens.push_back(floor_mod(g, n));
  while (!frontier.empty()) {
    const Integer x = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      const Integer y = floor_mod(Integer(x * g), n);
      if (closure.insert(y).second) frontier.push_back(y);
    }
  }
  if (closure.count(Integer(0))) fail(ErrorKind::NotMCS, "the multiplicative closure contains 0");

  Integer s_star = 1;
  for (const auto& s : closure) s_star = floor_mod(Integer(s_star * s), n);
  Integer local_n = n;
  for (const auto& p : prime_factors(s_star))
    while (local_n % p == 0) local_n /= p;

  const Submodule ks = annihilator_in(m, Ideal(m.ring(), s_star));
  Quotient q = quotient_module(m, ks);
  for (const auto& s : closure)
    if (!sub_scale(full_submodule(q.module), s).is_full())
      fail(ErrorKind::Internal, "element " + s.str() + " of S is not invertible on the localization");
  const RingDesc local = RingDesc::finite(local_n);
  FGModule lm = with_ring(q.module, local);
  return {std::move(lm), local, std::move(q.projection), ks, {closure.begin(), closure.end()}};
}

Submodule localize_submodule(const Localization& loc, const Submodule& n) {
  const Submodule pushed = push(loc.map, n);
  return Submodule(loc.module, pushed.basis(), Submodule::Canonical{});
}

Ideal localize_ideal(const Localization& loc, const Ideal& i) {
  const Integer g = i.is_zero() ? Integer(0) : i.generator();
  return Ideal(loc.local_ring, g);
}

SubmoduleModule submodule_as_module(const Submodule& n) {
  const IntMatrix& l = n.basis();
  const IntMatrix& r = n.parent().relations();
  IntMatrix c(r.rows(), l.rows());
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    const auto coeff = solve_in_lattice(l, IntRow(r.row(i)));
    if (!coeff) fail(ErrorKind::Internal, "relation outside the submodule lattice");
    c.row(i) = *coeff;
  }
  FGModule sm = module_from_relations(n.parent().ring(), c);
  Hom inc = hom_make(sm, n.parent(), l);
  return {std::move(sm), std::move(inc)};
}

Hom corestrict(const Hom& f) {
  const Submodule im = image(f);
  const SubmoduleModule sm = submodule_as_module(im);
  IntMatrix a(f.source().rank(), sm.module.rank());
  for (Eigen::Index i = 0; i < f.matrix().rows(); ++i) {
    const auto coeff = solve_in_lattice(im.basis(), IntRow(f.matrix().row(i)));
    if (!coeff) fail(ErrorKind::Internal, "map row outside its image");
    a.row(i) = *coeff;
  }
  return hom_make(f.source(), sm.module, a);
}

Verdict is_sa_small_epi(const Hom& f, const PredicateOptions& opts) {
  if (!f.is_epi()) fail(ErrorKind::NotEpi, to_string(f) + " is not onto");
  return is_sa_small(kernel(f), opts);
}

Verdict is_T_sa_small_epi(const Hom& f, const Submodule& t, const PredicateOptions& opts) {
  if (!f.is_epi()) fail(ErrorKind::NotEpi, to_string(f) + " is not onto");
  return is_T_sa_small(kernel(f), t, opts);
}

std::string to_string(const Hom& f) {
  std::string out = to_string(f.source()) + " -> " + to_string(f.target()) + " [";
  for (Eigen::Index i = 0; i < f.matrix().rows(); ++i) {
    if (i) out += ", ";
    out += element_to_string(f.target(), Element(f.matrix().row(i)));
  }
  return out + "]";
}

}  // namespace sasmall
