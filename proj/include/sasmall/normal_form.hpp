#pragma once

// Integer normal forms over row lattices. Every routine treats the rows of
// its input as generators of a subgroup of Z^n and works for any exact
// integer scalar (GMP-backed Integer or int64_t for bounded fast paths).

#include <optional>
#include <utility>

#include "sasmall/integer.hpp"

namespace sasmall {

namespace detail {

template <typename Scalar>
void combine_rows(Matrix<Scalar>& a, Eigen::Index top, Eigen::Index other, Eigen::Index col) {
  // Unimodular 2x2 step leaving gcd in a(top, col) and zero in a(other, col).
  const Scalar p = a(top, col);
  const Scalar q = a(other, col);
  const auto b = extended_gcd(p, q);
  const Scalar pg = p / b.g;
  const Scalar qg = q / b.g;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    const Scalar u = a(top, j);
    const Scalar v = a(other, j);
    a(top, j) = b.x * u + b.y * v;
    a(other, j) = pg * v - qg * u;
  }
}

template <typename Scalar>
void reduce_above(Matrix<Scalar>& a, Eigen::Index pivot_row, Eigen::Index col) {
  const Scalar p = a(pivot_row, col);
  for (Eigen::Index i = 0; i < pivot_row; ++i) {
    const Scalar q = floor_div(Scalar(a(i, col)), p);
    if (q != 0)
      for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) -= q * a(pivot_row, j);
  }
}

}  // namespace detail

/// Row-style Hermite normal form: echelon rows with positive pivots, entries
/// above each pivot reduced into [0, pivot), zero rows dropped. The result is
/// the unique canonical basis of the row lattice of `a`.
template <typename Scalar>
Matrix<Scalar> hermite_normal_form(Matrix<Scalar> a) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n && row < m; ++col) {
    for (Eigen::Index i = row + 1; i < m; ++i) {
      if (a(i, col) == 0) continue;
      if (a(row, col) == 0) {
        a.row(row).swap(a.row(i));
        continue;
      }
      detail::combine_rows(a, row, i, col);
    }
    if (a(row, col) == 0) continue;
    if (a(row, col) < 0) a.row(row) = -a.row(row);
    detail::reduce_above(a, row, col);
    ++row;
  }
  return a.topRows(row);
}

/// Hermite normal form of the lattice spanned by the rows of `a` together with
/// modulus * Z^n. Always full rank, so the result is n x n upper triangular
/// with pivots dividing `modulus`; all intermediate entries stay below
/// modulus^2, which is what makes the int64_t instantiation safe.
template <typename Scalar>
Matrix<Scalar> hermite_normal_form_mod(const Matrix<Scalar>& a, const Scalar& modulus) {
  const Eigen::Index n = a.cols();
  std::vector<RowVector<Scalar>> work;
  work.reserve(static_cast<std::size_t>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    RowVector<Scalar> r(n);
    bool nonzero = false;
    for (Eigen::Index j = 0; j < n; ++j) {
      r(j) = floor_mod(Scalar(a(i, j)), modulus);
      nonzero = nonzero || r(j) != 0;
    }
    if (nonzero) work.push_back(std::move(r));
  }
  Matrix<Scalar> out = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    RowVector<Scalar> pivot = RowVector<Scalar>::Zero(n);
    pivot(col) = modulus;
    std::vector<RowVector<Scalar>> rest;
    rest.reserve(work.size());
    for (auto& r : work) {
      if (r(col) != 0) {
        const auto b = extended_gcd(Scalar(pivot(col)), Scalar(r(col)));
        const Scalar pg = pivot(col) / b.g;
        const Scalar rg = r(col) / b.g;
        RowVector<Scalar> np(n), nr(n);
        for (Eigen::Index j = 0; j < n; ++j) {
          np(j) = b.x * pivot(j) + b.y * r(j);
          nr(j) = pg * r(j) - rg * pivot(j);
        }
        for (Eigen::Index j = col + 1; j < n; ++j) {
          np(j) = floor_mod(Scalar(np(j)), modulus);
          nr(j) = floor_mod(Scalar(nr(j)), modulus);
        }
        pivot = std::move(np);
        r = std::move(nr);
      }
      bool nonzero = false;
      for (Eigen::Index j = col + 1; j < n; ++j) nonzero = nonzero || r(j) != 0;
      if (nonzero) rest.push_back(std::move(r));
    }
    out.row(col) = pivot;
    work = std::move(rest);
  }
  for (Eigen::Index col = 0; col < n; ++col) detail::reduce_above(out, col, col);
  return out;
}

/// Shape-aware equality (Eigen's operator== requires equal shapes).
template <typename Scalar>
bool same_matrix(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

/// Column index of each row's pivot in an echelon matrix.
template <typename Scalar>
std::vector<Eigen::Index> pivot_columns(const Matrix<Scalar>& hnf) {
  std::vector<Eigen::Index> cols;
  Eigen::Index c = 0;
  for (Eigen::Index i = 0; i < hnf.rows(); ++i) {
    while (c < hnf.cols() && hnf(i, c) == 0) ++c;
    cols.push_back(c);
  }
  return cols;
}

/// Coefficients c with c * hnf == x, or nullopt if x is not in the lattice.
template <typename Scalar>
std::optional<RowVector<Scalar>> solve_in_lattice(const Matrix<Scalar>& hnf, RowVector<Scalar> x) {
  RowVector<Scalar> coeff = RowVector<Scalar>::Zero(hnf.rows());
  const auto piv = pivot_columns(hnf);
  for (Eigen::Index i = 0; i < hnf.rows(); ++i) {
    const Eigen::Index c = piv[static_cast<std::size_t>(i)];
    for (Eigen::Index j = (i == 0 ? 0 : piv[static_cast<std::size_t>(i - 1)] + 1); j < c; ++j)
      if (x(j) != 0) return std::nullopt;
    if (x(c) % hnf(i, c) != 0) return std::nullopt;
    const Scalar q = x(c) / hnf(i, c);
    coeff(i) = q;
    if (q != 0) x -= q * hnf.row(i);
  }
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    if (x(j) != 0) return std::nullopt;
  return coeff;
}

template <typename Scalar>
bool lattice_contains(const Matrix<Scalar>& hnf, const RowVector<Scalar>& x) {
  return solve_in_lattice(hnf, x).has_value();
}

/// Stack two generator matrices with matching column count.
template <typename Scalar>
Matrix<Scalar> stack_rows(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Matrix<Scalar> out(a.rows() + b.rows(), a.cols());
  if (a.rows() > 0) out.topRows(a.rows()) = a;
  if (b.rows() > 0) out.bottomRows(b.rows()) = b;
  return out;
}

/// HNF basis of {x in Z^ks : x * a lies in rowspan(target)}; `a` is ks x kt.
template <typename Scalar>
Matrix<Scalar> lattice_preimage(const Matrix<Scalar>& a, const Matrix<Scalar>& target) {
  const Eigen::Index ks = a.rows();
  const Eigen::Index kt = a.cols();
  Matrix<Scalar> block = Matrix<Scalar>::Zero(ks + target.rows(), kt + ks);
  if (ks > 0) {
    block.topLeftCorner(ks, kt) = a;
    block.topRightCorner(ks, ks) = Matrix<Scalar>::Identity(ks, ks);
  }
  if (target.rows() > 0) block.bottomLeftCorner(target.rows(), kt) = target;
  const Matrix<Scalar> h = hermite_normal_form(block);
  const auto piv = pivot_columns(h);
  Eigen::Index first = 0;
  while (first < h.rows() && piv[static_cast<std::size_t>(first)] < kt) ++first;
  return hermite_normal_form(Matrix<Scalar>(h.bottomRightCorner(h.rows() - first, ks)));
}

/// HNF basis of the intersection of two row lattices in Z^n.
template <typename Scalar>
Matrix<Scalar> lattice_intersection(const Matrix<Scalar>& b1, const Matrix<Scalar>& b2) {
  // x in L1 with x in L2  <=>  x * I in rowspan(b2), restricted to L1 coordinates.
  const Matrix<Scalar> coeffs = lattice_preimage(b1, b2);
  if (coeffs.rows() == 0) return Matrix<Scalar>(0, b1.cols());
  return hermite_normal_form(Matrix<Scalar>(coeffs * b1));
}

template <typename Scalar>
struct SmithForm {
  Matrix<Scalar> u;  // unimodular, rows x rows
  Matrix<Scalar> d;  // diagonal, d(0,0) | d(1,1) | ..., nonnegative
  Matrix<Scalar> v;  // unimodular, cols x cols
};

/// Smith normal form with transforms: u * a * v == d.
template <typename Scalar>
SmithForm<Scalar> smith_normal_form(const Matrix<Scalar>& a) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  SmithForm<Scalar> s{Matrix<Scalar>::Identity(m, m), a, Matrix<Scalar>::Identity(n, n)};
  auto& d = s.d;
  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < m; ++i)
        for (Eigen::Index j = t; j < n; ++j)
          if (d(i, j) != 0 && (pi < 0 || abs_value(Scalar(d(i, j))) < abs_value(Scalar(d(pi, pj))))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) return s;
      if (pi != t) {
        d.row(pi).swap(d.row(t));
        s.u.row(pi).swap(s.u.row(t));
      }
      if (pj != t) {
        d.col(pj).swap(d.col(t));
        s.v.col(pj).swap(s.v.col(t));
      }
      bool dirty = false;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        const Scalar q = d(i, t) / d(t, t);
        if (q != 0) {
          d.row(i) -= q * d.row(t);
          s.u.row(i) -= q * s.u.row(t);
        }
        dirty = dirty || d(i, t) != 0;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        const Scalar q = d(t, j) / d(t, t);
        if (q != 0) {
          d.col(j) -= q * d.col(t);
          s.v.col(j) -= q * s.v.col(t);
        }
        dirty = dirty || d(t, j) != 0;
      }
      if (dirty) continue;
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      d.row(t) += d.row(bad);
      s.u.row(t) += s.u.row(bad);
    }
    if (d(t, t) < 0) {
      d.row(t) = -d.row(t);
      s.u.row(t) = -s.u.row(t);
    }
  }
  return s;
}

/// Diagonal of the Smith form (length min(rows, cols)).
template <typename Scalar>
std::vector<Scalar> smith_diagonal(const Matrix<Scalar>& a) {
  const auto s = smith_normal_form(a);
  std::vector<Scalar> diag;
  for (Eigen::Index i = 0; i < std::min(a.rows(), a.cols()); ++i) diag.push_back(s.d(i, i));
  return diag;
}

/// Exponent of the quotient X / R for row lattices R <= X (both HNF):
/// the least e > 0 with e X <= R, or 0 when X / R is infinite.
template <typename Scalar>
Scalar lattice_exponent(const Matrix<Scalar>& x_hnf, const Matrix<Scalar>& r_hnf) {
  if (r_hnf.rows() < x_hnf.rows()) return Scalar(0);
  if (x_hnf.rows() == 0) return Scalar(1);
  Matrix<Scalar> coords(r_hnf.rows(), x_hnf.rows());
  for (Eigen::Index i = 0; i < r_hnf.rows(); ++i) {
    const auto c = solve_in_lattice(x_hnf, RowVector<Scalar>(r_hnf.row(i)));
    if (!c) fail(ErrorKind::Internal, "lattice_exponent: relation lattice not contained in X");
    coords.row(i) = *c;
  }
  Scalar e(1);
  for (const auto& d : smith_diagonal(coords)) e = lcm_of(e, d);
  return e;
}

}  // namespace sasmall
