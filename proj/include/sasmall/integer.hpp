#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "sasmall/errors.hpp"

namespace sasmall {

/// Exact integer used by every public value type.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using IntMatrix = Matrix<Integer>;
using IntRow = RowVector<Integer>;

template <typename Scalar>
struct Bezout {
  Scalar g;  // gcd, nonnegative
  Scalar x;
  Scalar y;  // g == x*a + y*b
};

/// Extended Euclid on arbitrary signs.
template <typename Scalar>
Bezout<Scalar> extended_gcd(Scalar a, Scalar b) {
  Scalar old_r = a, r = b;
  Scalar old_s = 1, s = 0;
  Scalar old_t = 0, t = 1;
  while (r != 0) {
    Scalar q = old_r / r;
    Scalar tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

template <typename Scalar>
Scalar abs_value(const Scalar& a) {
  return a < 0 ? Scalar(-a) : a;
}

template <typename Scalar>
Scalar gcd_of(Scalar a, Scalar b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Scalar t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// lcm with lcm(0, x) == 0.
template <typename Scalar>
Scalar lcm_of(const Scalar& a, const Scalar& b) {
  if (a == 0 || b == 0) return Scalar(0);
  return abs_value(Scalar(a / gcd_of(a, b) * b));
}

/// Floor division for m > 0.
template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& m) {
  Scalar q = a / m;
  if (a % m != 0 && a < 0) q -= 1;
  return q;
}

/// Representative of a modulo m in [0, m), m > 0.
template <typename Scalar>
Scalar floor_mod(const Scalar& a, const Scalar& m) {
  Scalar r = a % m;
  if (r < 0) r += m;
  return r;
}

inline std::int64_t to_i64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    fail(ErrorKind::BoundExceeded, "integer " + v.str() + " does not fit in 64 bits");
  return v.convert_to<std::int64_t>();
}

template <typename To, typename From>
Matrix<To> convert_matrix(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<To, std::int64_t> && std::is_same_v<From, Integer>)
        out(i, j) = to_i64(m(i, j));
      else
        out(i, j) = To(m(i, j));
    }
  return out;
}

std::vector<Integer> divisors(const Integer& n);          // positive divisors of |n| ascending, n != 0
std::vector<Integer> prime_factors(const Integer& n);     // distinct primes of |n| ascending
Integer squarefree_kernel(const Integer& n);              // product of distinct primes; 0 -> 0
bool is_prime(const Integer& n);
bool is_prime_power(const Integer& n);
bool is_squarefree(const Integer& n);

}  // namespace sasmall
