#include "sasmall/integer.hpp"

#include <algorithm>

namespace sasmall {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadRing: return "BadRing";
    case ErrorKind::BadFactors: return "BadFactors";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ParentMismatch: return "ParentMismatch";
    case ErrorKind::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorKind::InfiniteLattice: return "InfiniteLattice";
    case ErrorKind::InfiniteEnumeration: return "InfiniteEnumeration";
    case ErrorKind::InfiniteQuotient: return "InfiniteQuotient";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::Undecidable: return "Undecidable";
    case ErrorKind::ZeroT: return "ZeroT";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::NotEpi: return "NotEpi";
    case ErrorKind::NotMCS: return "NotMCS";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownStatement: return "UnknownStatement";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

std::vector<Integer> divisors(const Integer& n) {
  const Integer a = abs_value(n);
  if (a == 0) fail(ErrorKind::InfiniteEnumeration, "divisors of 0");
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      small.push_back(d);
      if (d * d != a) large.push_back(a / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<Integer> prime_factors(const Integer& n) {
  Integer a = abs_value(n);
  std::vector<Integer> out;
  for (Integer p = 2; p * p <= a; ++p) {
    if (a % p == 0) {
      out.push_back(p);
      while (a % p == 0) a /= p;
    }
  }
  if (a > 1) out.push_back(a);
  return out;
}

Integer squarefree_kernel(const Integer& n) {
  if (n == 0) return Integer(0);
  Integer k = 1;
  for (const auto& p : prime_factors(n)) k *= p;
  return k;
}

bool is_prime(const Integer& n) {
  const auto f = prime_factors(n);
  return n > 1 && f.size() == 1 && f.front() == n;
}

bool is_prime_power(const Integer& n) { return n > 1 && prime_factors(n).size() == 1; }

bool is_squarefree(const Integer& n) { return n != 0 && squarefree_kernel(n) == abs_value(n); }

}  // namespace sasmall
