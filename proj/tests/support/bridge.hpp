#pragma once

// Conversions between library values and the element-set oracle.

#include <vector>

#include "oracle/brute.hpp"
#include "sasmall/module.hpp"

namespace bridge {

inline sasmall::Element elem(std::initializer_list<long> v) {
  sasmall::Element e(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (long x : v) e(i++) = x;
  return e;
}

inline sasmall::Element elem_of(const oracle::Group& g, long idx) {
  const auto v = g.decode(idx);
  sasmall::Element e(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) e(static_cast<Eigen::Index>(i)) = v[i];
  return e;
}

inline sasmall::Submodule to_sub(const sasmall::FGModule& m, const oracle::Group& g, const oracle::Set& s) {
  std::vector<sasmall::Element> gens;
  for (long x : oracle::members(s)) gens.push_back(elem_of(g, x));
  return sasmall::submodule_from_generators(m, gens);
}

inline std::vector<sasmall::Integer> ints(const std::vector<long>& v) { return {v.begin(), v.end()}; }

/// Module over Z/n (n > 0) or Z (n == 0) with the given cyclic factors.
inline sasmall::FGModule make_module(const std::vector<long>& factors, long n) {
  const auto ring = n == 0 ? sasmall::RingDesc::integers() : sasmall::RingDesc::finite(n);
  return sasmall::module_make(ring, ints(factors));
}

inline sasmall::Submodule sub(const sasmall::FGModule& m, std::initializer_list<std::initializer_list<long>> gens) {
  std::vector<sasmall::Element> es;
  for (const auto& g : gens) es.push_back(elem(g));
  return sasmall::submodule_from_generators(m, es);
}

}  // namespace bridge
