#pragma once

#include <vector>

#include "bv/arithmetic.hpp"
#include "bv/parameters.hpp"

namespace bvtest {

using bv::Gaussian;
using bv::Rational;

inline std::vector<Gaussian> ints(const std::vector<long long>& v) {
  std::vector<Gaussian> out;
  for (long long x : v) out.emplace_back(Rational(x));
  return out;
}

// Coordinates given as doubled values: halves({7,5,3}) = (7/2, 5/2, 3/2).
inline std::vector<Gaussian> halves(const std::vector<long long>& v) {
  std::vector<Gaussian> out;
  for (long long x : v) out.emplace_back(Rational(x, 2));
  return out;
}

inline bv::Summand triv(long long d) { return {bv::WeilCharacter{}, d}; }

inline bv::Summand chi(Rational a, Rational b, long long d) {
  return {bv::WeilCharacter{Gaussian(a), Gaussian(b)}, d};
}

inline bv::ArthurParameter psi_of(bv::GroupCase gc, long long rank,
                                  std::vector<bv::Summand> s) {
  return {bv::GroupDescriptor{gc, rank}, std::move(s)};
}

inline bv::ArthurParameter unipotent_psi(bv::GroupCase gc,
                                         const bv::Partition& p) {
  std::vector<bv::Summand> s;
  for (long long d : p) s.push_back(triv(d));
  long long n = bv::rank_of_dual_ambient(gc, bv::partition_sum(p));
  return {bv::GroupDescriptor{gc, n}, std::move(s)};
}

}  // namespace bvtest
