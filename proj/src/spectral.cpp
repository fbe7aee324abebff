#include "bv/spectral.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <stdexcept>

namespace bv {

NilpotentOrbit classify_relaxed(Family f, const Partition& p, VeryEvenLabel label);

namespace {

bool good_dim(long long d, GroupCase gc) {
  bool odd_good = gc == GroupCase::Cn || gc == GroupCase::Dn;
  return (d % 2 != 0) == odd_good;
}

const Rational kHalf(1, 2);

bool is_half_pair_char(const WeilCharacter& chi) {
  if (!chi.a.is_real() || !chi.b.is_real()) return false;
  return (chi.a.re == kHalf && chi.b.re == -kHalf) ||
         (chi.a.re == -kHalf && chi.b.re == kHalf);
}

Summand trivial_summand(long long d) { return {WeilCharacter{}, d}; }

Summand half_pair_summand(long long d, int sign) {
  Rational a = sign > 0 ? kHalf : -kHalf;
  return {WeilCharacter{Gaussian(a), Gaussian(-a)}, d};
}

// Membership in the exchange-eligible part: trivial characters on good-parity
// blocks, chi_{1/2,-1/2} or its inverse on bad-parity blocks.
bool in_bp_part(const Summand& s, GroupCase gc) {
  if (s.chi.is_trivial()) return good_dim(s.dim, gc);
  return is_half_pair_char(s.chi) && !good_dim(s.dim, gc);
}

bool summand_less(const Summand& x, const Summand& y) {
  if (x.dim != y.dim) return x.dim > y.dim;
  if (!(x.chi.a == y.chi.a)) return x.chi.a < y.chi.a;
  return x.chi.b < y.chi.b;
}

}  // namespace

NilpotentOrbit wavefront(const ArthurParameter& psi) {
  require_valid(psi, true);
  GroupCase gc = psi.group.group_case;
  Decomposition dec = decompose(psi);
  NilpotentOrbit u = u_bp_orbit(psi);
  if (!is_even(u) || !is_special(u, gc))
    throw std::invalid_argument(
        "wavefront: unsupported parameter, unipotent part " + orbit_str(u) +
        " is not special and even");
  NilpotentOrbit dual = ls_dual(u, partner(gc));
  std::vector<long long> sizes;
  for (const Summand& s : dec.rho()) sizes.push_back(s.dim);
  return induce_orbit(dual, sizes);
}

SpAnalysis sp_analysis(const ArthurParameter& psi) {
  require_valid(psi, false);
  GroupCase gc = psi.group.group_case;
  Family df = dual_side_family(gc);

  SpAnalysis out;
  std::vector<Summand> rest;
  Partition good_dims;
  Partition u0_parts;
  std::map<long long, long long, std::greater<>> bad_mult;
  for (const Summand& s : psi.summands) {
    if (!in_bp_part(s, gc)) {
      rest.push_back(s);
      continue;
    }
    out.psi_bp.push_back(s);
    u0_parts.push_back(s.dim);
    if (s.chi.is_trivial())
      good_dims.push_back(s.dim);
    else
      bad_mult[s.dim] += 1;
  }
  std::sort(u0_parts.begin(), u0_parts.end(), std::greater<>());
  std::sort(good_dims.begin(), good_dims.end(), std::greater<>());
  out.u0 = classify_relaxed(df, u0_parts, VeryEvenLabel::None);
  out.u_sp = special_closure(out.u0, gc);

  for (const auto& [a, mult] : bad_mult) {
    assert(mult % 2 == 0);
    Partition test = good_dims;
    test.push_back(a);
    test.push_back(a);
    std::sort(test.begin(), test.end(), std::greater<>());
    if (!is_special(classify_relaxed(df, test, VeryEvenLabel::None), gc))
      out.exchangeable.push_back(a);
  }

  std::map<long long, long long, std::greater<>> sp_mult;
  for (long long d : out.u_sp.partition) sp_mult[d] += 1;
  out.psi_sp.group = psi.group;
  out.psi_sp.summands = rest;
  for (const auto& [d, mult] : sp_mult) {
    if (good_dim(d, gc)) {
      for (long long i = 0; i < mult; ++i)
        out.psi_sp.summands.push_back(trivial_summand(d));
    } else {
      assert(mult % 2 == 0);
      for (long long i = 0; i < mult / 2; ++i) {
        out.psi_sp.summands.push_back(half_pair_summand(d, +1));
        out.psi_sp.summands.push_back(half_pair_summand(d, -1));
      }
    }
  }
  require_valid(out.psi_sp, false);
  return out;
}

std::vector<Summand> canonical_summands(const ArthurParameter& psi) {
  std::vector<Summand> s = psi.summands;
  std::sort(s.begin(), s.end(), summand_less);
  return s;
}

bool same_sp_class(const ArthurParameter& a, const ArthurParameter& b) {
  if (!(a.group == b.group))
    throw std::invalid_argument("same_sp_class: group mismatch");
  SpAnalysis sa = sp_analysis(a);
  SpAnalysis sb = sp_analysis(b);
  return canonical_summands(sa.psi_sp) == canonical_summands(sb.psi_sp);
}

}  // namespace bv
