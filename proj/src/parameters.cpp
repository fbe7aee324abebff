#include "bv/parameters.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace bv {

NilpotentOrbit classify_relaxed(Family f, const Partition& p,
                                VeryEvenLabel label);

namespace {

bool good_dim(GroupCase gc, long long d) {
  bool odd_good = gc == GroupCase::Cn || gc == GroupCase::Dn;
  return (d % 2 != 0) == odd_good;
}

// (a + (r-1)/2, a + (r-3)/2, ..., a - (r-1)/2)
std::vector<Gaussian> segment(const Gaussian& a, long long r) {
  std::vector<Gaussian> out;
  for (long long j = 0; j < r; ++j)
    out.push_back(a + Gaussian(Rational(r - 1 - 2 * j, 2)));
  return out;
}

bool chi_less(const WeilCharacter& x, const WeilCharacter& y) {
  return std::tie(x.a.re, x.a.im, x.b.re, x.b.im) <
         std::tie(y.a.re, y.a.im, y.b.re, y.b.im);
}

}  // namespace

ValidationReport validate(const ArthurParameter& psi) {
  ValidationReport rep;
  auto flag = [&](const std::string& code, const std::string& msg) {
    rep.violations.push_back({code, msg});
  };
  if (psi.group.rank < 1) flag("rank", "group rank must be positive");

  long long total = 0;
  bool dims_ok = true;
  for (const Summand& s : psi.summands) {
    if (s.dim < 1) {
      flag("dimension", "summand dimension must be positive");
      dims_ok = false;
      continue;
    }
    total += s.dim;
    Gaussian diff = s.chi.a - s.chi.b;
    if (!diff.is_real() || !diff.re.is_integer())
      flag("integrality", "character exponents a=" + s.chi.a.str() +
                              ", b=" + s.chi.b.str() +
                              " do not differ by an integer");
    Rational spread = abs(s.chi.a.re + s.chi.b.re);
    if (spread.is_zero())
      ;
    else if (spread < Rational(1, 2))
      rep.almost_unitary = true;
    else
      flag("unitarity", "character with re(a+b) = " +
                            (s.chi.a.re + s.chi.b.re).str() +
                            " is not unitary");
  }
  if (psi.group.rank >= 1 && dims_ok && total != psi.group.dual_ambient())
    flag("total_dim", "summand dimensions add to " + std::to_string(total) +
                          ", expected " +
                          std::to_string(psi.group.dual_ambient()));

  std::vector<Summand> nontrivial;
  std::map<long long, long long> trivial_mult;
  for (const Summand& s : psi.summands) {
    if (s.chi.is_trivial())
      ++trivial_mult[s.dim];
    else
      nontrivial.push_back(s);
  }
  bool theta_ok = true;
  while (!nontrivial.empty() && theta_ok) {
    Summand s = nontrivial.back();
    nontrivial.pop_back();
    Summand inv{s.chi.inverse(), s.dim};
    auto it = std::find(nontrivial.begin(), nontrivial.end(), inv);
    if (it == nontrivial.end())
      theta_ok = false;
    else
      nontrivial.erase(it);
  }
  if (!theta_ok)
    flag("theta", "summand multiset is not stable under character inversion");

  for (const auto& [d, mult] : trivial_mult)
    if (!good_dim(psi.group.group_case, d) && mult % 2 != 0)
      flag("parity", "self-dual summand of dimension " + std::to_string(d) +
                         " has odd multiplicity " + std::to_string(mult));
  return rep;
}

void require_valid(const ArthurParameter& psi, bool strict_unitary) {
  ValidationReport rep = validate(psi);
  if (!rep.ok()) {
    std::string msg = "invalid parameter:";
    for (const Violation& v : rep.violations) msg += " [" + v.code + "] " + v.message;
    throw std::invalid_argument(msg);
  }
  if (strict_unitary && rep.almost_unitary)
    throw std::invalid_argument("almost-unitary parameter rejected");
}

bool is_unipotent(const ArthurParameter& psi) {
  for (const Summand& s : psi.summands)
    if (!s.chi.is_trivial()) return false;
  return true;
}

NilpotentOrbit orbit_of_unipotent(const ArthurParameter& psi) {
  if (!is_unipotent(psi))
    throw std::invalid_argument("orbit_of_unipotent: nontrivial character present");
  Partition p;
  for (const Summand& s : psi.summands) p.push_back(s.dim);
  std::sort(p.begin(), p.end(), std::greater<long long>());
  return classify_relaxed(dual_side_family(psi.group.group_case), p,
                          VeryEvenLabel::None);
}

std::vector<Summand> Decomposition::rho() const {
  std::vector<Summand> out = rho_pairs;
  out.insert(out.end(), bad_halves.begin(), bad_halves.end());
  return out;
}

Decomposition decompose(const ArthurParameter& psi) {
  Decomposition dec;
  std::vector<Summand> nontrivial;
  std::map<long long, long long, std::greater<long long>> trivial_mult;
  for (const Summand& s : psi.summands) {
    if (s.chi.is_trivial())
      ++trivial_mult[s.dim];
    else
      nontrivial.push_back(s);
  }
  while (!nontrivial.empty()) {
    Summand s = nontrivial.back();
    nontrivial.pop_back();
    Summand inv{s.chi.inverse(), s.dim};
    auto it = std::find(nontrivial.begin(), nontrivial.end(), inv);
    if (it == nontrivial.end())
      throw std::invalid_argument("decompose: unpaired summand");
    nontrivial.erase(it);
    dec.rho_pairs.push_back(chi_less(inv.chi, s.chi) ? s : inv);
  }
  std::sort(dec.rho_pairs.begin(), dec.rho_pairs.end(),
            [](const Summand& x, const Summand& y) {
              if (x.dim != y.dim) return x.dim > y.dim;
              return chi_less(y.chi, x.chi);
            });
  for (const auto& [d, mult] : trivial_mult) {
    if (good_dim(psi.group.group_case, d)) {
      dec.u_bp_dims.insert(dec.u_bp_dims.end(), mult, d);
    } else {
      if (mult % 2 != 0)
        throw std::invalid_argument("decompose: odd bad-parity multiplicity");
      for (long long i = 0; i < mult / 2; ++i) {
        dec.bad_halves.push_back(Summand{WeilCharacter{}, d});
        dec.bad_parity_pairs.emplace_back(d, d);
      }
    }
  }
  return dec;
}

NilpotentOrbit u_bp_orbit(const ArthurParameter& psi) {
  Decomposition dec = decompose(psi);
  return classify_relaxed(dual_side_family(psi.group.group_case),
                          dec.u_bp_dims, VeryEvenLabel::None);
}

std::vector<Gaussian> infinitesimal_character(const NilpotentOrbit& o) {
  std::vector<Gaussian> halves;
  long long zeros = 0;
  for (long long d : o.partition)
    for (long long j = 0; j < d; ++j) {
      Rational v(d - 1 - 2 * j, 2);
      if (v > Rational(0))
        halves.emplace_back(v);
      else if (v.is_zero())
        ++zeros;
    }
  std::sort(halves.begin(), halves.end(),
            [](const Gaussian& x, const Gaussian& y) { return y < x; });
  halves.insert(halves.end(), zeros / 2, Gaussian());
  return halves;
}

InfChar infinitesimal_character(const ArthurParameter& psi) {
  Decomposition dec = decompose(psi);
  InfChar ic;
  for (const Summand& s : dec.rho_pairs) {
    auto lam = segment(s.chi.a, s.dim);
    auto mu = segment(s.chi.b, s.dim);
    ic.lambda.insert(ic.lambda.end(), lam.begin(), lam.end());
    ic.mu.insert(ic.mu.end(), mu.begin(), mu.end());
  }
  for (const Summand& s : dec.bad_halves) {
    auto seg = segment(Gaussian(), s.dim);
    ic.lambda.insert(ic.lambda.end(), seg.begin(), seg.end());
    ic.mu.insert(ic.mu.end(), seg.begin(), seg.end());
  }
  NilpotentOrbit u = classify_relaxed(
      dual_side_family(psi.group.group_case), dec.u_bp_dims, VeryEvenLabel::None);
  std::vector<Gaussian> diag = infinitesimal_character(u);
  ic.lambda.insert(ic.lambda.end(), diag.begin(), diag.end());
  ic.mu.insert(ic.mu.end(), diag.begin(), diag.end());
  assert(static_cast<long long>(ic.lambda.size()) == psi.group.rank);
  assert(ic.lambda.size() == ic.mu.size());
  return ic;
}

bool is_regular(const InfChar& ic) {
  auto side_regular = [](const std::vector<Gaussian>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) return false;
      for (size_t j = i + 1; j < v.size(); ++j)
        if (v[i] == v[j] || v[i] == -v[j]) return false;
    }
    return true;
  };
  return side_regular(ic.lambda) && side_regular(ic.mu);
}

GroupPresentation component_group_of_psi(const ArthurParameter& psi) {
  return component_group(u_bp_orbit(psi), psi.group.group_case);
}

}  // namespace bv
