#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bv/arithmetic.hpp"
#include "bv/orbits.hpp"
#include "bv/symbols.hpp"

namespace bv {

// Character chi_{a,b} of C^* with a - b an integer; trivial iff a = b = 0.
struct WeilCharacter {
  Gaussian a;
  Gaussian b;

  bool is_trivial() const { return a.is_zero() && b.is_zero(); }
  WeilCharacter inverse() const { return {-a, -b}; }
  friend bool operator==(const WeilCharacter&, const WeilCharacter&) = default;
};

// chi_{a,b} boxtimes R_dim.
struct Summand {
  WeilCharacter chi;
  long long dim = 0;
  friend bool operator==(const Summand&, const Summand&) = default;
};

struct GroupDescriptor {
  GroupCase group_case = GroupCase::Cn;
  long long rank = 0;

  long long dual_ambient() const { return dual_ambient_of_rank(group_case, rank); }
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

struct ArthurParameter {
  GroupDescriptor group;
  std::vector<Summand> summands;
  friend bool operator==(const ArthurParameter&, const ArthurParameter&) = default;
};

struct Violation {
  std::string code;
  std::string message;
};

// Structural checks: integral a-b, total dimension, theta-stability, unitary
// (or almost-unitary, reported as a note in `almost_unitary`) characters,
// even multiplicity of self-dual wrong-parity summands.
struct ValidationReport {
  std::vector<Violation> violations;
  bool almost_unitary = false;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const ArthurParameter& psi);

// Throws std::invalid_argument when validate() fails; `strict_unitary`
// additionally rejects almost-unitary parameters.
void require_valid(const ArthurParameter& psi, bool strict_unitary);

bool is_unipotent(const ArthurParameter& psi);

// Orbit attached to a unipotent parameter: the partition of its dimensions in
// the dual-side family. Pre: every summand trivial.
NilpotentOrbit orbit_of_unipotent(const ArthurParameter& psi);

// rho = one member of each inverse pair of nontrivial-character summands plus
// one half of each bad-parity trivial pair; the two ingredients are kept
// apart so downstream constructions count each exactly once.
struct Decomposition {
  std::vector<Summand> rho_pairs;    // nontrivial-character halves
  std::vector<Summand> bad_halves;   // bad-parity trivial halves
  std::vector<long long> u_bp_dims;  // good-parity trivial dimensions, decreasing
  std::vector<std::pair<long long, long long>> bad_parity_pairs;  // (dim, dim)

  std::vector<Summand> rho() const;
};

Decomposition decompose(const ArthurParameter& psi);

// Good-parity unipotent sub-parameter as an orbit of the smaller group's dual
// algebra (ambient = sum of u_bp_dims).
NilpotentOrbit u_bp_orbit(const ArthurParameter& psi);

struct InfChar {
  std::vector<Gaussian> lambda;
  std::vector<Gaussian> mu;
  friend bool operator==(const InfChar&, const InfChar&) = default;
};

// Aligned halved infinitesimal character, rank-many coordinate pairs: gl
// segments of rho, then of the bad-parity halves, then the halved diagonal of
// the good-parity unipotent part.
InfChar infinitesimal_character(const ArthurParameter& psi);

// Unipotent orbit infinitesimal character (half the diagonal h of the orbit).
std::vector<Gaussian> infinitesimal_character(const NilpotentOrbit& o);

// Regular: within lambda (and within mu) all coordinates nonzero with
// pairwise distinct absolute values; Gaussian v and -v count as a collision.
bool is_regular(const InfChar& ic);

// A(psi) = A(U) of the good-parity unipotent orbit.
GroupPresentation component_group_of_psi(const ArthurParameter& psi);

}  // namespace bv
