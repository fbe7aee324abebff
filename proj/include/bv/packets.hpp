#pragma once

#include <string>
#include <vector>

#include "bv/parameters.hpp"

namespace bv {

// Sign-flip rules of the normal form: GL allows permutations only, BC allows
// any coordinate flips, D allows evenly many (a zero pair absorbs parity).
enum class WeylKind { GL, BC, D };

WeylKind weyl_kind(GroupCase gc);

// Langlands parameter (lambda, mu) up to the Weyl action, plus the formal
// zero parameter.
struct LanglandsParam {
  bool zero = false;
  WeylKind kind = WeylKind::BC;
  std::vector<Gaussian> lambda;
  std::vector<Gaussian> mu;
  // Meaningful after normal_form for kind D with no zero pair: parity of the
  // sign flips folded into the canonical representative.
  int d_flip_parity = 0;

  friend bool operator==(const LanglandsParam&, const LanglandsParam&) = default;
};

LanglandsParam make_param(WeylKind kind, std::vector<Gaussian> lambda,
                          std::vector<Gaussian> mu);
LanglandsParam make_zero(WeylKind kind);

// Canonical representative: each coordinate pair flipped so that
// (lambda_i + mu_i, lambda_i - mu_i) beats its negative lexicographically,
// pairs sorted decreasingly. Idempotent.
LanglandsParam normal_form(const LanglandsParam& p);

bool equivalent(const LanglandsParam& a, const LanglandsParam& b);

// Exponents as characters chi_{lambda_i, mu_i}. Enforces the integrality
// lambda_i - mu_i in Z and the unitary bound |lambda_i - mu_i| <= 1.
std::vector<WeilCharacter> exponents(const LanglandsParam& p);

// gl parameter of a multiset of summands: per summand the segments
// (a + (d-1)/2, ..., a - (d-1)/2) and (b + (d-1)/2, ..., b - (d-1)/2).
LanglandsParam gl_param(const std::vector<Summand>& summands);

// Levi and string data of the packet construction for a good-parity orbit.
struct BVData {
  GroupCase group_case = GroupCase::Cn;
  SymbolDetail detail;
  PairStructure pairs;

  long long x0 = 0;             // unpaired first entry (Cn/Dn/Mpn); Bn uses x_{2k}
  long long m0_rank = 0;        // rank of the classical factor
  bool mp_factor = false;       // Mpn with x0 != 0: genuine Mp_{2x0} factor
  std::vector<long long> gl_sizes;  // F^1 first (rightmost pair)

  // Same indexing as gl_sizes; ftilde[j] is empty at equal pairs.
  std::vector<std::vector<Gaussian>> f;
  std::vector<std::vector<Gaussian>> ftilde;
  std::vector<bool> pair_is_unequal;
  std::vector<Gaussian> lambda0;
};

// Sizes and classical factor only (strings left empty).
BVData bv_levi_data(const NilpotentOrbit& o, GroupCase gc);
// Full string extraction from the orbit's infinitesimal character.
BVData bv_strings(const NilpotentOrbit& o, GroupCase gc);

struct PacketMember {
  std::vector<int> eps;   // one sign per unequal pair (F^1 coordinate first),
                          // plus a final metaplectic sign when present
  LanglandsParam param;
};

struct Packet {
  NilpotentOrbit orbit;
  GroupCase group_case = GroupCase::Cn;
  int m = 0;
  bool mp_coordinate = false;
  std::vector<PacketMember> members;
};

// Packet of an even special (antispecial for Mpn) dual-side orbit: 2^m
// members for good parity (times 2 for an Mpn metaplectic factor), the
// uniformly bad parity Bn singleton otherwise. Members are emitted in normal
// form. Throws std::invalid_argument for unsupported orbits (very even Dn,
// mixed parity).
Packet bv_packet(const NilpotentOrbit& o, GroupCase gc);

// Member attached to a character of the component group, given as a sign
// vector over the z_d generators of component_group(o, gc) for Cn/Bn/Dn and
// over the per-size generators of the metaplectic quotient for Mpn.
// Characters not factoring through the two-group quotient yield zero.
LanglandsParam bv_packet_member(const NilpotentOrbit& o, GroupCase gc,
                                const std::vector<int>& eta);

struct ArthurPacketMember {
  std::vector<int> eta;   // character of A(psi) on its z_d generators
  LanglandsParam param;
};

struct ArthurPacket {
  ArthurParameter psi;
  std::vector<ArthurPacketMember> members;
};

// Packet of a validated unitary parameter: gl factors of the decomposition
// concatenated with the good-parity packet member of each character of
// A(psi). Zero members stay zero.
ArthurPacket arthur_packet(const ArthurParameter& psi);

std::string param_str(const LanglandsParam& p);

}  // namespace bv
