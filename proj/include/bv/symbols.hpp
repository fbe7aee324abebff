#pragma once

#include <string>
#include <vector>

#include "bv/orbits.hpp"

namespace bv {

// Two-row symbol attached to a good-parity dual-side orbit. Rows are weakly
// increasing; |top| = |bottom| + 1 for Cn/Bn/Mpn and |top| = |bottom| for Dn.
struct Symbol {
  GroupCase group_case = GroupCase::Cn;
  std::vector<long long> top;
  std::vector<long long> bottom;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

// Full construction record: xs is the interleaved sequence x_0 <= x_1 <= ...
// (top and bottom entries alternating, top first) and source[i] is the part
// the i-th entry came from (0 for padding zeros).
struct SymbolDetail {
  Symbol symbol;
  std::vector<long long> xs;
  std::vector<long long> source;
};

// One consecutive pair (x_low, x_high) of the interleaved sequence.
struct SymbolPair {
  long long low = 0;
  long long high = 0;
  bool equal = false;
  // Parts the two entries came from, low entry first.
  long long source_low = 0;
  long long source_high = 0;
};

struct PairStructure {
  std::vector<SymbolPair> pairs;     // leftmost pair first
  std::vector<long long> unpaired;   // x_0 and/or the last entry, by case
  int m = 0;                         // number of unequal pairs
};

// Pre: o lives on the dual side of gc and has good parity; throws
// std::invalid_argument otherwise.
Symbol symbol_of(const NilpotentOrbit& o, GroupCase gc);
SymbolDetail symbol_detail_of(const NilpotentOrbit& o, GroupCase gc);

std::vector<long long> interleave(const Symbol& s);

PairStructure pair_structure(const Symbol& s);
PairStructure pair_structure(const SymbolDetail& d);

// Number of unequal pairs; the two-group character lattice has rank m.
int lusztig_rank(const Symbol& s);

// Elementary abelian 2-group presented inside F_2^{generators}: the carrier
// is the common kernel of the membership functionals, quotiented by the span
// of the relation vectors.
struct GroupPresentation {
  std::vector<long long> generator_sizes;          // one z_d per value, decreasing
  std::vector<std::vector<int>> membership;        // functionals cutting out the carrier
  std::vector<std::vector<int>> relations;         // quotiented vectors, inside the carrier
  int rank() const;
  // Representatives of all characters, one sign vector on the generators per
  // character class (values +-1).
  std::vector<std::vector<int>> characters() const;
};

// Component group A(U) of the dual-side orbit, one generator per distinct
// part size. Pre: good parity for gc.
GroupPresentation component_group(const NilpotentOrbit& o, GroupCase gc);

// Metaplectic two-group of an all-even symplectic partition: one generator
// per part (decreasing order), adjacent generators identified pairwise.
GroupPresentation abar_mp(const Partition& p);
int abar_mp_rank(const Partition& p);

// Quotient A(U) -> Abar(U) in coordinates: column per z_d generator, row per
// unequal pair (leftmost first); entry 1 when some symbol entry of that pair
// is sourced from a part of size d. Rows pairing oddly with a central
// relation are corrected at the largest odd-multiplicity size, so every
// relation word maps to the identity.
struct AbarQuotient {
  std::vector<long long> generator_sizes;
  std::vector<std::vector<int>> matrix;   // m rows, one per unequal pair
};

AbarQuotient abar_quotient_map(const NilpotentOrbit& o, GroupCase gc);

std::string symbol_str(const Symbol& s);

}  // namespace bv
