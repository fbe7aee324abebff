#pragma once

#include <vector>

#include "bv/packets.hpp"
#include "bv/parameters.hpp"

namespace bv {

// Wavefront orbit of the packet: the good-parity unipotent orbit dualized
// inside the smaller group, then induced by the gl sizes of the inverse pairs
// and bad-parity pairs. Pre: validated unitary parameter.
NilpotentOrbit wavefront(const ArthurParameter& psi);

struct SpAnalysis {
  std::vector<Summand> psi_bp;           // trivial good-parity and
                                         // chi_{+-1/2,-+1/2} bad-parity summands
  std::vector<long long> exchangeable;   // distinct bad sizes a with
                                         // u_bp + {a,a} not special
  NilpotentOrbit u0;                     // orbit of all psi_bp dimensions
  NilpotentOrbit u_sp;                   // special closure of u0
  ArthurParameter psi_sp;                // parameter with u0 replaced by u_sp
};

// Special shape of psi: the non-bp summands are kept, the bp part is rebuilt
// on u_sp with trivial characters on good-parity sizes and balanced
// chi_{1/2,-1/2} / chi_{-1/2,1/2} pairs on bad-parity sizes.
SpAnalysis sp_analysis(const ArthurParameter& psi);

// Necessary condition for packets to share constituents: equality of the
// canonicalized psi_sp.
bool same_sp_class(const ArthurParameter& a, const ArthurParameter& b);

// Canonical multiset form used by same_sp_class.
std::vector<Summand> canonical_summands(const ArthurParameter& psi);

}  // namespace bv
