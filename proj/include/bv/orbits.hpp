#pragma once

#include <string>
#include <vector>

#include "bv/partitions.hpp"

namespace bv {

// Ambient classical family of a nilpotent orbit: sp_N (N even), so_N (N odd),
// so_N (N even).
enum class Family { Sp, SoOdd, SoEven };

// Group under study: Sp_2n, SO_{2n+1}, SO_2n, Mp_2n.
enum class GroupCase { Cn, Bn, Dn, Mpn };

// Very even orbits (SoEven, all parts even) split into two classes.
enum class VeryEvenLabel { None, I, II };

ParityClass parity_class_of(Family f);

// Family of nilpotent orbits of the group's own Lie algebra.
Family group_side_family(GroupCase gc);
// Family of nilpotent orbits of the dual-group Lie algebra.
Family dual_side_family(GroupCase gc);
// Case whose dual side is this case's group side: Cn<->Bn, Dn and Mpn fixed.
GroupCase partner(GroupCase gc);

// Rank n of the group with dual-side ambient N: N = 2n+1 for Cn, 2n otherwise.
long long rank_of_dual_ambient(GroupCase gc, long long N);
long long dual_ambient_of_rank(GroupCase gc, long long n);

struct NilpotentOrbit {
  Family family = Family::Sp;
  Partition partition;
  VeryEvenLabel label = VeryEvenLabel::None;

  long long ambient() const;
  friend bool operator==(const NilpotentOrbit&, const NilpotentOrbit&) = default;
};

// Validates the partition against the family's parity class; demands a label
// exactly for very even SoEven orbits. Throws std::invalid_argument.
NilpotentOrbit classify(Family f, const Partition& p,
                        VeryEvenLabel label = VeryEvenLabel::None);

bool is_very_even(const NilpotentOrbit& o);
bool is_even(const NilpotentOrbit& o);

// Good parity for the dual-side orbit of gc: all parts odd for Cn/Dn, all
// parts even for Bn/Mpn.
bool has_good_parity(const NilpotentOrbit& o, GroupCase gc);
// Every part of the opposite parity.
bool has_uniform_bad_parity(const NilpotentOrbit& o, GroupCase gc);

// Duality recipe keyed by the group case; o must live on the group side of
// gc and the result lives on the dual side. Very even labels pass through
// unchanged.
NilpotentOrbit ls_dual(const NilpotentOrbit& o, GroupCase gc);

// Smallest special orbit containing o; o lives on the dual side of gc.
// Equals ls_dual(ls_dual(o, partner(gc)), gc).
NilpotentOrbit special_closure(const NilpotentOrbit& o, GroupCase gc);

bool is_special(const NilpotentOrbit& o, GroupCase gc);

// Fixed points of the metaplectic bidual on symplectic orbits.
bool is_antispecial(const NilpotentOrbit& o);

// Iterated induction from the zero orbit of a gl product: o lives on the
// group side; each step adds the size twice along the prefix and collapses
// within o's family.
NilpotentOrbit induce_orbit(const NilpotentOrbit& o,
                            const std::vector<long long>& gl_sizes);

// All orbits with the given ambient, very even ones contributing both labels.
std::vector<NilpotentOrbit> enumerate_orbits(Family f, long long ambient);

std::string family_name(Family f);
Family parse_family(const std::string& s);
std::string case_name(GroupCase gc);
GroupCase parse_case(const std::string& s);
std::string label_name(VeryEvenLabel l);
std::string orbit_str(const NilpotentOrbit& o);

}  // namespace bv
