#include "bv/orbits.hpp"

#include <algorithm>
#include <stdexcept>

namespace bv {

ParityClass parity_class_of(Family f) {
  return f == Family::Sp ? ParityClass::Pm1 : ParityClass::P1;
}

Family group_side_family(GroupCase gc) {
  switch (gc) {
    case GroupCase::Cn: return Family::Sp;
    case GroupCase::Bn: return Family::SoOdd;
    case GroupCase::Dn: return Family::SoEven;
    case GroupCase::Mpn: return Family::Sp;
  }
  throw std::logic_error("bad case");
}

Family dual_side_family(GroupCase gc) {
  switch (gc) {
    case GroupCase::Cn: return Family::SoOdd;
    case GroupCase::Bn: return Family::Sp;
    case GroupCase::Dn: return Family::SoEven;
    case GroupCase::Mpn: return Family::Sp;
  }
  throw std::logic_error("bad case");
}

GroupCase partner(GroupCase gc) {
  switch (gc) {
    case GroupCase::Cn: return GroupCase::Bn;
    case GroupCase::Bn: return GroupCase::Cn;
    case GroupCase::Dn: return GroupCase::Dn;
    case GroupCase::Mpn: return GroupCase::Mpn;
  }
  throw std::logic_error("bad case");
}

long long rank_of_dual_ambient(GroupCase gc, long long N) {
  if (gc == GroupCase::Cn) {
    if (N % 2 == 0) throw std::invalid_argument("Cn dual ambient must be odd");
    return (N - 1) / 2;
  }
  if (N % 2 != 0) throw std::invalid_argument("dual ambient must be even");
  return N / 2;
}

long long dual_ambient_of_rank(GroupCase gc, long long n) {
  if (n < 0) throw std::invalid_argument("negative rank");
  return gc == GroupCase::Cn ? 2 * n + 1 : 2 * n;
}

long long NilpotentOrbit::ambient() const { return partition_sum(partition); }

namespace {

bool very_even_partition(const Partition& p) {
  if (p.empty()) return false;
  for (long long part : p)
    if (part % 2 != 0) return false;
  return true;
}

NilpotentOrbit classify_impl(Family f, const Partition& p, VeryEvenLabel label,
                             bool allow_unlabeled) {
  check_partition(p);
  if (f == Family::SoOdd && partition_sum(p) % 2 == 0)
    throw std::invalid_argument("so_N with N odd requires odd partition sum");
  if (f != Family::SoOdd && partition_sum(p) % 2 != 0)
    throw std::invalid_argument("even ambient requires even partition sum");
  if (!parity_class_member(p, parity_class_of(f)))
    throw std::invalid_argument("partition " + partition_str(p) +
                                " is not a " +
                                (f == Family::Sp ? std::string("symplectic")
                                                 : std::string("orthogonal")) +
                                " nilpotent class");
  bool ve = f == Family::SoEven && very_even_partition(p);
  if (ve) {
    if (label == VeryEvenLabel::None && !allow_unlabeled)
      throw std::invalid_argument("very even orbit " + partition_str(p) +
                                  " requires a I/II label");
  } else if (label != VeryEvenLabel::None) {
    throw std::invalid_argument("label given for an orbit that is not very even");
  }
  return NilpotentOrbit{f, p, ve ? label : VeryEvenLabel::None};
}

CollapseFamily collapse_family_of(Family f) {
  switch (f) {
    case Family::Sp: return CollapseFamily::C;
    case Family::SoOdd: return CollapseFamily::B;
    case Family::SoEven: return CollapseFamily::D;
  }
  throw std::logic_error("bad family");
}

Partition append_part(Partition p, long long part) {
  p.push_back(part);
  std::sort(p.begin(), p.end(), std::greater<long long>());
  return p;
}

// Modified symplectic collapse of the metaplectic recipe: the greedy loop runs
// until the largest odd size with odd multiplicity is 1, which is removed.
Partition mp_collapse(Partition q) {
  for (;;) {
    long long r = -1;
    for (size_t i = 0; i < q.size();) {
      size_t j = i;
      while (j < q.size() && q[j] == q[i]) ++j;
      if (q[i] % 2 == 1 && (j - i) % 2 != 0) {
        r = q[i];
        break;
      }
      i = j;
    }
    if (r < 0)
      throw std::logic_error("metaplectic collapse lost its terminal unit part");
    if (r == 1) {
      q.erase(std::find(q.begin(), q.end(), 1LL));
      return q;
    }
    size_t last = 0;
    for (size_t i = 0; i < q.size(); ++i)
      if (q[i] == r) last = i;
    q[last] -= 1;
    size_t dest = q.size();
    for (size_t i = 0; i < q.size(); ++i) {
      if (i == last) continue;
      if (q[i] < r - 1) {
        dest = i;
        break;
      }
    }
    if (dest == q.size())
      q.push_back(1);
    else
      q[dest] += 1;
    std::sort(q.begin(), q.end(), std::greater<long long>());
  }
}

}  // namespace

NilpotentOrbit classify(Family f, const Partition& p, VeryEvenLabel label) {
  return classify_impl(f, p, label, false);
}

// Internal: constructions whose output label is not determined by the input
// (duality, induction, spectral closures) carry very even results unlabeled.
NilpotentOrbit classify_relaxed(Family f, const Partition& p,
                                VeryEvenLabel label) {
  return classify_impl(f, p, label, true);
}

bool is_very_even(const NilpotentOrbit& o) {
  return o.family == Family::SoEven && very_even_partition(o.partition);
}

bool is_even(const NilpotentOrbit& o) {
  if (o.partition.empty()) return true;
  for (long long part : o.partition)
    if (part % 2 != o.partition[0] % 2) return false;
  return true;
}

namespace {

bool good_size(GroupCase gc, long long d) {
  // Dual-side good parity: odd blocks for Cn/Dn, even blocks for Bn/Mpn.
  bool odd_good = gc == GroupCase::Cn || gc == GroupCase::Dn;
  return odd_good == (d % 2 == 1);
}

}  // namespace

bool has_good_parity(const NilpotentOrbit& o, GroupCase gc) {
  for (long long part : o.partition)
    if (!good_size(gc, part)) return false;
  return true;
}

bool has_uniform_bad_parity(const NilpotentOrbit& o, GroupCase gc) {
  if (o.partition.empty()) return false;
  for (long long part : o.partition)
    if (good_size(gc, part)) return false;
  return true;
}

NilpotentOrbit ls_dual(const NilpotentOrbit& o, GroupCase gc) {
  if (o.family != group_side_family(gc))
    throw std::invalid_argument("duality recipe " + case_name(gc) +
                                " expects a " + family_name(group_side_family(gc)) +
                                " orbit");
  Partition result;
  switch (gc) {
    case GroupCase::Cn:
      result = collapse(transpose(append_part(o.partition, 1)), CollapseFamily::B);
      break;
    case GroupCase::Bn: {
      Partition t = transpose(o.partition);
      if (t.empty()) throw std::invalid_argument("odd orthogonal orbit is never empty");
      t.back() -= 1;
      if (t.back() == 0) t.pop_back();
      result = collapse(t, CollapseFamily::C);
      break;
    }
    case GroupCase::Dn:
      result = collapse(transpose(o.partition), CollapseFamily::D);
      break;
    case GroupCase::Mpn:
      result = mp_collapse(transpose(append_part(o.partition, 1)));
      break;
  }
  VeryEvenLabel carried =
      is_very_even(o) ? o.label : VeryEvenLabel::None;
  return classify_relaxed(dual_side_family(gc), result, carried);
}

NilpotentOrbit special_closure(const NilpotentOrbit& o, GroupCase gc) {
  if (o.family != dual_side_family(gc))
    throw std::invalid_argument("special closure for " + case_name(gc) +
                                " expects a " + family_name(dual_side_family(gc)) +
                                " orbit");
  return ls_dual(ls_dual(o, partner(gc)), gc);
}

bool is_special(const NilpotentOrbit& o, GroupCase gc) {
  return special_closure(o, gc) == o;
}

bool is_antispecial(const NilpotentOrbit& o) {
  if (o.family != Family::Sp)
    throw std::invalid_argument("antispecial orbits are symplectic");
  return special_closure(o, GroupCase::Mpn) == o;
}

NilpotentOrbit induce_orbit(const NilpotentOrbit& o,
                            const std::vector<long long>& gl_sizes) {
  Partition p = o.partition;
  CollapseFamily cf = collapse_family_of(o.family);
  for (long long a : gl_sizes) {
    if (a <= 0) throw std::invalid_argument("gl sizes must be positive");
    p = collapse(add_to_prefix(p, a, 2), cf);
  }
  VeryEvenLabel carried = is_very_even(o) ? o.label : VeryEvenLabel::None;
  return classify_relaxed(o.family, p, carried);
}

std::vector<NilpotentOrbit> enumerate_orbits(Family f, long long ambient) {
  if (ambient < 0) throw std::invalid_argument("negative ambient");
  if (f == Family::SoOdd && ambient % 2 == 0)
    throw std::invalid_argument("so_N with N odd requires odd ambient");
  if (f != Family::SoOdd && ambient % 2 != 0)
    throw std::invalid_argument("even ambient required");
  std::vector<NilpotentOrbit> out;
  for (const Partition& p : partitions_of(ambient)) {
    if (!parity_class_member(p, parity_class_of(f))) continue;
    if (f == Family::SoEven && very_even_partition(p)) {
      out.push_back(classify(f, p, VeryEvenLabel::I));
      out.push_back(classify(f, p, VeryEvenLabel::II));
    } else {
      out.push_back(classify(f, p));
    }
  }
  return out;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Sp: return "Sp";
    case Family::SoOdd: return "SoOdd";
    case Family::SoEven: return "SoEven";
  }
  throw std::logic_error("bad family");
}

Family parse_family(const std::string& s) {
  if (s == "Sp") return Family::Sp;
  if (s == "SoOdd") return Family::SoOdd;
  if (s == "SoEven") return Family::SoEven;
  throw std::invalid_argument("unknown family: " + s);
}

std::string case_name(GroupCase gc) {
  switch (gc) {
    case GroupCase::Cn: return "Cn";
    case GroupCase::Bn: return "Bn";
    case GroupCase::Dn: return "Dn";
    case GroupCase::Mpn: return "Mpn";
  }
  throw std::logic_error("bad case");
}

GroupCase parse_case(const std::string& s) {
  if (s == "Cn") return GroupCase::Cn;
  if (s == "Bn") return GroupCase::Bn;
  if (s == "Dn") return GroupCase::Dn;
  if (s == "Mpn") return GroupCase::Mpn;
  throw std::invalid_argument("unknown group case: " + s);
}

std::string label_name(VeryEvenLabel l) {
  switch (l) {
    case VeryEvenLabel::None: return "";
    case VeryEvenLabel::I: return "I";
    case VeryEvenLabel::II: return "II";
  }
  throw std::logic_error("bad label");
}

std::string orbit_str(const NilpotentOrbit& o) {
  std::string s = partition_str(o.partition);
  if (o.label != VeryEvenLabel::None) s += "^" + label_name(o.label);
  return s;
}

}  // namespace bv
