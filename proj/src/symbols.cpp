#include "bv/symbols.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace bv {

namespace {

void require_dual_side(const NilpotentOrbit& o, GroupCase gc, const char* who) {
  if (o.family != dual_side_family(gc))
    throw std::invalid_argument(std::string(who) +
                                ": orbit does not live on the dual side of " +
                                case_name(gc));
  if (!has_good_parity(o, gc))
    throw std::invalid_argument(std::string(who) + ": orbit of " +
                                case_name(gc) + " does not have good parity");
}

// F_2 rows as bitmasks, generator i at bit i.
uint32_t to_mask(const std::vector<int>& row) {
  uint32_t m = 0;
  for (size_t i = 0; i < row.size(); ++i)
    if (row[i] & 1) m |= (1u << i);
  return m;
}

bool dot(uint32_t a, uint32_t b) { return std::popcount(a & b) & 1; }

// Echelon basis with distinct leading bits; reduce() is a canonical coset
// representative map for the row span.
struct F2Basis {
  std::vector<uint32_t> pivot = std::vector<uint32_t>(32, 0);
  int rank = 0;

  uint32_t reduce(uint32_t x) const {
    for (int i = 31; i >= 0; --i)
      if (((x >> i) & 1) && pivot[i]) x ^= pivot[i];
    return x;
  }
  void add(uint32_t r) {
    r = reduce(r);
    if (!r) return;
    pivot[31 - std::countl_zero(r)] = r;
    ++rank;
  }
};

F2Basis span_of(const std::vector<std::vector<int>>& rows) {
  F2Basis b;
  for (const auto& r : rows) b.add(to_mask(r));
  return b;
}

PairStructure pair_structure_impl(GroupCase gc, const std::vector<long long>& xs,
                                  const std::vector<long long>& source) {
  PairStructure ps;
  long long t = static_cast<long long>(xs.size());
  if (t == 0) return ps;
  auto add_pair = [&](long long lo, long long hi) {
    SymbolPair pr;
    pr.low = xs[lo];
    pr.high = xs[hi];
    pr.equal = pr.low == pr.high;
    pr.source_low = source[lo];
    pr.source_high = source[hi];
    if (!pr.equal) ++ps.m;
    ps.pairs.push_back(pr);
  };
  switch (gc) {
    case GroupCase::Cn:
    case GroupCase::Mpn:
      ps.unpaired.push_back(xs[0]);
      for (long long j = 1; j + 1 <= t - 1; j += 2) add_pair(j, j + 1);
      break;
    case GroupCase::Bn:
      for (long long j = 0; j + 1 <= t - 2; j += 2) add_pair(j, j + 1);
      ps.unpaired.push_back(xs[t - 1]);
      break;
    case GroupCase::Dn:
      ps.unpaired.push_back(xs[0]);
      for (long long j = 1; j + 1 <= t - 2; j += 2) add_pair(j, j + 1);
      ps.unpaired.push_back(xs[t - 1]);
      break;
  }
  return ps;
}

}  // namespace

SymbolDetail symbol_detail_of(const NilpotentOrbit& o, GroupCase gc) {
  require_dual_side(o, gc, "symbol_of");
  std::vector<long long> parts(o.partition.rbegin(), o.partition.rend());
  // Entry count: odd for the one-row-offset shapes, even for Dn.
  size_t want = gc == GroupCase::Dn ? 0 : 1;
  if (parts.size() % 2 != want) parts.insert(parts.begin(), 0);

  SymbolDetail d;
  d.symbol.group_case = gc;
  long long shift = gc == GroupCase::Mpn ? 1 : 0;
  for (size_t k = 0; k < parts.size(); ++k) {
    long long e = parts[k] + static_cast<long long>(k) + shift;
    long long v = e / 2;  // (e-1)/2 for odd e
    bool top = gc == GroupCase::Bn ? e % 2 == 0 : e % 2 == 1;
    // Good parity makes the parity rule positional: even slots go on top.
    assert(top == (k % 2 == 0));
    if (top)
      d.symbol.top.push_back(v);
    else
      d.symbol.bottom.push_back(v);
    d.xs.push_back(v);
    d.source.push_back(parts[k]);
  }
  return d;
}

Symbol symbol_of(const NilpotentOrbit& o, GroupCase gc) {
  return symbol_detail_of(o, gc).symbol;
}

std::vector<long long> interleave(const Symbol& s) {
  size_t nt = s.top.size(), nb = s.bottom.size();
  if (s.group_case == GroupCase::Dn ? nt != nb : nt != nb + 1)
    throw std::invalid_argument("interleave: malformed symbol shape");
  std::vector<long long> xs;
  for (size_t i = 0; i < nt; ++i) {
    xs.push_back(s.top[i]);
    if (i < nb) xs.push_back(s.bottom[i]);
  }
  return xs;
}

PairStructure pair_structure(const Symbol& s) {
  std::vector<long long> xs = interleave(s);
  return pair_structure_impl(s.group_case, xs,
                             std::vector<long long>(xs.size(), 0));
}

PairStructure pair_structure(const SymbolDetail& d) {
  if (d.xs.size() != d.source.size() ||
      d.xs.size() != d.symbol.top.size() + d.symbol.bottom.size())
    throw std::invalid_argument("pair_structure: inconsistent symbol detail");
  return pair_structure_impl(d.symbol.group_case, d.xs, d.source);
}

int lusztig_rank(const Symbol& s) { return pair_structure(s).m; }

int GroupPresentation::rank() const {
  F2Basis m = span_of(membership);
  F2Basis r = span_of(relations);
  // Relation words lie in the carrier.
  for (const auto& rel : relations)
    for (const auto& w : membership) assert(!dot(to_mask(rel), to_mask(w)));
  return static_cast<int>(generator_sizes.size()) - m.rank - r.rank;
}

std::vector<std::vector<int>> GroupPresentation::characters() const {
  size_t t = generator_sizes.size();
  if (t > 20)
    throw std::length_error("characters: too many generators to enumerate");
  std::vector<uint32_t> rel;
  for (const auto& r : relations) rel.push_back(to_mask(r));
  F2Basis mem = span_of(membership);

  std::vector<std::vector<int>> out;
  std::set<uint32_t> seen;
  for (uint64_t c = 0; c < (1ull << t); ++c) {
    // Generator 0 is the most significant bit, so + sorts before -.
    uint32_t eta = 0;
    for (size_t i = 0; i < t; ++i)
      if ((c >> (t - 1 - i)) & 1) eta |= 1u << i;
    bool character = true;
    for (uint32_t r : rel)
      if (dot(eta, r)) {
        character = false;
        break;
      }
    if (!character) continue;
    // Characters agreeing on the carrier differ by a membership functional.
    if (!seen.insert(mem.reduce(eta)).second) continue;
    std::vector<int> signs(t);
    for (size_t i = 0; i < t; ++i) signs[i] = (eta >> i) & 1 ? -1 : 1;
    out.push_back(signs);
  }
  assert(out.size() == (1ull << rank()));
  return out;
}

GroupPresentation component_group(const NilpotentOrbit& o, GroupCase gc) {
  require_dual_side(o, gc, "component_group");
  GroupPresentation g;
  std::vector<long long> mult;
  for (long long p : o.partition) {
    if (!g.generator_sizes.empty() && g.generator_sizes.back() == p)
      ++mult.back();
    else {
      g.generator_sizes.push_back(p);
      mult.push_back(1);
    }
  }
  size_t t = g.generator_sizes.size();
  if (t == 0) return g;
  // -Id lands in the class flipping exactly the odd-multiplicity sizes.
  std::vector<int> center(t);
  bool central = false;
  for (size_t i = 0; i < t; ++i) {
    center[i] = mult[i] % 2;
    central = central || center[i];
  }
  switch (gc) {
    case GroupCase::Cn:
      // Odd orthogonal dual: full orthogonal centralizer, trivial center.
      break;
    case GroupCase::Bn:
    case GroupCase::Mpn:
      if (central) g.relations.push_back(center);
      break;
    case GroupCase::Dn:
      // Each flip has determinant (-1)^d with d odd.
      g.membership.push_back(std::vector<int>(t, 1));
      if (central) g.relations.push_back(center);
      break;
  }
  return g;
}

GroupPresentation abar_mp(const Partition& p) {
  check_partition(p);
  for (long long d : p)
    if (d % 2 != 0)
      throw std::invalid_argument("abar_mp: all parts must be even");
  GroupPresentation g;
  g.generator_sizes = p;
  size_t t = p.size();
  for (size_t i = 0; i + 1 < t; ++i)
    if (p[i] == p[i + 1]) {
      std::vector<int> r(t, 0);
      r[i] = r[i + 1] = 1;
      g.relations.push_back(r);
    }
  // Adjacent identifications at even 1-based positions; a trailing lone
  // generator is killed outright.
  for (size_t i = 1; i < t; i += 2) {
    std::vector<int> r(t, 0);
    r[i] = 1;
    if (i + 1 < t) r[i + 1] = 1;
    g.relations.push_back(r);
  }
  return g;
}

int abar_mp_rank(const Partition& p) { return abar_mp(p).rank(); }

AbarQuotient abar_quotient_map(const NilpotentOrbit& o, GroupCase gc) {
  if (gc == GroupCase::Mpn)
    throw std::invalid_argument(
        "abar_quotient_map: metaplectic packets are indexed through abar_mp");
  GroupPresentation a = component_group(o, gc);
  SymbolDetail d = symbol_detail_of(o, gc);
  PairStructure ps = pair_structure(d);

  AbarQuotient q;
  q.generator_sizes = a.generator_sizes;
  size_t t = q.generator_sizes.size();
  auto col_of = [&](long long size) {
    for (size_t i = 0; i < t; ++i)
      if (q.generator_sizes[i] == size) return static_cast<int>(i);
    return -1;  // padding entry
  };
  for (const SymbolPair& pr : ps.pairs) {
    if (pr.equal) continue;
    std::vector<int> row(t, 0);
    if (int c = col_of(pr.source_low); c >= 0) row[c] ^= 1;
    if (int c = col_of(pr.source_high); c >= 0) row[c] ^= 1;
    q.matrix.push_back(row);
  }
  // A row pairing oddly with a central relation (the two sources have
  // opposite multiplicity parities) is repaired at the largest
  // odd-multiplicity size, so relation words die in Abar.
  for (const auto& rel : a.relations) {
    int fix = -1;
    for (size_t i = 0; i < t && fix < 0; ++i)
      if (rel[i]) fix = static_cast<int>(i);
    for (auto& row : q.matrix) {
      int s = 0;
      for (size_t i = 0; i < t; ++i) s ^= row[i] & rel[i];
      if (s) {
        assert(fix >= 0);
        row[fix] ^= 1;
      }
    }
  }
  for (const auto& rel : a.relations)
    for (const auto& row : q.matrix) {
      int s = 0;
      for (size_t i = 0; i < t; ++i) s ^= row[i] & rel[i];
      assert(!s);
      (void)s;
    }
  return q;
}

std::string symbol_str(const Symbol& s) {
  std::string out = "(";
  for (size_t i = 0; i < s.top.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.top[i]);
  }
  out += " / ";
  for (size_t i = 0; i < s.bottom.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.bottom[i]);
  }
  out += ")";
  return out;
}

}  // namespace bv
