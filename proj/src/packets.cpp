#include "bv/packets.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bv {

namespace {

using Key = std::pair<Gaussian, Gaussian>;

Key flip_key(const Gaussian& l, const Gaussian& m) { return {l + m, l - m}; }

// Value counts of a real coordinate multiset, largest value first.
using Counts = std::map<Rational, long long, std::greater<Rational>>;

Counts counts_of(const std::vector<Gaussian>& values) {
  Counts c;
  for (const Gaussian& v : values) {
    assert(v.is_real());
    ++c[v.re];
  }
  return c;
}

void consume(Counts& c, const Rational& v) {
  auto it = c.find(v);
  assert(it != c.end());
  if (--it->second == 0) c.erase(it);
}

// One copy of each distinct remaining value, decreasing.
std::vector<Gaussian> extract_decreasing(Counts& c) {
  std::vector<Gaussian> out;
  std::vector<Rational> taken;
  for (const auto& [v, mult] : c) out.emplace_back(v), taken.push_back(v);
  for (const Rational& v : taken) consume(c, v);
  return out;
}

// Maximal strictly decreasing string: the distinct remaining values followed
// by negatives of remaining positive values, smallest first, one copy each.
std::vector<Gaussian> extract_string(Counts& c) {
  std::vector<Gaussian> out = extract_decreasing(c);
  if (out.empty()) return out;
  Rational end = out.back().re;
  std::vector<Rational> positives;
  for (const auto& [v, mult] : c)
    if (v > Rational(0)) positives.push_back(v);
  std::reverse(positives.begin(), positives.end());
  for (const Rational& v : positives)
    if (-v < end) {
      out.emplace_back(-v);
      end = -v;
      consume(c, v);
    }
  return out;
}

std::vector<Gaussian> remaining_decreasing(const Counts& c) {
  std::vector<Gaussian> out;
  for (const auto& [v, mult] : c)
    for (long long i = 0; i < mult; ++i) out.emplace_back(v);
  return out;
}

bool strictly_decreasing(const std::vector<Gaussian>& v) {
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (!(v[i + 1] < v[i])) return false;
  return true;
}

// Flip the sign of the smallest strictly positive entry whose negative is
// absent, then re-sort decreasingly.
std::vector<Gaussian> tilde_of(const std::vector<Gaussian>& f) {
  for (size_t i = f.size(); i-- > 0;) {
    const Gaussian& v = f[i];
    if (!(Gaussian(0) < v)) continue;
    if (std::find(f.begin(), f.end(), -v) != f.end()) continue;
    std::vector<Gaussian> out = f;
    out[i] = -v;
    std::sort(out.begin(), out.end(),
              [](const Gaussian& x, const Gaussian& y) { return y < x; });
    return out;
  }
  throw std::logic_error("tilde_of: no flippable coordinate");
}

void append(std::vector<Gaussian>& dst, const std::vector<Gaussian>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

}  // namespace

WeylKind weyl_kind(GroupCase gc) {
  return gc == GroupCase::Dn ? WeylKind::D : WeylKind::BC;
}

LanglandsParam make_param(WeylKind kind, std::vector<Gaussian> lambda,
                          std::vector<Gaussian> mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("make_param: coordinate count mismatch");
  LanglandsParam p;
  p.kind = kind;
  p.lambda = std::move(lambda);
  p.mu = std::move(mu);
  return p;
}

LanglandsParam make_zero(WeylKind kind) {
  LanglandsParam p;
  p.zero = true;
  p.kind = kind;
  return p;
}

LanglandsParam normal_form(const LanglandsParam& p) {
  if (p.zero) return p;
  if (p.lambda.size() != p.mu.size())
    throw std::invalid_argument("normal_form: coordinate count mismatch");
  size_t n = p.lambda.size();
  std::vector<std::pair<Gaussian, Gaussian>> pairs(n);
  int flips = 0;
  bool zero_pair = false;
  for (size_t i = 0; i < n; ++i) {
    Gaussian l = p.lambda[i], m = p.mu[i];
    if (l.is_zero() && m.is_zero()) zero_pair = true;
    if (p.kind != WeylKind::GL && flip_key(l, m) < flip_key(-l, -m)) {
      l = -l;
      m = -m;
      ++flips;
    }
    pairs[i] = {l, m};
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const std::pair<Gaussian, Gaussian>& x,
               const std::pair<Gaussian, Gaussian>& y) {
              return flip_key(y.first, y.second) < flip_key(x.first, x.second);
            });
  LanglandsParam out;
  out.kind = p.kind;
  for (auto& [l, m] : pairs) {
    out.lambda.push_back(l);
    out.mu.push_back(m);
  }
  if (p.kind == WeylKind::D && flips % 2 != 0 && !zero_pair)
    out.d_flip_parity = 1;
  return out;
}

bool equivalent(const LanglandsParam& a, const LanglandsParam& b) {
  if (a.zero || b.zero) return a.zero == b.zero && a.kind == b.kind;
  return normal_form(a) == normal_form(b);
}

std::vector<WeilCharacter> exponents(const LanglandsParam& p) {
  if (p.zero) throw std::invalid_argument("exponents: zero parameter");
  if (p.lambda.size() != p.mu.size())
    throw std::invalid_argument("exponents: coordinate count mismatch");
  std::vector<WeilCharacter> out;
  for (size_t i = 0; i < p.lambda.size(); ++i) {
    Gaussian diff = p.lambda[i] - p.mu[i];
    if (!diff.is_real() || !diff.re.is_integer())
      throw std::invalid_argument("exponents: nonintegral difference " +
                                  diff.str());
    if (Rational(1) < abs(diff.re))
      throw std::invalid_argument("exponents: difference " + diff.re.str() +
                                  " exceeds the unitary bound");
    out.push_back(WeilCharacter{p.lambda[i], p.mu[i]});
  }
  return out;
}

LanglandsParam gl_param(const std::vector<Summand>& summands) {
  LanglandsParam p;
  p.kind = WeylKind::GL;
  for (const Summand& s : summands)
    for (long long j = 0; j < s.dim; ++j) {
      Gaussian shift(Rational(s.dim - 1 - 2 * j, 2));
      p.lambda.push_back(s.chi.a + shift);
      p.mu.push_back(s.chi.b + shift);
    }
  return p;
}

BVData bv_levi_data(const NilpotentOrbit& o, GroupCase gc) {
  BVData d;
  d.group_case = gc;
  d.detail = symbol_detail_of(o, gc);
  d.pairs = pair_structure(d.detail);
  const std::vector<long long>& xs = d.detail.xs;
  long long t = static_cast<long long>(xs.size());
  long long k = static_cast<long long>(d.pairs.pairs.size());
  switch (gc) {
    case GroupCase::Cn:
    case GroupCase::Mpn:
      d.x0 = xs[0];
      d.m0_rank = d.x0;
      d.mp_factor = gc == GroupCase::Mpn && d.x0 > 0;
      for (long long i = k; i >= 1; --i)
        d.gl_sizes.push_back(xs[2 * i] + xs[2 * i - 1] - 2 * i + 1 -
                             (gc == GroupCase::Mpn ? 1 : 0));
      break;
    case GroupCase::Bn:
      d.x0 = xs[t - 1];
      d.m0_rank = d.x0 - k;
      for (long long i = k - 1; i >= 0; --i)
        d.gl_sizes.push_back(xs[2 * i] + xs[2 * i + 1] - 2 * i);
      break;
    case GroupCase::Dn:
      d.x0 = t > 0 ? xs[0] : 0;
      d.m0_rank = t > 0 ? xs[t - 1] + xs[0] - k : 0;
      for (long long i = k; i >= 1; --i)
        d.gl_sizes.push_back(xs[2 * i] + xs[2 * i - 1] - 2 * i + 1);
      break;
  }
  long long total = d.m0_rank;
  for (long long g : d.gl_sizes) {
    assert(g >= 1);
    total += g;
  }
  assert(total ==
         rank_of_dual_ambient(gc, partition_sum(o.partition)));
  (void)total;
  for (long long j = 0; j < k; ++j)
    d.pair_is_unequal.push_back(!d.pairs.pairs[k - 1 - j].equal);
  return d;
}

BVData bv_strings(const NilpotentOrbit& o, GroupCase gc) {
  BVData d = bv_levi_data(o, gc);
  Counts counts = counts_of(infinitesimal_character(o));
  long long k = static_cast<long long>(d.gl_sizes.size());

  if (gc == GroupCase::Bn || gc == GroupCase::Dn)
    d.lambda0 = extract_decreasing(counts);
  for (long long j = 0; j < k; ++j) {
    d.f.push_back(extract_string(counts));
    assert(static_cast<long long>(d.f.back().size()) == d.gl_sizes[j]);
  }
  if (gc == GroupCase::Cn || gc == GroupCase::Mpn) {
    d.lambda0 = remaining_decreasing(counts);
    assert(static_cast<long long>(d.lambda0.size()) == d.x0);
  } else if (gc == GroupCase::Dn) {
    std::vector<Gaussian> rest = remaining_decreasing(counts);
    for (size_t i = rest.size(); i-- > 0;) {
      assert(!rest[i].is_zero());
      d.lambda0.push_back(-rest[i]);
    }
  } else {
    assert(remaining_decreasing(counts).empty());
  }
  assert(strictly_decreasing(d.lambda0));
  assert(static_cast<long long>(d.lambda0.size()) == d.m0_rank);
  for (long long j = 0; j < k; ++j)
    d.ftilde.push_back(d.pair_is_unequal[j] ? tilde_of(d.f[j])
                                            : std::vector<Gaussian>{});
  return d;
}

namespace {

void check_packet_preconditions(const NilpotentOrbit& o, GroupCase gc) {
  if (o.family != dual_side_family(gc))
    throw std::invalid_argument("bv_packet: orbit does not live on the dual side of " +
                                std::string(case_name(gc)));
  if (gc == GroupCase::Dn && is_very_even(o))
    throw std::invalid_argument("bv_packet: unsupported very even orbit " +
                                orbit_str(o));
  if (!is_even(o))
    throw std::invalid_argument("bv_packet: orbit " + orbit_str(o) +
                                " is not even");
  bool closed = gc == GroupCase::Mpn ? is_antispecial(o) : is_special(o, gc);
  if (!closed)
    throw std::invalid_argument(
        "bv_packet: orbit " + orbit_str(o) +
        (gc == GroupCase::Mpn ? " is not antispecial" : " is not special"));
}

}  // namespace

Packet bv_packet(const NilpotentOrbit& o, GroupCase gc) {
  check_packet_preconditions(o, gc);
  Packet pkt;
  pkt.orbit = o;
  pkt.group_case = gc;
  WeylKind kind = weyl_kind(gc);

  if (!has_good_parity(o, gc)) {
    if (gc != GroupCase::Bn)
      throw std::invalid_argument(
          "bv_packet: bad-parity orbits are only supported for Bn");
    // Blocks pair up {a, a}; the packet is the induced trivial singleton.
    std::vector<Gaussian> lam;
    for (size_t i = 0; i < o.partition.size(); i += 2) {
      assert(i + 1 < o.partition.size() &&
             o.partition[i] == o.partition[i + 1]);
      for (long long j = 0; j < o.partition[i]; ++j)
        lam.emplace_back(Rational(o.partition[i] - 1 - 2 * j, 2));
    }
    pkt.members.push_back(
        {std::vector<int>{}, normal_form(make_param(kind, lam, lam))});
    return pkt;
  }

  BVData s = bv_strings(o, gc);
  long long k = static_cast<long long>(s.gl_sizes.size());
  std::vector<long long> unequal;
  for (long long j = 0; j < k; ++j)
    if (s.pair_is_unequal[j]) unequal.push_back(j);
  pkt.m = static_cast<int>(unequal.size());
  pkt.mp_coordinate = s.mp_factor;
  int bits = pkt.m + (s.mp_factor ? 1 : 0);
  if (bits > 20) throw std::length_error("bv_packet: too many members");

  for (uint64_t c = 0; c < (1ull << bits); ++c) {
    std::vector<int> eps(bits);
    for (int idx = 0; idx < bits; ++idx)
      eps[idx] = (c >> (bits - 1 - idx)) & 1 ? -1 : 1;

    std::vector<const std::vector<Gaussian>*> mu_f(k);
    for (long long j = 0; j < k; ++j) mu_f[j] = &s.f[j];
    for (int idx = 0; idx < pkt.m; ++idx)
      if (eps[idx] == -1) mu_f[unequal[idx]] = &s.ftilde[unequal[idx]];
    std::vector<Gaussian> mu0 = s.lambda0;
    if (s.mp_factor && eps[bits - 1] == -1) {
      assert(!mu0.empty());
      mu0.back() = -mu0.back();
    }

    std::vector<Gaussian> lam, mu;
    if (gc == GroupCase::Bn || gc == GroupCase::Dn) {
      append(lam, s.lambda0);
      append(mu, s.lambda0);
      for (long long j = 0; j < k; ++j) {
        append(lam, s.f[j]);
        append(mu, *mu_f[j]);
      }
    } else {
      for (long long j = 0; j < k; ++j) {
        append(lam, s.f[j]);
        append(mu, *mu_f[j]);
      }
      append(lam, s.lambda0);
      append(mu, mu0);
    }
    pkt.members.push_back(
        {std::move(eps), normal_form(make_param(kind, lam, mu))});
  }
  return pkt;
}

namespace {

// Solve M x = rhs over F_2 by elimination; columns [0, guarded) must be
// uniquely determined. Returns false when inconsistent.
struct F2Solve {
  std::vector<std::vector<int>> rows;  // coefficient rows
  std::vector<int> rhs;

  bool solve(int guarded, std::vector<int>& solution) const {
    std::vector<std::vector<int>> a = rows;
    std::vector<int> b = rhs;
    size_t nrows = a.size();
    int ncols = nrows == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<int> pivot_of_col(ncols, -1);
    size_t r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
      size_t p = r;
      while (p < nrows && a[p][c] == 0) ++p;
      if (p == nrows) continue;
      std::swap(a[p], a[r]);
      std::swap(b[p], b[r]);
      for (size_t i = 0; i < nrows; ++i)
        if (i != r && a[i][c]) {
          for (int cc = 0; cc < ncols; ++cc) a[i][cc] ^= a[r][cc];
          b[i] ^= b[r];
        }
      pivot_of_col[c] = static_cast<int>(r);
      ++r;
    }
    for (size_t i = r; i < nrows; ++i)
      if (b[i]) return false;
    for (int c = 0; c < guarded; ++c)
      if (pivot_of_col[c] == -1)
        throw std::logic_error("bv_packet_member: ambiguous character index");
    solution.assign(ncols, 0);
    for (int c = 0; c < ncols; ++c)
      if (pivot_of_col[c] != -1) solution[c] = b[pivot_of_col[c]];
    return true;
  }
};

}  // namespace

LanglandsParam bv_packet_member(const NilpotentOrbit& o, GroupCase gc,
                                const std::vector<int>& eta) {
  if (!has_good_parity(o, gc))
    throw std::invalid_argument("bv_packet_member: bad parity");
  Packet pkt = bv_packet(o, gc);
  std::vector<int> eps;

  if (gc == GroupCase::Mpn) {
    std::vector<long long> sizes;
    for (long long p : o.partition)
      if (sizes.empty() || sizes.back() != p) sizes.push_back(p);
    if (eta.size() != sizes.size())
      throw std::invalid_argument("bv_packet_member: character length");
    auto sign_of = [&](long long part) {
      for (size_t i = 0; i < sizes.size(); ++i)
        if (sizes[i] == part) return eta[i];
      throw std::logic_error("bv_packet_member: unknown part");
    };
    // Factoring through the metaplectic two-group: adjacent generators at
    // even positions multiply to 1, a trailing lone generator dies.
    size_t t = o.partition.size();
    for (size_t i = 1; i < t; i += 2) {
      int prod = sign_of(o.partition[i]);
      if (i + 1 < t) prod *= sign_of(o.partition[i + 1]);
      if (prod != 1) return make_zero(weyl_kind(gc));
    }
    // Unequal-pair signs in F order (rightmost pair first).
    std::vector<const SymbolPair*> unequal;
    {
      BVData d = bv_levi_data(o, gc);
      long long k = static_cast<long long>(d.pairs.pairs.size());
      for (long long j = 0; j < k; ++j) {
        const SymbolPair& pr = d.pairs.pairs[k - 1 - j];
        if (!pr.equal) unequal.push_back(&pr);
      }
    }
    for (const SymbolPair* pr : unequal)
      eps.push_back(sign_of(pr->source_low) * sign_of(pr->source_high));
    if (pkt.mp_coordinate) eps.push_back(sign_of(o.partition.back()));
  } else {
    GroupPresentation a = component_group(o, gc);
    size_t t = a.generator_sizes.size();
    if (eta.size() != t)
      throw std::invalid_argument("bv_packet_member: character length");
    std::vector<int> bits(t);
    for (size_t i = 0; i < t; ++i) {
      if (eta[i] != 1 && eta[i] != -1)
        throw std::invalid_argument("bv_packet_member: signs must be +-1");
      bits[i] = eta[i] == -1 ? 1 : 0;
    }
    for (const auto& rel : a.relations) {
      int s = 0;
      for (size_t i = 0; i < t; ++i) s ^= bits[i] & rel[i];
      if (s)
        throw std::invalid_argument(
            "bv_packet_member: eta is not a character of A(U)");
    }
    AbarQuotient q = abar_quotient_map(o, gc);
    int m = static_cast<int>(q.matrix.size());
    int mm = static_cast<int>(a.membership.size());
    F2Solve sys;
    for (size_t g = 0; g < t; ++g) {
      std::vector<int> row(m + mm, 0);
      for (int j = 0; j < m; ++j) row[j] = q.matrix[j][g];
      for (int r = 0; r < mm; ++r) row[m + r] = a.membership[r][g];
      sys.rows.push_back(row);
      sys.rhs.push_back(bits[g]);
    }
    std::vector<int> solution;
    if (!sys.solve(m, solution)) return make_zero(weyl_kind(gc));
    // Quotient rows run leftmost pair first; eps runs F^1 (rightmost) first.
    for (int j = m - 1; j >= 0; --j) eps.push_back(solution[j] ? -1 : 1);
  }

  for (const PacketMember& mem : pkt.members)
    if (mem.eps == eps) return mem.param;
  throw std::logic_error("bv_packet_member: missing member");
}

ArthurPacket arthur_packet(const ArthurParameter& psi) {
  require_valid(psi, true);
  ArthurPacket out;
  out.psi = psi;
  GroupCase gc = psi.group.group_case;
  Decomposition dec = decompose(psi);
  NilpotentOrbit u = u_bp_orbit(psi);

  if (!is_even(u) ||
      (gc == GroupCase::Mpn ? !is_antispecial(u) : !is_special(u, gc)))
    throw std::invalid_argument(
        "arthur_packet: unsupported parameter, unipotent part " +
        orbit_str(u) + " is not special and even");

  LanglandsParam gl = gl_param(dec.rho());
  WeylKind kind = weyl_kind(gc);

  std::vector<std::vector<int>> etas;
  if (gc == GroupCase::Mpn) {
    std::vector<long long> sizes;
    for (long long p : u.partition)
      if (sizes.empty() || sizes.back() != p) sizes.push_back(p);
    size_t t = sizes.size();
    if (t > 20) throw std::length_error("arthur_packet: too many generators");
    for (uint64_t c = 0; c < (1ull << t); ++c) {
      std::vector<int> eta(t);
      for (size_t i = 0; i < t; ++i)
        eta[i] = (c >> (t - 1 - i)) & 1 ? -1 : 1;
      etas.push_back(eta);
    }
  } else {
    etas = component_group(u, gc).characters();
  }

  for (const std::vector<int>& eta : etas) {
    LanglandsParam bp = bv_packet_member(u, gc, eta);
    if (bp.zero) {
      out.members.push_back({eta, make_zero(kind)});
      continue;
    }
    std::vector<Gaussian> lam = gl.lambda, mu = gl.mu;
    append(lam, bp.lambda);
    append(mu, bp.mu);
    out.members.push_back({eta, normal_form(make_param(kind, lam, mu))});
  }
  return out;
}

std::string param_str(const LanglandsParam& p) {
  if (p.zero) return "0";
  auto side = [](const std::vector<Gaussian>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += v[i].str();
    }
    return s + ")";
  };
  std::string s = "(" + side(p.lambda) + "," + side(p.mu) + ")";
  if (p.kind == WeylKind::D && p.d_flip_parity) s += "*";
  return s;
}

}  // namespace bv
