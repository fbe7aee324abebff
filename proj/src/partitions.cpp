#include "bv/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bv {

void check_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && p[i] > p[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

long long partition_sum(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0LL);
}

Partition transpose(const Partition& p) {
  check_partition(p);
  if (p.empty()) return {};
  Partition t(static_cast<size_t>(p[0]), 0);
  for (long long part : p)
    for (long long j = 0; j < part; ++j) t[static_cast<size_t>(j)] += 1;
  return t;
}

bool parity_class_member(const Partition& p, ParityClass c) {
  check_partition(p);
  // Parts with the constrained parity must occur evenly.
  long long bad_parity = (c == ParityClass::P1) ? 0 : 1;
  for (size_t i = 0; i < p.size();) {
    size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (p[i] % 2 == bad_parity && (j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

namespace {

bool collapse_bad_size(long long r, CollapseFamily f) {
  return (f == CollapseFamily::C) ? (r % 2 == 1) : (r % 2 == 0);
}

}  // namespace

Partition collapse(const Partition& p, CollapseFamily f) {
  check_partition(p);
  long long sum = partition_sum(p);
  if (f == CollapseFamily::B && sum % 2 == 0)
    throw std::invalid_argument("B collapse requires odd sum");
  if (f != CollapseFamily::B && sum % 2 != 0)
    throw std::invalid_argument("collapse requires even sum");

  Partition q = p;
  for (;;) {
    // Largest part size of constrained parity with odd multiplicity.
    long long r = -1;
    for (size_t i = 0; i < q.size();) {
      size_t j = i;
      while (j < q.size() && q[j] == q[i]) ++j;
      if (collapse_bad_size(q[i], f) && (j - i) % 2 != 0) {
        r = q[i];
        break;
      }
      i = j;
    }
    if (r < 0) break;
    if (r == 1) throw std::logic_error("collapse reached an isolated unit part");

    // Move a box from the last part of size r to the largest part below r-1.
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
  return q;
}

bool dominates(const Partition& a, const Partition& b) {
  check_partition(a);
  check_partition(b);
  if (partition_sum(a) != partition_sum(b))
    throw std::invalid_argument("dominance requires equal sums");
  long long pa = 0, pb = 0;
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    pa += i < a.size() ? a[i] : 0;
    pb += i < b.size() ? b[i] : 0;
    if (pa < pb) return false;
  }
  return true;
}

Partition add_to_prefix(const Partition& p, long long count, long long amount) {
  check_partition(p);
  if (count < 0 || amount < 0)
    throw std::invalid_argument("add_to_prefix takes nonnegative arguments");
  Partition q = p;
  if (static_cast<long long>(q.size()) < count)
    q.resize(static_cast<size_t>(count), 0);
  for (long long i = 0; i < count; ++i) q[static_cast<size_t>(i)] += amount;
  while (!q.empty() && q.back() == 0) q.pop_back();
  check_partition(q);
  return q;
}

namespace {

void enumerate_rec(long long n, long long max_part, Partition& cur,
                   std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (long long part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    enumerate_rec(n - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(long long n) {
  if (n < 0) throw std::invalid_argument("partitions of a negative integer");
  std::vector<Partition> out;
  Partition cur;
  enumerate_rec(n, n == 0 ? 1 : n, cur, out);
  return out;
}

std::string partition_str(const Partition& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

Partition parse_partition(const std::string& s) {
  Partition p;
  if (s.empty()) return p;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                               : comma - pos);
    size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition entry: " + tok);
    }
    if (used != tok.size()) throw std::invalid_argument("bad partition entry: " + tok);
    p.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  check_partition(p);
  return p;
}

}  // namespace bv
