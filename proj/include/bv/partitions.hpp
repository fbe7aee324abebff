#pragma once

#include <string>
#include <vector>

namespace bv {

// Partition: weakly decreasing positive parts. Zero parts are never stored;
// the empty vector is the partition of 0.
using Partition = std::vector<long long>;

// P1: every even part has even multiplicity (orthogonal nilpotent classes).
// Pm1: every odd part has even multiplicity (symplectic nilpotent classes).
enum class ParityClass { P1, Pm1 };

// Collapse target: B restores P1 with odd sum, C restores Pm1, D restores P1
// with even sum.
enum class CollapseFamily { B, C, D };

// Throws std::invalid_argument unless p is weakly decreasing with positive
// parts.
void check_partition(const Partition& p);

long long partition_sum(const Partition& p);

Partition transpose(const Partition& p);

bool parity_class_member(const Partition& p, ParityClass c);

// Largest partition in the parity class dominated by p, with the same sum.
// Pre: sum parity matches the family (odd for B, even for C and D).
Partition collapse(const Partition& p, CollapseFamily f);

// Prefix-sum dominance. Pre: equal sums.
bool dominates(const Partition& a, const Partition& b);

// Adds `amount` to each of the first `count` parts, padding with zeros first
// when p has fewer than `count` parts. add_to_prefix([3], 3, 2) = [5,2,2].
Partition add_to_prefix(const Partition& p, long long count, long long amount);

// All partitions of n, each weakly decreasing, in a fixed deterministic order.
std::vector<Partition> partitions_of(long long n);

std::string partition_str(const Partition& p);
Partition parse_partition(const std::string& s);

}  // namespace bv
