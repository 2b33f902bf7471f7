#pragma once

#include <string>
#include <vector>

namespace spincover {

// Weakly decreasing positive parts. Doubles as a cycle type, with fixed
// points written explicitly as parts equal to 1 so the sum is always n.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p) : parts(p) {}
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {}

  int n() const;
  int num_parts() const { return static_cast<int>(parts.size()); }
  bool valid() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

  std::string to_string() const;  // "(5,2,2,1)"
};

// All partitions of n, lexicographically by part sequence.
std::vector<Partition> partitions_of(int n);

// D(n): partitions of n into distinct parts, lexicographic.
std::vector<Partition> strict_partitions(int n);

bool is_strict(const Partition& p);

enum class Parity { Even, Odd };

// Parity of the count of even parts.
Parity parity(const Partition& lambda);

// P0(n) membership: every part odd.
bool has_only_odd_parts(const Partition& lambda);

// p divides some part (equivalently p | order of a permutation of this type).
bool is_p_singular(const Partition& mu, int p);

// (-1)^(n - number of parts); +1 exactly for classes meeting A_n.
int sign_of_type(const Partition& mu);

}  // namespace spincover
