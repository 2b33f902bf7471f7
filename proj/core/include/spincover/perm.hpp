#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "spincover/partition.hpp"

namespace spincover {

// Permutation of {1..n}, array backed. Composition is (a*b)(x) = a(b(x)),
// i.e. b acts first.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n);  // identity

  static Perm identity(int n) { return Perm(n); }
  static Perm transposition(int n, int i, int j);          // 1-based points
  static Perm from_images(const std::vector<int>& images);  // 1-based images
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  static Perm cycle(int n, const std::vector<int>& one_cycle);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int i) const { return img_[i - 1] + 1; }  // 1-based in and out

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;

  bool is_identity() const;
  bool is_even() const;
  int order() const;
  Partition cycle_type() const;
  std::string cycle_string() const;  // "(1,2)(3,4)" or "()"

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

  const std::vector<uint8_t>& images0() const { return img_; }

  size_t hash() const;

 private:
  std::vector<uint8_t> img_;  // img_[i] = image of point i, 0-based
};

struct PermHash {
  size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace spincover
