#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spincover {

// Finitely generated abelian group in invariant-factor normal form:
// torsion factors in divisibility order (each divides the next) plus a
// free rank. Canonical, so equality is structural isomorphism.
struct AbelianGroup {
  std::vector<uint64_t> factors;  // ascending, each divides the next, >= 2
  int free_rank = 0;

  // Canonicalizes an arbitrary factor list (Smith-style recombination by
  // prime powers), e.g. {3,8,2} -> {2,24}.
  static AbelianGroup from_factors(std::vector<uint64_t> raw,
                                   int free_rank = 0);
  static AbelianGroup trivial() { return AbelianGroup{}; }
  static AbelianGroup free_of_rank(int r) { return AbelianGroup{{}, r}; }

  // Built from prime -> exponent multiset (each exponent e contributes a
  // cyclic factor p^e).
  static AbelianGroup from_prime_powers(
      const std::vector<std::pair<uint64_t, std::vector<int>>>& pp,
      int free_rank = 0);

  bool is_trivial() const { return factors.empty() && free_rank == 0; }
  uint64_t torsion_order() const;

  // Drops the p-part of every factor.
  AbelianGroup p_prime_part(uint64_t p) const;

  AbelianGroup direct_sum(const AbelianGroup& other) const;

  bool operator==(const AbelianGroup&) const = default;

  std::string to_string() const;  // "Z/2+Z/24+Z^2", "0" for trivial
};

}  // namespace spincover
