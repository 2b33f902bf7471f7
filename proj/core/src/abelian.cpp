#include "spincover/abelian.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "spincover/errors.hpp"

namespace spincover {

namespace {

std::map<uint64_t, std::vector<int>> prime_power_split(
    const std::vector<uint64_t>& raw) {
  std::map<uint64_t, std::vector<int>> exps;
  for (uint64_t f : raw) {
    if (f == 0) throw IndexOutOfRange("AbelianGroup: zero factor");
    if (f == 1) continue;
    uint64_t m = f;
    for (uint64_t q = 2; q * q <= m; ++q) {
      if (m % q) continue;
      int e = 0;
      while (m % q == 0) {
        m /= q;
        ++e;
      }
      exps[q].push_back(e);
    }
    if (m > 1) exps[m].push_back(1);
  }
  return exps;
}

AbelianGroup assemble(std::map<uint64_t, std::vector<int>> exps,
                      int free_rank) {
  size_t slots = 0;
  for (auto& [q, es] : exps) {
    std::sort(es.rbegin(), es.rend());
    slots = std::max(slots, es.size());
  }
  std::vector<uint64_t> factors(slots, 1);
  for (auto& [q, es] : exps)
    for (size_t i = 0; i < es.size(); ++i) {
      uint64_t pw = 1;
      for (int k = 0; k < es[i]; ++k) pw *= q;
      factors[i] *= pw;  // slot 0 gets the largest factor
    }
  std::reverse(factors.begin(), factors.end());
  AbelianGroup g;
  g.factors = std::move(factors);
  g.free_rank = free_rank;
  return g;
}

}  // namespace

AbelianGroup AbelianGroup::from_factors(std::vector<uint64_t> raw,
                                        int free_rank) {
  return assemble(prime_power_split(raw), free_rank);
}

AbelianGroup AbelianGroup::from_prime_powers(
    const std::vector<std::pair<uint64_t, std::vector<int>>>& pp,
    int free_rank) {
  std::map<uint64_t, std::vector<int>> exps;
  for (const auto& [q, es] : pp)
    for (int e : es)
      if (e > 0) exps[q].push_back(e);
  return assemble(std::move(exps), free_rank);
}

uint64_t AbelianGroup::torsion_order() const {
  uint64_t o = 1;
  for (uint64_t f : factors) o *= f;
  return o;
}

AbelianGroup AbelianGroup::p_prime_part(uint64_t p) const {
  std::vector<uint64_t> raw;
  for (uint64_t f : factors) {
    while (f % p == 0) f /= p;
    if (f > 1) raw.push_back(f);
  }
  return from_factors(std::move(raw), free_rank);
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& other) const {
  std::vector<uint64_t> raw = factors;
  raw.insert(raw.end(), other.factors.begin(), other.factors.end());
  return from_factors(std::move(raw), free_rank + other.free_rank);
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (uint64_t f : factors) {
    if (!first) os << "+";
    os << "Z/" << f;
    first = false;
  }
  if (free_rank == 1) {
    if (!first) os << "+";
    os << "Z";
  } else if (free_rank > 1) {
    if (!first) os << "+";
    os << "Z^" << free_rank;
  }
  return os.str();
}

}  // namespace spincover
