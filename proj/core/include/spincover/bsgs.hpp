#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spincover/perm.hpp"

namespace spincover {

// Stabilizer chain via the deterministic Schreier-Sims algorithm.
// For groups too large to enumerate (degree <= 64).
struct StabilizerChain {
  std::vector<int> base;               // 1-based base points
  std::vector<size_t> orbit_lengths;   // per base point

  unsigned __int128 order128() const;
  uint64_t order() const;  // throws on overflow
  std::string order_string() const;
};

StabilizerChain build_stabilizer_chain(const std::vector<Perm>& generators);

uint64_t order_via_bsgs(const std::vector<Perm>& generators);

}  // namespace spincover
