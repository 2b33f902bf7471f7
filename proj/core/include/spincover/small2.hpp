#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spincover/group.hpp"

namespace spincover {

// Reference 2-groups of orders 8..32 built from explicit presentations:
// cyclic C_m, dihedral D_m, generalised quaternion Q_m, semidihedral SD_m
// (m = group order). Used to label Sylow subgroups without an external
// small-group database.
TableGroup reference_cyclic(int m);
TableGroup reference_dihedral(int m);      // m in {8,16,32}
TableGroup reference_quaternion(int m);    // m in {8,16,32}
TableGroup reference_semidihedral(int m);  // m in {16,32}

struct ReferenceGroup {
  std::string label;  // "Q16", "SD16", ...
  GroupFingerprint fp;
};

const std::vector<ReferenceGroup>& reference_fingerprints();

// Matches by fingerprint, then confirms with an explicit isomorphism.
// Returns nullopt (Unrecognized) for anything else, including all order-32
// groups outside the reference list.
std::optional<std::string> identify_small_2group(const TableGroup& g);

// Extraspecial group of order 27 and exponent 3 (the Sylow 3-subgroup model
// for the exceptional covers): triples over F_3 with a Heisenberg product.
TableGroup heisenberg_3();

}  // namespace spincover
