#pragma once

#include <cstdint>
#include <string>

namespace spincover {

enum class Family {
  A,          // alternating group A_n (quotient utility)
  S,          // symmetric group S_n (quotient utility)
  TwoA,       // 2.A_n
  TwoSplus,   // 2+.S_n
  TwoSminus,  // 2-.S_n
  ThreeA6,
  ThreeA7,
  SixA6,
  SixA7,
};

struct GroupSpec {
  Family family = Family::TwoA;
  int degree = 0;  // n; fixed to 6 or 7 for the exceptional covers

  bool operator==(const GroupSpec&) const = default;
  auto operator<=>(const GroupSpec&) const = default;
};

GroupSpec make_spec(Family f, int degree);

// CLI names: A, S, 2A, 2S+, 2S-, 3A6, 3A7, 6A6, 6A7.
Family parse_family(const std::string& name);
std::string family_name(Family f);

// Display name like "2.A8", "2+.S8", "3.A6".
std::string spec_name(const GroupSpec& s);

bool is_double_cover(Family f);
bool is_exceptional_cover(Family f);  // 3.A6, 3.A7, 6.A6, 6.A7

// alpha parameter used for element-level work: 0 for 2+.Sn and 2.An
// (either alpha gives the same 2.An up to isomorphism), 1 for 2-.Sn.
int cover_alpha(Family f);

uint64_t group_order(const GroupSpec& s);

uint64_t factorial(int n);

}  // namespace spincover
