#include "spincover/families.hpp"

#include "spincover/errors.hpp"

namespace spincover {

GroupSpec make_spec(Family f, int degree) {
  GroupSpec s{f, degree};
  switch (f) {
    case Family::ThreeA6:
    case Family::SixA6:
      s.degree = 6;
      break;
    case Family::ThreeA7:
    case Family::SixA7:
      s.degree = 7;
      break;
    default:
      if (degree < 4 || degree > 20)
        throw OutOfClassification("make_spec: degree out of supported range");
      break;
  }
  if (f == Family::ThreeA6 || f == Family::SixA6) {
    if (degree != 0 && degree != 6)
      throw OutOfClassification("make_spec: this family has degree 6");
  }
  if (f == Family::ThreeA7 || f == Family::SixA7) {
    if (degree != 0 && degree != 7)
      throw OutOfClassification("make_spec: this family has degree 7");
  }
  return s;
}

Family parse_family(const std::string& name) {
  if (name == "A") return Family::A;
  if (name == "S") return Family::S;
  if (name == "2A") return Family::TwoA;
  if (name == "2S+") return Family::TwoSplus;
  if (name == "2S-") return Family::TwoSminus;
  if (name == "3A6") return Family::ThreeA6;
  if (name == "3A7") return Family::ThreeA7;
  if (name == "6A6") return Family::SixA6;
  if (name == "6A7") return Family::SixA7;
  throw ParseError("unknown group family: " + name);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::S: return "S";
    case Family::TwoA: return "2A";
    case Family::TwoSplus: return "2S+";
    case Family::TwoSminus: return "2S-";
    case Family::ThreeA6: return "3A6";
    case Family::ThreeA7: return "3A7";
    case Family::SixA6: return "6A6";
    case Family::SixA7: return "6A7";
  }
  return "?";
}

std::string spec_name(const GroupSpec& s) {
  switch (s.family) {
    case Family::A: return "A" + std::to_string(s.degree);
    case Family::S: return "S" + std::to_string(s.degree);
    case Family::TwoA: return "2.A" + std::to_string(s.degree);
    case Family::TwoSplus: return "2+.S" + std::to_string(s.degree);
    case Family::TwoSminus: return "2-.S" + std::to_string(s.degree);
    case Family::ThreeA6: return "3.A6";
    case Family::ThreeA7: return "3.A7";
    case Family::SixA6: return "6.A6";
    case Family::SixA7: return "6.A7";
  }
  return "?";
}

bool is_double_cover(Family f) {
  return f == Family::TwoA || f == Family::TwoSplus || f == Family::TwoSminus;
}

bool is_exceptional_cover(Family f) {
  return f == Family::ThreeA6 || f == Family::ThreeA7 || f == Family::SixA6 ||
         f == Family::SixA7;
}

int cover_alpha(Family f) {
  if (f == Family::TwoSminus) return 1;
  if (f == Family::TwoSplus || f == Family::TwoA) return 0;
  throw UnsupportedFamily("cover_alpha: not a double cover");
}

uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw IndexOutOfRange("factorial: out of range");
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

uint64_t group_order(const GroupSpec& s) {
  switch (s.family) {
    case Family::S: return factorial(s.degree);
    case Family::A: return factorial(s.degree) / 2;
    case Family::TwoSplus:
    case Family::TwoSminus: return 2 * factorial(s.degree);
    case Family::TwoA: return factorial(s.degree);
    case Family::ThreeA6: return 3 * (factorial(6) / 2);
    case Family::ThreeA7: return 3 * (factorial(7) / 2);
    case Family::SixA6: return 6 * (factorial(6) / 2);
    case Family::SixA7: return 6 * (factorial(7) / 2);
  }
  throw UnsupportedFamily("group_order");
}

}  // namespace spincover
