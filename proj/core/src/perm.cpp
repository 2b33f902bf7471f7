#include "spincover/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "spincover/errors.hpp"

namespace spincover {

Perm::Perm(int n) {
  if (n < 0 || n > 255) throw IndexOutOfRange("Perm: degree out of range");
  img_.resize(n);
  std::iota(img_.begin(), img_.end(), 0);
}

Perm Perm::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw IndexOutOfRange("Perm::transposition: bad points");
  Perm p(n);
  std::swap(p.img_[i - 1], p.img_[j - 1]);
  return p;
}

Perm Perm::from_images(const std::vector<int>& images) {
  Perm p(static_cast<int>(images.size()));
  std::vector<bool> seen(images.size(), false);
  for (size_t i = 0; i < images.size(); ++i) {
    int v = images[i];
    if (v < 1 || v > static_cast<int>(images.size()) || seen[v - 1])
      throw IndexOutOfRange("Perm::from_images: not a permutation");
    seen[v - 1] = true;
    p.img_[i] = static_cast<uint8_t>(v - 1);
  }
  return p;
}

Perm Perm::cycle(int n, const std::vector<int>& one_cycle) {
  Perm p(n);
  for (size_t i = 0; i < one_cycle.size(); ++i) {
    int from = one_cycle[i];
    int to = one_cycle[(i + 1) % one_cycle.size()];
    if (from < 1 || from > n) throw IndexOutOfRange("Perm::cycle: bad point");
    p.img_[from - 1] = static_cast<uint8_t>(to - 1);
  }
  // validate
  std::vector<bool> seen(n, false);
  for (int v : p.img_) {
    if (seen[v]) throw IndexOutOfRange("Perm::cycle: repeated point");
    seen[v] = true;
  }
  return p;
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Perm p(n);
  for (const auto& c : cycles) p = Perm::cycle(n, c) * p;
  return p;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree())
    throw DegreeMismatch("Perm::operator*: degree mismatch");
  Perm out;
  out.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) out.img_[i] = img_[rhs.img_[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i)
    out.img_[img_[i]] = static_cast<uint8_t>(i);
  return out;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

bool Perm::is_even() const {
  return (degree() - cycle_type().num_parts()) % 2 == 0;
}

int Perm::order() const {
  int64_t ord = 1;
  for (int part : cycle_type().parts) ord = std::lcm(ord, (int64_t)part);
  return static_cast<int>(ord);
}

Partition Perm::cycle_type() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<int> parts;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

std::string Perm::cycle_string() const {
  std::vector<bool> seen(img_.size(), false);
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    os << '(';
    bool first = true;
    for (size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (!first) os << ',';
      os << j + 1;
      first = false;
    }
    os << ')';
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

size_t Perm::hash() const {
  size_t h = 1469598103934665603ull;
  for (uint8_t v : img_) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace spincover
