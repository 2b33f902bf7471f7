#include "spincover/partition.hpp"

#include <numeric>
#include <sstream>

#include "spincover/errors.hpp"

namespace spincover {

int Partition::n() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

bool Partition::valid() const {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  os << ')';
  return os.str();
}

namespace {

void gen_partitions(int remaining, int max_part, bool distinct,
                    std::vector<int>& acc, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    acc.push_back(part);
    gen_partitions(remaining - part, distinct ? part - 1 : part, distinct, acc,
                   out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw IndexOutOfRange("partitions_of: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> acc;
  gen_partitions(n, n, false, acc, out);
  // generated in reverse lexicographic order of part sequences; flip
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> strict_partitions(int n) {
  if (n < 1) throw IndexOutOfRange("strict_partitions: n must be >= 1");
  std::vector<Partition> out;
  std::vector<int> acc;
  gen_partitions(n, n, true, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_strict(const Partition& p) {
  for (size_t i = 1; i < p.parts.size(); ++i)
    if (p.parts[i] >= p.parts[i - 1]) return false;
  return true;
}

Parity parity(const Partition& lambda) {
  int even_parts = 0;
  for (int part : lambda.parts)
    if (part % 2 == 0) ++even_parts;
  return even_parts % 2 == 0 ? Parity::Even : Parity::Odd;
}

bool has_only_odd_parts(const Partition& lambda) {
  for (int part : lambda.parts)
    if (part % 2 == 0) return false;
  return true;
}

bool is_p_singular(const Partition& mu, int p) {
  for (int part : mu.parts)
    if (part % p == 0) return true;
  return false;
}

int sign_of_type(const Partition& mu) {
  return (mu.n() - mu.num_parts()) % 2 == 0 ? +1 : -1;
}

}  // namespace spincover
