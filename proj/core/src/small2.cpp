#include "spincover/small2.hpp"

#include "spincover/errors.hpp"

namespace spincover {

namespace {

// Group of order 2N on elements a^i b^j (0 <= i < N, j in {0,1}) with
// b a b^{-1} = a^t and b^2 = a^s:
//   (i1,j1)(i2,j2) = (i1 + i2 * t^{j1} + s * [j1 = j2 = 1], j1 + j2 mod 2).
TableGroup two_generator_2group(int N, int t, int s) {
  auto normalize = [&](int v) { return ((v % N) + N) % N; };
  TableGroup g;
  g.n = 2 * N;
  g.table.resize(static_cast<size_t>(g.n) * g.n);
  g.inv.resize(g.n);
  auto idx = [&](int i, int j) { return j * N + i; };
  for (int i1 = 0; i1 < N; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < N; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = normalize(i1 + (j1 ? t * i2 : i2) + (j1 && j2 ? s : 0));
          int j = (j1 + j2) % 2;
          g.table[static_cast<size_t>(idx(i1, j1)) * g.n + idx(i2, j2)] =
              idx(i, j);
        }
  g.id = idx(0, 0);
  for (int e = 0; e < g.n; ++e)
    for (int f = 0; f < g.n; ++f)
      if (g.mul(e, f) == g.id) g.inv[e] = f;
  return g;
}

}  // namespace

TableGroup reference_cyclic(int m) {
  TableGroup g;
  g.n = m;
  g.table.resize(static_cast<size_t>(m) * m);
  g.inv.resize(m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b)
      g.table[static_cast<size_t>(a) * m + b] = (a + b) % m;
    g.inv[a] = (m - a) % m;
  }
  g.id = 0;
  return g;
}

TableGroup reference_dihedral(int m) {
  if (m < 8 || m % 2) throw IndexOutOfRange("reference_dihedral");
  return two_generator_2group(m / 2, -1, 0);
}

TableGroup reference_quaternion(int m) {
  if (m < 8 || m % 4) throw IndexOutOfRange("reference_quaternion");
  return two_generator_2group(m / 2, -1, m / 4);
}

TableGroup reference_semidihedral(int m) {
  if (m < 16 || m % 2) throw IndexOutOfRange("reference_semidihedral");
  return two_generator_2group(m / 2, m / 4 - 1, 0);
}

const std::vector<ReferenceGroup>& reference_fingerprints() {
  static const std::vector<ReferenceGroup> refs = [] {
    std::vector<ReferenceGroup> v;
    for (int m : {8, 16, 32}) {
      v.push_back({"C" + std::to_string(m), fingerprint(reference_cyclic(m))});
      v.push_back({"D" + std::to_string(m), fingerprint(reference_dihedral(m))});
      v.push_back({"Q" + std::to_string(m), fingerprint(reference_quaternion(m))});
      if (m >= 16)
        v.push_back(
            {"SD" + std::to_string(m), fingerprint(reference_semidihedral(m))});
    }
    return v;
  }();
  return refs;
}

std::optional<std::string> identify_small_2group(const TableGroup& g) {
  if (g.n < 8 || g.n > 32) return std::nullopt;
  GroupFingerprint fp = fingerprint(g);
  for (const auto& ref : reference_fingerprints()) {
    if (!(ref.fp == fp)) continue;
    TableGroup model;
    if (ref.label[0] == 'C')
      model = reference_cyclic(g.n);
    else if (ref.label[0] == 'D')
      model = reference_dihedral(g.n);
    else if (ref.label[0] == 'Q')
      model = reference_quaternion(g.n);
    else
      model = reference_semidihedral(g.n);
    if (find_isomorphism(g, model)) return ref.label;
  }
  return std::nullopt;
}

TableGroup heisenberg_3() {
  // elements (a,b,c) in F_3^3, (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b')
  TableGroup g;
  g.n = 27;
  g.table.resize(27 * 27);
  g.inv.resize(27);
  auto idx = [](int a, int b, int c) { return a * 9 + b * 3 + c; };
  for (int a1 = 0; a1 < 3; ++a1)
    for (int b1 = 0; b1 < 3; ++b1)
      for (int c1 = 0; c1 < 3; ++c1)
        for (int a2 = 0; a2 < 3; ++a2)
          for (int b2 = 0; b2 < 3; ++b2)
            for (int c2 = 0; c2 < 3; ++c2)
              g.table[static_cast<size_t>(idx(a1, b1, c1)) * 27 +
                      idx(a2, b2, c2)] =
                  idx((a1 + a2) % 3, (b1 + b2) % 3,
                      (c1 + c2 + a1 * b2) % 3);
  g.id = 0;
  for (int e = 0; e < 27; ++e)
    for (int f = 0; f < 27; ++f)
      if (g.mul(e, f) == g.id) g.inv[e] = f;
  return g;
}

}  // namespace spincover
