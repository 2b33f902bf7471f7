#include "spincover/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace spincover {

int TableGroup::element_order(int a) const {
  int cur = a;
  for (int k = 1; k <= n; ++k) {
    if (cur == id) return k;
    cur = mul(cur, a);
  }
  throw Error("TableGroup::element_order: not a group table");
}

std::vector<int> TableGroup::element_orders() const {
  std::vector<int> o(n);
  for (int a = 0; a < n; ++a) o[a] = element_order(a);
  return o;
}

std::vector<int> TableGroup::subgroup_closure(std::vector<int> gens) const {
  std::vector<bool> in(n, false);
  in[id] = true;
  std::vector<int> members{id};
  std::deque<int> frontier{id};
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop_front();
    for (int g : gens) {
      int nx = mul(cur, g);
      if (!in[nx]) {
        in[nx] = true;
        members.push_back(nx);
        frontier.push_back(nx);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<int> TableGroup::center() const {
  std::vector<int> z;
  for (int a = 0; a < n; ++a) {
    bool central = true;
    for (int b = 0; b < n && central; ++b)
      if (mul(a, b) != mul(b, a)) central = false;
    if (central) z.push_back(a);
  }
  return z;
}

std::vector<int> TableGroup::derived() const {
  std::vector<int> comms;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      comms.push_back(mul(mul(inv[a], inv[b]), mul(a, b)));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return subgroup_closure(comms);
}

uint64_t TableGroup::exponent() const {
  uint64_t e = 1;
  for (int o : element_orders()) e = std::lcm(e, (uint64_t)o);
  return e;
}

TableGroup quotient_table(const TableGroup& g,
                          const std::vector<int>& normal_subgroup) {
  // canonical coset representative: minimum member
  std::vector<int> rep(g.n, -1);
  std::vector<int> reps;
  for (int e = 0; e < g.n; ++e) {
    if (rep[e] >= 0) continue;
    int mn = e;
    std::vector<int> coset;
    for (int x : normal_subgroup) {
      int y = g.mul(e, x);
      coset.push_back(y);
      mn = std::min(mn, y);
    }
    for (int y : coset) rep[y] = mn;
    reps.push_back(mn);
  }
  std::sort(reps.begin(), reps.end());
  std::vector<int> idx(g.n, -1);
  for (size_t i = 0; i < reps.size(); ++i) idx[reps[i]] = static_cast<int>(i);
  TableGroup q;
  q.n = static_cast<int>(reps.size());
  q.table.resize(static_cast<size_t>(q.n) * q.n);
  q.inv.resize(q.n);
  q.id = idx[rep[g.id]];
  for (int a = 0; a < q.n; ++a) {
    for (int b = 0; b < q.n; ++b)
      q.table[static_cast<size_t>(a) * q.n + b] =
          idx[rep[g.mul(reps[a], reps[b])]];
    q.inv[a] = idx[rep[g.inv[reps[a]]]];
  }
  return q;
}

AbelianGroup abelian_invariants(const TableGroup& g) {
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      if (g.mul(a, b) != g.mul(b, a))
        throw Error("abelian_invariants: group is not abelian");
  auto orders = g.element_orders();
  std::vector<std::pair<uint64_t, std::vector<int>>> pp;
  uint64_t m = g.n;
  for (uint64_t q = 2; q <= m; ++q) {
    if (m % q) continue;
    uint64_t qpart = 1;
    while (m % q == 0) {
      m /= q;
      qpart *= q;
    }
    std::vector<int> exps;
    uint64_t prev = 1;
    for (uint64_t qk = q;; qk *= q) {
      uint64_t cnt = 0;
      for (uint64_t o : orders) {
        uint64_t oq = 1;
        while (o % q == 0) {
          o /= q;
          oq *= q;
        }
        if (oq <= qk) ++cnt;
      }
      uint64_t nk = cnt * qpart / static_cast<uint64_t>(g.n);
      uint64_t ratio = nk / prev;
      int cyclic_count = 0;
      while (ratio > 1) {
        ratio /= q;
        ++cyclic_count;
      }
      while (static_cast<int>(exps.size()) < cyclic_count) exps.push_back(0);
      for (int i = 0; i < cyclic_count; ++i) ++exps[i];
      prev = nk;
      if (nk == qpart) break;
    }
    pp.emplace_back(q, exps);
  }
  return AbelianGroup::from_prime_powers(pp);
}

GroupFingerprint fingerprint(const TableGroup& g) {
  GroupFingerprint fp;
  fp.order = g.n;
  std::map<int, int> counts;
  for (int o : g.element_orders()) ++counts[o];
  fp.order_multiset.assign(counts.begin(), counts.end());
  fp.center_order = g.center().size();
  auto d = g.derived();
  fp.derived_order = d.size();
  fp.exponent = g.exponent();
  fp.abelianization = abelian_invariants(quotient_table(g, d));
  return fp;
}

std::string GroupFingerprint::to_string() const {
  std::ostringstream os;
  os << "order=" << order << " center=" << center_order
     << " derived=" << derived_order << " exp=" << exponent << " orders={";
  bool first = true;
  for (auto [o, c] : order_multiset) {
    if (!first) os << ",";
    os << o << ":" << c;
    first = false;
  }
  os << "} ab=" << abelianization.to_string();
  return os.str();
}

namespace {

// Greedy deterministic generating sequence (each element enlarges closure).
std::vector<int> generating_sequence(const TableGroup& g) {
  std::vector<int> gens;
  std::vector<int> cur{g.id};
  for (int e = 0; e < g.n && static_cast<int>(cur.size()) < g.n; ++e) {
    if (std::binary_search(cur.begin(), cur.end(), e)) continue;
    gens.push_back(e);
    cur = g.subgroup_closure(gens);
  }
  return gens;
}

// BFS words for every element of g in terms of the generating sequence:
// word[e] = (previous element, generator index), word[id] = (-1,-1).
std::vector<std::pair<int, int>> bfs_words(const TableGroup& g,
                                           const std::vector<int>& gens) {
  std::vector<std::pair<int, int>> word(g.n, {-2, -2});
  word[g.id] = {-1, -1};
  std::deque<int> frontier{g.id};
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop_front();
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int nx = g.mul(cur, gens[gi]);
      if (word[nx].first == -2) {
        word[nx] = {cur, static_cast<int>(gi)};
        frontier.push_back(nx);
      }
    }
  }
  return word;
}

bool check_hom_images(const TableGroup& a, const TableGroup& b,
                      const std::vector<int>& gens,
                      const std::vector<std::pair<int, int>>& words,
                      const std::vector<int>& images, std::vector<int>& phi) {
  phi.assign(a.n, -1);
  phi[a.id] = b.id;
  // evaluate phi on all of a via BFS words
  std::deque<int> order{a.id};
  std::vector<bool> done(a.n, false);
  done[a.id] = true;
  // words form a tree rooted at id; process in BFS order of discovery
  std::vector<int> by_depth;
  {
    std::deque<int> q{a.id};
    std::vector<bool> seen(a.n, false);
    seen[a.id] = true;
    while (!q.empty()) {
      int cur = q.front();
      q.pop_front();
      by_depth.push_back(cur);
      for (int e = 0; e < a.n; ++e)
        if (!seen[e] && words[e].first == cur) {
          seen[e] = true;
          q.push_back(e);
        }
    }
  }
  std::vector<bool> used(b.n, false);
  used[b.id] = true;
  for (int e : by_depth) {
    if (e == a.id) continue;
    auto [prev, gi] = words[e];
    int img = b.mul(phi[prev], images[gi]);
    if (used[img]) {
      // must coincide with an already-assigned image only if same element;
      // different elements mapping to same image means not injective
      return false;
    }
    used[img] = true;
    phi[e] = img;
  }
  // homomorphism check on all pairs
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return false;
  return true;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const TableGroup& a,
                                                 const TableGroup& b) {
  if (a.n != b.n) return std::nullopt;
  if (!(fingerprint(a) == fingerprint(b))) return std::nullopt;
  auto gens = generating_sequence(a);
  auto words = bfs_words(a, gens);
  auto a_orders = a.element_orders();
  auto b_orders = b.element_orders();
  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    for (int e = 0; e < b.n; ++e)
      if (b_orders[e] == a_orders[gens[i]]) candidates[i].push_back(e);
  std::vector<int> images(gens.size(), -1);
  std::vector<int> phi;
  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == gens.size()) return check_hom_images(a, b, gens, words, images, phi);
    for (int c : candidates[i]) {
      images[i] = c;
      // prune: the partial subgroup orders must match
      std::vector<int> ga(gens.begin(), gens.begin() + i + 1);
      std::vector<int> gb(images.begin(), images.begin() + i + 1);
      if (a.subgroup_closure(ga).size() != b.subgroup_closure(gb).size())
        continue;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  if (rec(0)) return phi;
  return std::nullopt;
}

}  // namespace spincover
