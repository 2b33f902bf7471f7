#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "spincover/abelian.hpp"
#include "spincover/errors.hpp"
#include "spincover/perm.hpp"

namespace spincover {

inline constexpr size_t kDefaultClosureBudget = 4'000'000;

template <class E>
struct ElementHash {
  size_t operator()(const E& e) const { return e.hash(); }
};

// Fully enumerated finite group (or subgroup). Elements kept sorted so that
// everything downstream is deterministic.
template <class E>
struct Enumerated {
  std::vector<E> elements;  // sorted
  std::vector<E> generators;
  E id;

  uint64_t order() const { return elements.size(); }

  bool contains(const E& e) const {
    return std::binary_search(elements.begin(), elements.end(), e);
  }
  int index_of(const E& e) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), e);
    if (it == elements.end() || !(*it == e))
      throw IndexOutOfRange("Enumerated::index_of: not a member");
    return static_cast<int>(it - elements.begin());
  }
};

// Breadth-first closure of the generated subgroup.
template <class E>
Enumerated<E> closure(std::vector<E> generators, const E& id,
                      size_t budget = kDefaultClosureBudget) {
  Enumerated<E> g;
  g.generators = generators;
  g.id = id;
  std::unordered_set<E, ElementHash<E>> seen;
  seen.insert(id);
  std::deque<E> frontier{id};
  while (!frontier.empty()) {
    E cur = std::move(frontier.front());
    frontier.pop_front();
    for (const E& gen : generators) {
      E next = cur * gen;
      if (seen.insert(next).second) {
        if (seen.size() > budget)
          throw BudgetExceeded("closure: budget exceeded");
        frontier.push_back(std::move(next));
      }
    }
  }
  g.elements.assign(seen.begin(), seen.end());
  std::sort(g.elements.begin(), g.elements.end());
  return g;
}

template <class E>
Enumerated<E> centralizer_enumerated(const Enumerated<E>& g, const E& x) {
  if (g.elements.empty())
    throw RequiresEnumeration("centralizer_enumerated: no universe");
  Enumerated<E> c;
  c.id = g.id;
  for (const E& e : g.elements)
    if (e * x == x * e) c.elements.push_back(e);
  c.generators = c.elements;
  return c;  // already sorted (subsequence of sorted)
}

template <class E>
int element_order(const E& e, const E& id, int cap = 1 << 20) {
  E cur = e;
  for (int k = 1; k <= cap; ++k) {
    if (cur == id) return k;
    cur = cur * e;
  }
  throw BudgetExceeded("element_order: cap exceeded");
}

template <class E>
E conjugate(const E& g, const E& h) {  // h^{-1} g h
  return h.inverse() * g * h;
}

template <class E>
std::vector<E> conjugate_set(const std::vector<E>& s, const E& h) {
  std::vector<E> out;
  out.reserve(s.size());
  for (const E& e : s) out.push_back(conjugate(e, h));
  std::sort(out.begin(), out.end());
  return out;
}

struct ConjugacyResult {
  bool found = false;
  bool exhaustive = false;  // NotFound + exhaustive is a proof
};

template <class E>
struct ConjugacySearchResult : ConjugacyResult {
  std::optional<E> conjugator;
};

// Exhaustive search over an enumerated parent for g with A^g = B (as sets).
template <class E>
ConjugacySearchResult<E> conjugacy_search(const Enumerated<E>& parent,
                                          const std::vector<E>& gens_a,
                                          const std::vector<E>& gens_b,
                                          size_t budget = kDefaultClosureBudget) {
  auto a = closure(gens_a, parent.id, budget).elements;
  auto b = closure(gens_b, parent.id, budget).elements;
  ConjugacySearchResult<E> r;
  r.exhaustive = true;
  if (a.size() != b.size()) return r;  // orders differ: proven non-conjugate
  for (const E& g : parent.elements) {
    if (conjugate_set(a, g) == b) {
      if (!(conjugate_set(a, g) == b))
        throw Error("conjugacy_search: verification failed");
      r.found = true;
      r.conjugator = g;
      return r;
    }
  }
  return r;
}

// Derived subgroup of a small enumerated group (all-pairs commutators; the
// set of commutators is conjugation closed, so no normal closure pass).
template <class E>
Enumerated<E> derived_subgroup(const Enumerated<E>& g) {
  if (g.elements.empty())
    throw RequiresEnumeration("derived_subgroup: no universe");
  if (g.order() > 25000)
    throw BudgetExceeded("derived_subgroup: group too large for all pairs");
  std::unordered_set<E, ElementHash<E>> comms;
  for (const E& a : g.elements) {
    E ai = a.inverse();
    for (const E& b : g.elements) {
      comms.insert(ai * b.inverse() * a * b);
    }
  }
  std::vector<E> gens(comms.begin(), comms.end());
  std::sort(gens.begin(), gens.end());
  return closure(gens, g.id, g.order());
}

// Invariant factors of the p'-part of G/[G,G].
template <class E>
AbelianGroup abelianization_p_prime_part(const Enumerated<E>& g, uint64_t p) {
  if (g.elements.empty())
    throw RequiresEnumeration("abelianization_p_prime_part: no universe");
  Enumerated<E> d = derived_subgroup(g);
  // canonical coset representative: minimum of the coset
  std::unordered_map<E, E, ElementHash<E>> rep;
  std::vector<E> reps;
  for (const E& e : g.elements) {
    if (rep.count(e)) continue;
    E mn = e;
    std::vector<E> coset;
    for (const E& x : d.elements) {
      E y = e * x;
      coset.push_back(y);
      if (y < mn) mn = y;
    }
    for (E& y : coset) rep.emplace(std::move(y), mn);
    reps.push_back(mn);
  }
  uint64_t qorder = reps.size();
  // order of each coset in the quotient
  auto coset_order = [&](const E& e) {
    E cur = e;
    for (uint64_t k = 1; k <= qorder; ++k) {
      if (d.contains(cur)) return k;
      cur = cur * e;
    }
    throw Error("abelianization: coset order overflow");
  };
  std::vector<uint64_t> orders;
  orders.reserve(reps.size());
  for (const E& r : reps) orders.push_back(coset_order(r));
  // abelian structure from the order statistics, prime by prime
  std::vector<std::pair<uint64_t, std::vector<int>>> pp;
  uint64_t m = qorder;
  for (uint64_t q = 2; q <= m; ++q) {
    if (m % q) continue;
    uint64_t qpart = 1;
    while (m % q == 0) {
      m /= q;
      qpart *= q;
    }
    if (q == p) continue;
    // N_k = number of x in the q-part with x^{q^k} = 1
    std::vector<int> exps;
    uint64_t prev = 1;
    for (uint64_t qk = q;; qk *= q) {
      uint64_t cnt = 0;  // #{cosets whose q-part of order divides qk}
      for (uint64_t o : orders) {
        uint64_t oq = 1;
        while (o % q == 0) {
          o /= q;
          oq *= q;
        }
        if (oq <= qk) ++cnt;
      }
      uint64_t nk = cnt * qpart / qorder;
      uint64_t ratio = nk / prev;
      int cyclic_count = 0;
      while (ratio > 1) {
        ratio /= q;
        ++cyclic_count;
      }
      // cyclic_count = #{invariant q-factors with exponent >= k}
      while (static_cast<int>(exps.size()) < cyclic_count) exps.push_back(0);
      for (int i = 0; i < cyclic_count; ++i) ++exps[i];
      prev = nk;
      if (nk == qpart) break;
    }
    pp.emplace_back(q, exps);
  }
  return AbelianGroup::from_prime_powers(pp);
}

// Greedy Sylow extraction from an enumerated group: repeatedly adjoin a
// p-element of N_G(S) \ S (always exists while |S| < p-part).
template <class E>
Enumerated<E> sylow_of_enumerated(const Enumerated<E>& g, uint64_t p) {
  if (g.elements.empty())
    throw RequiresEnumeration("sylow_of_enumerated: no universe");
  uint64_t ppart = 1;
  {
    uint64_t o = g.order();
    while (o % p == 0) {
      o /= p;
      ppart *= p;
    }
  }
  std::vector<E> sgens;
  Enumerated<E> s = closure(sgens, g.id);
  while (s.order() < ppart) {
    bool extended = false;
    for (const E& x : g.elements) {
      if (s.contains(x)) continue;
      uint64_t o = element_order(x, g.id);
      bool ppower = true;
      while (o > 1) {
        if (o % p) {
          ppower = false;
          break;
        }
        o /= p;
      }
      if (!ppower) continue;
      if (!(conjugate_set(s.elements, x) == s.elements)) continue;
      sgens.push_back(x);
      s = closure(sgens, g.id);
      extended = true;
      break;
    }
    if (!extended) throw Error("sylow_of_enumerated: no normalizing p-element");
  }
  return s;
}

// ---------------------------------------------------------------------------
// Dense multiplication-table form for structural analysis of small groups.

struct TableGroup {
  int n = 0;
  std::vector<int> table;  // n*n, row-major
  std::vector<int> inv;
  int id = 0;

  int mul(int a, int b) const { return table[a * n + b]; }
  int conj(int g, int h) const { return mul(mul(inv[h], g), h); }
  int element_order(int a) const;
  std::vector<int> element_orders() const;
  std::vector<int> subgroup_closure(std::vector<int> gens) const;
  std::vector<int> center() const;
  std::vector<int> derived() const;
  uint64_t exponent() const;
};

template <class E>
TableGroup make_table(const Enumerated<E>& g) {
  TableGroup t;
  t.n = static_cast<int>(g.order());
  if (t.n > 4096) throw BudgetExceeded("make_table: group too large");
  t.table.resize(static_cast<size_t>(t.n) * t.n);
  t.inv.resize(t.n);
  t.id = g.index_of(g.id);
  for (int a = 0; a < t.n; ++a) {
    for (int b = 0; b < t.n; ++b)
      t.table[static_cast<size_t>(a) * t.n + b] =
          g.index_of(g.elements[a] * g.elements[b]);
    t.inv[a] = g.index_of(g.elements[a].inverse());
  }
  return t;
}

TableGroup quotient_table(const TableGroup& g,
                          const std::vector<int>& normal_subgroup);

struct GroupFingerprint {
  uint64_t order = 1;
  std::vector<std::pair<int, int>> order_multiset;  // (element order, count)
  uint64_t center_order = 1;
  uint64_t derived_order = 1;
  uint64_t exponent = 1;
  AbelianGroup abelianization;

  bool operator==(const GroupFingerprint&) const = default;
  std::string to_string() const;
};

GroupFingerprint fingerprint(const TableGroup& g);
AbelianGroup abelian_invariants(const TableGroup& g);  // must be abelian

// Brute-force isomorphism search by generator-image backtracking.
// Intended for orders <= 64.
std::optional<std::vector<int>> find_isomorphism(const TableGroup& a,
                                                 const TableGroup& b);

}  // namespace spincover
