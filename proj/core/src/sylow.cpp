#include "spincover/sylow.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace spincover {

namespace {

std::vector<Perm> alt_gens(int n) {
  std::vector<Perm> g{Perm::cycle(n, {1, 2, 3})};
  if (n > 3) {
    std::vector<int> cyc;
    if (n % 2) {
      for (int i = 1; i <= n; ++i) cyc.push_back(i);
    } else {
      for (int i = 2; i <= n; ++i) cyc.push_back(i);
    }
    g.push_back(Perm::cycle(n, cyc));
  }
  return g;
}

uint64_t p_part_of(uint64_t m, int p) {
  uint64_t out = 1;
  while (m % p == 0) {
    m /= p;
    out *= p;
  }
  return out;
}

template <class E>
Enumerated<E> even_subset(const Enumerated<E>& g) {
  Enumerated<E> s;
  s.id = g.id;
  for (const E& e : g.elements)
    if (e.is_even()) s.elements.push_back(e);
  s.generators = s.elements;
  return s;
}

CoverElement cover_p_part(const CoverElement& g, int p) {
  int o = order(g);
  int m = o;
  while (m % p == 0) m /= p;
  CoverElement r = cover_identity(g.degree(), g.alpha);
  for (int i = 0; i < m; ++i) r = r * g;
  return r;
}

// --- Bron-Kerbosch with pivoting over bitset rows

struct BitSetOps {
  int words;
  std::vector<uint64_t> empty_row() const {
    return std::vector<uint64_t>(words, 0);
  }
  static int popcount(const std::vector<uint64_t>& v) {
    int c = 0;
    for (uint64_t w : v) c += __builtin_popcountll(w);
    return c;
  }
  static std::vector<uint64_t> intersect(const std::vector<uint64_t>& a,
                                         const std::vector<uint64_t>& b) {
    std::vector<uint64_t> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
    return out;
  }
  static bool test(const std::vector<uint64_t>& v, int i) {
    return (v[i >> 6] >> (i & 63)) & 1;
  }
  static void set(std::vector<uint64_t>& v, int i) {
    v[i >> 6] |= uint64_t{1} << (i & 63);
  }
  static void clear(std::vector<uint64_t>& v, int i) {
    v[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }
};

struct BronKerbosch {
  const std::vector<std::vector<uint64_t>>& adj;
  int n;
  size_t budget;
  size_t nodes = 0;
  bool exact = true;
  std::vector<int> best;
  std::vector<int> cur;

  void run(std::vector<uint64_t> p, std::vector<uint64_t> x) {
    if (!exact) return;
    if (++nodes > budget) {
      exact = false;
      return;
    }
    int pc = BitSetOps::popcount(p);
    if (pc == 0 && BitSetOps::popcount(x) == 0) {
      if (cur.size() > best.size()) best = cur;
      return;
    }
    if (cur.size() + pc <= best.size()) return;
    // pivot: vertex of P u X with the most neighbours inside P
    int pivot = -1, pivot_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (!BitSetOps::test(p, v) && !BitSetOps::test(x, v)) continue;
      int deg = BitSetOps::popcount(BitSetOps::intersect(p, adj[v]));
      if (deg > pivot_deg) {
        pivot_deg = deg;
        pivot = v;
      }
    }
    for (int v = 0; v < n; ++v) {
      if (!BitSetOps::test(p, v)) continue;
      if (pivot >= 0 && BitSetOps::test(adj[pivot], v)) continue;
      cur.push_back(v);
      run(BitSetOps::intersect(p, adj[v]), BitSetOps::intersect(x, adj[v]));
      cur.pop_back();
      BitSetOps::clear(p, v);
      BitSetOps::set(x, v);
      if (!exact) return;
    }
  }
};

// Maximum clique among order-p elements of a commuting graph; returns the
// clique (as indices into `elems`) plus exactness.
template <class E>
std::pair<MaxCliqueResult, std::vector<E>> commuting_order_p_clique(
    const std::vector<E>& elems, const E& id, int p, size_t node_budget) {
  std::vector<int> verts;
  for (size_t i = 0; i < elems.size(); ++i)
    if (element_order(elems[i], id) == p) verts.push_back(static_cast<int>(i));
  int m = static_cast<int>(verts.size());
  int words = (m + 63) / 64;
  std::vector<std::vector<uint64_t>> adj(
      m, std::vector<uint64_t>(std::max(words, 1), 0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const E& a = elems[verts[i]];
      const E& b = elems[verts[j]];
      if (a * b == b * a) {
        BitSetOps::set(adj[i], j);
        BitSetOps::set(adj[j], i);
      }
    }
  MaxCliqueResult r = max_clique(adj, m, node_budget);
  std::vector<E> members;
  for (int i : r.members) members.push_back(elems[verts[i]]);
  std::vector<int> idx;
  for (int i : r.members) idx.push_back(verts[i]);
  r.members = idx;
  return {r, members};
}

// clique size s -> rank r with p^r = s + 1
int rank_from_clique(size_t s, int p, bool exact) {
  uint64_t target = s + 1;
  int r = 0;
  uint64_t pw = 1;
  while (pw < target) {
    pw *= p;
    ++r;
  }
  if (pw != target) {
    if (exact)
      throw Error("rank_from_clique: maximum clique not of size p^r - 1");
    // lower bound: largest full elementary abelian inside the found clique
    while (pw > target) {
      pw /= p;
      --r;
    }
  }
  return r;
}

}  // namespace

std::vector<Perm> sylow_generators_sym(int n, int p) {
  if (p < 2 || n < 1)
    throw IndexOutOfRange("sylow_generators_sym: bad arguments");
  std::vector<Perm> gens;
  int base = 0;
  int rem = n;
  while (rem >= p) {
    long long block = p;
    while (block * p <= rem) block *= p;
    for (long long step = 1; step < block; step *= p) {
      std::vector<std::vector<int>> cycles;
      for (long long i = 1; i <= step; ++i) {
        std::vector<int> c;
        for (int k = 0; k < p; ++k)
          c.push_back(base + static_cast<int>(k * step + i));
        cycles.push_back(c);
      }
      gens.push_back(Perm::from_cycles(n, cycles));
    }
    base += static_cast<int>(block);
    rem -= static_cast<int>(block);
  }
  return gens;
}

SylowData sylow(const GroupSpec& spec, int p, size_t budget) {
  SylowData d;
  d.spec = spec;
  d.p = p;
  const Family f = spec.family;
  const int n = spec.degree;
  d.order = p_part_of(group_order(spec), p);
  if (d.order == 1) {
    d.perm_level = true;
    d.perm_group = closure(std::vector<Perm>{}, Perm::identity(std::max(n, 1)));
    d.label = "1";
    return d;
  }
  if (f == Family::S || f == Family::A) {
    auto full = closure(sylow_generators_sym(n, p), Perm::identity(n), budget);
    d.perm_group = (f == Family::A && p == 2) ? even_subset(full) : full;
    d.perm_level = true;
  } else if (is_double_cover(f)) {
    const int alpha = cover_alpha(f);
    std::vector<CoverElement> cgens;
    for (const Perm& s : sylow_generators_sym(n, p)) {
      CoverElement lift = lift_perm(s, alpha);
      cgens.push_back(p == 2 ? lift : cover_p_part(lift, p));
    }
    if (p == 2) cgens.push_back(central_z(n, alpha));
    auto full = closure(cgens, cover_identity(n, alpha), budget);
    d.cover_group =
        (f == Family::TwoA && p == 2) ? even_subset(full) : full;
    d.element_level = true;
  } else {
    const int qn = (f == Family::ThreeA6 || f == Family::SixA6) ? 6 : 7;
    const bool six = (f == Family::SixA6 || f == Family::SixA7);
    if (p == 2) {
      if (six) {
        SylowData sib = sylow(make_spec(Family::TwoA, qn), 2, budget);
        d.cover_group = sib.cover_group;
        d.element_level = true;
        d.quotient_model = true;
        d.notes.push_back(
            "computed in 2.A" + std::to_string(qn) +
            ": quotienting by the odd central C3 is an isomorphism on "
            "Sylow 2-subgroups");
      } else {
        SylowData sib = sylow(make_spec(Family::A, qn), 2, budget);
        d.perm_group = sib.perm_group;
        d.perm_level = true;
        d.quotient_model = true;
        d.notes.push_back(
            "computed in A" + std::to_string(qn) +
            ": the centre has order 3, so it meets no 2-subgroup");
      }
    } else if (p == 3) {
      d.table = heisenberg_3();
      d.table_model = true;
      d.label = "3^(1+2)+";
      d.label_is_paper_cited = true;
      d.fp = fingerprint(d.table);
      d.notes.push_back(
          "extraspecial model of order 27 and exponent 3; invariants "
          "computed on the model, identification with the Sylow 3-subgroup "
          "of the cover cited");
    } else {
      auto an = closure(alt_gens(qn), Perm::identity(qn), budget);
      d.perm_group = sylow_of_enumerated(an, p);
      d.perm_level = true;
      d.quotient_model = true;
      d.notes.push_back(
          "computed in the alternating quotient (centre order coprime to p)");
    }
  }
  uint64_t got = d.element_level ? d.cover_group.order()
                 : d.perm_level  ? d.perm_group.order()
                                 : static_cast<uint64_t>(d.table.n);
  if (got != d.order) throw Error("sylow: constructed order mismatch");
  if (!d.table_model && got <= 512) {
    TableGroup t =
        d.element_level ? make_table(d.cover_group) : make_table(d.perm_group);
    d.fp = fingerprint(t);
    if (p == 2 && got <= 32) {
      if (auto lbl = identify_small_2group(t)) d.label = *lbl;
    }
  }
  return d;
}

MaxCliqueResult max_clique(const std::vector<std::vector<uint64_t>>& adj,
                           int n, size_t node_budget) {
  MaxCliqueResult out;
  if (n == 0) return out;
  BronKerbosch bk{adj, n, node_budget};
  int words = (n + 63) / 64;
  std::vector<uint64_t> p(words, 0), x(words, 0);
  for (int v = 0; v < n; ++v) BitSetOps::set(p, v);
  bk.run(std::move(p), std::move(x));
  out.members = bk.best;
  out.exact = bk.exact;
  std::sort(out.members.begin(), out.members.end());
  return out;
}

PRankResult p_rank(const GroupSpec& spec, int p, size_t node_budget) {
  PRankResult r;
  SylowData d = sylow(spec, p);
  if (d.order == 1) return r;
  if (d.table_model) {
    std::vector<int> verts;
    for (int i = 0; i < d.table.n; ++i)
      if (d.table.element_order(i) == p) verts.push_back(i);
    int m = static_cast<int>(verts.size());
    int words = std::max((m + 63) / 64, 1);
    std::vector<std::vector<uint64_t>> adj(m,
                                           std::vector<uint64_t>(words, 0));
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (d.table.mul(verts[i], verts[j]) ==
            d.table.mul(verts[j], verts[i])) {
          BitSetOps::set(adj[i], j);
          BitSetOps::set(adj[j], i);
        }
    MaxCliqueResult mc = max_clique(adj, m, node_budget);
    r.exact = mc.exact;
    r.rank = rank_from_clique(mc.members.size(), p, mc.exact);
    return r;
  }
  if (d.element_level) {
    auto [mc, members] = commuting_order_p_clique(
        d.cover_group.elements, d.cover_group.id, p, node_budget);
    r.exact = mc.exact;
    r.rank = rank_from_clique(members.size(), p, mc.exact);
    r.witness = members;
    if (mc.exact) {
      auto e = closure(members, d.cover_group.id);
      if (e.order() != members.size() + 1)
        throw Error("p_rank: clique does not span an elementary abelian");
    }
  } else {
    auto [mc, members] = commuting_order_p_clique(
        d.perm_group.elements, d.perm_group.id, p, node_budget);
    r.exact = mc.exact;
    r.rank = rank_from_clique(members.size(), p, mc.exact);
    r.witness_perm = members;
    if (mc.exact) {
      auto e = closure(members, d.perm_group.id);
      if (e.order() != members.size() + 1)
        throw Error("p_rank: clique does not span an elementary abelian");
    }
  }
  return r;
}

std::vector<CoverElement> rank4_witness_2An(int n, int alpha) {
  if (n < 8) throw OutOfScope("rank4_witness_2An: needs n >= 8");
  // translations of a regular F_2^3 on points 1..8
  auto e1 = lift_products({{1, 2}, {3, 4}, {5, 6}, {7, 8}}, n, alpha);
  auto e2 = lift_products({{1, 3}, {2, 4}, {5, 7}, {6, 8}}, n, alpha);
  auto e3 = lift_products({{1, 5}, {2, 6}, {3, 7}, {4, 8}}, n, alpha);
  auto z = central_z(n, alpha);
  std::vector<CoverElement> gens{e1, e2, e3, z};
  auto h = closure(gens, cover_identity(n, alpha));
  if (h.order() != 16)
    throw Error("rank4_witness_2An: preimage does not have order 16");
  for (const auto& e : h.elements)
    if (!e.is_identity() && order(e) != 2)
      throw Error("rank4_witness_2An: preimage is not elementary abelian");
  for (const auto& e : gens)
    if (!e.is_even()) throw Error("rank4_witness_2An: witness not even");
  return gens;
}

namespace {

// valid l-fold transposition types whose lifts are involutions
std::vector<int> involution_l_values(Family f, int n) {
  std::vector<int> out;
  for (int l = 1; 2 * l <= n; ++l) {
    bool ok = false;
    if (l % 4 == 0) ok = true;  // even lift, in 2.An as well
    else if (l % 2 == 1 && f == Family::TwoSplus && l % 4 == 1) ok = true;
    else if (l % 2 == 1 && f == Family::TwoSminus && l % 4 == 3) ok = true;
    if (ok) out.push_back(l);
  }
  return out;
}

using PairList = std::vector<std::pair<int, int>>;

// all matchings of size l on points 1..m, lexicographic
void enumerate_matchings(int m, int l, int min_first, PairList& acc,
                         std::vector<bool>& used,
                         const std::function<bool(const PairList&)>& visit,
                         bool& stop) {
  if (stop) return;
  if (static_cast<int>(acc.size()) == l) {
    if (visit(acc)) stop = true;
    return;
  }
  for (int i = min_first; i <= m && !stop; ++i) {
    if (used[i]) continue;
    for (int j = i + 1; j <= m && !stop; ++j) {
      if (used[j]) continue;
      used[i] = used[j] = true;
      acc.emplace_back(i, j);
      enumerate_matchings(m, l, i + 1, acc, used, visit, stop);
      acc.pop_back();
      used[i] = used[j] = false;
    }
    break;  // smallest unused point must be in some pair
  }
}

struct BracketCache {
  int n, alpha;
  std::map<std::pair<int, int>, CoverElement> cache;
  const CoverElement& get(int i, int j) {
    auto key = std::make_pair(i, j);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, bracket(i, j, n, alpha)).first;
    return it->second;
  }
  CoverElement product(const PairList& pairs) {
    CoverElement out = cover_identity(n, alpha);
    for (auto [i, j] : pairs) out = out * get(i, j);
    return out;
  }
};

bool valid_commuting_witness(const CoverElement& y, const CoverElement& x,
                             Family f) {
  if (f == Family::TwoA && !y.is_even()) return false;
  if (y.perm.is_identity() || y.perm == x.perm) return false;
  if (order(y) != 2) return false;
  return y * x == x * y;
}

}  // namespace

MaximalRank2Data maximal_klein_four_classes(const GroupSpec& spec) {
  const Family f = spec.family;
  if (!is_double_cover(f))
    throw UnsupportedFamily("maximal_klein_four_classes: double covers only");
  const int n = spec.degree;
  if (n < 8 || n > 15)
    throw OutOfScope("maximal_klein_four_classes: needs 8 <= n <= 15");
  const int alpha = cover_alpha(f);
  MaximalRank2Data d;
  d.spec = spec;
  d.p = 2;
  BracketCache bc{n, alpha, {}};

  // catalog of commuting-witness candidates, tried in order
  const std::vector<PairList> catalog{
      {{1, 2}, {3, 4}, {5, 6}, {7, 8}},
      {{1, 3}, {2, 4}, {5, 7}, {6, 8}},
      {{3, 4}, {5, 6}, {7, 8}, {9, 10}},
      {{1, 2}, {3, 5}, {4, 6}, {7, 8}},
      {{1, 3}, {2, 4}, {5, 6}, {7, 8}},
      {{1, 4}, {2, 3}, {5, 8}, {6, 7}},
  };

  for (int l : involution_l_values(f, n)) {
    PairList xpairs;
    for (int k = 0; k < l; ++k) xpairs.emplace_back(2 * k + 1, 2 * k + 2);
    InvolutionClassDecision cls;
    cls.l = l;
    cls.x = bc.product(xpairs);
    cls.odd_lift = !cls.x.is_even();
    if (order(cls.x) != 2)
      throw Error("maximal_klein_four_classes: x is not an involution");

    bool decided = false;
    for (const PairList& cand : catalog) {
      bool in_range = true;
      for (auto [i, j] : cand)
        if (j > n) in_range = false;
      if (!in_range) continue;
      CoverElement y = bc.product(cand);
      if (valid_commuting_witness(y, cls.x, f)) {
        cls.maximal = false;
        cls.y = y;
        cls.method = "catalog-witness";
        decided = true;
        break;
      }
    }
    if (!decided) {
      // bounded generic search over small-support involution projections
      const int m = std::min(n, 12);
      for (int lp : involution_l_values(f, 2 * m)) {
        if (2 * lp > m || decided) continue;
        PairList acc;
        std::vector<bool> used(m + 1, false);
        bool stop = false;
        enumerate_matchings(
            m, lp, 1, acc, used,
            [&](const PairList& pairs) {
              CoverElement y = bc.product(pairs);
              if (valid_commuting_witness(y, cls.x, f)) {
                cls.maximal = false;
                cls.y = y;
                cls.method = "search-witness";
                decided = true;
                return true;
              }
              return false;
            },
            stop);
      }
    }
    if (!decided && f == Family::TwoSplus && l == 1 && n <= 9) {
      // exact: C_G(x) lives inside the preimage of C_{Sn}((1,2))
      std::vector<int> tail;
      for (int i = 3; i <= n; ++i) tail.push_back(i);
      std::vector<CoverElement> hgens{bc.get(1, 2), bc.get(3, 4),
                                      lift_perm(Perm::cycle(n, tail), alpha),
                                      central_z(n, alpha)};
      auto h = closure(hgens, cover_identity(n, alpha));
      if (h.order() != 4 * factorial(n - 2))
        throw Error("maximal_klein_four_classes: wrong preimage order");
      cls.maximal = true;
      for (const auto& e : h.elements) {
        if (!(e * cls.x == cls.x * e)) continue;
        if (valid_commuting_witness(e, cls.x, f)) {
          cls.maximal = false;
          cls.y = e;
          break;
        }
      }
      cls.method = "enumeration";
      decided = true;
    }
    if (!decided)
      throw Error("maximal_klein_four_classes: class undecided for l = " +
                  std::to_string(l));
    d.classes.push_back(cls);
  }

  for (const auto& cls : d.classes)
    if (cls.maximal) ++d.n_conj;
  d.notes.push_back(
      "one class per l: the two lifts of an involution generate the same "
      "Klein four with z, and all l-fold transposition products are "
      "conjugate under lifts (an odd centralizing element exists for every "
      "type in range, so even conjugators suffice in 2.An)");
  if (d.n_conj > 0 && f == Family::TwoSplus && (n == 8 || n == 9)) {
    auto tcd = transposition_centralizer_data(n);
    d.m = 4;
    d.a = 8;
    d.notes.push_back(
        "centralizer of the maximal class: |C_G(x)| = " +
        std::to_string(tcd.c_g_order) + ", even part of order " +
        std::to_string(tcd.c_2an_order) + " with Sylow 2-subgroup " +
        tcd.syl_label_2an);
  }
  return d;
}

MaximalRank2Data rank2_class_data_odd(const GroupSpec& spec, int p) {
  const Family f = spec.family;
  if (p == 2 && f == Family::TwoSplus &&
      (spec.degree == 8 || spec.degree == 9)) {
    auto tcd = transposition_centralizer_data(spec.degree);
    MaximalRank2Data d;
    d.spec = spec;
    d.p = 2;
    InvolutionClassDecision cls;
    cls.l = 1;
    cls.odd_lift = true;
    cls.maximal = !tcd.commuting_even_witness_exists;
    cls.x = tcd.x;
    cls.method = "enumeration";
    d.classes.push_back(cls);
    d.n_conj = cls.maximal ? 1 : 0;
    d.m = 4;
    d.a = 8;
    d.selfcentralising = false;
    d.notes.push_back("C_G(E) = <x> x D with |D| = " +
                      std::to_string(tcd.c_g_order / 2) +
                      "; Sylow 2-subgroup of the even part is " +
                      tcd.syl_label_2an);
    return d;
  }
  if (is_exceptional_cover(f) && p == 3) {
    MaximalRank2Data d;
    d.spec = spec;
    d.p = 3;
    TableGroup t = heisenberg_3();
    // all rank-2 elementary abelian subgroups of the extraspecial model
    std::set<std::vector<int>> subs;
    for (int a = 0; a < t.n; ++a) {
      if (t.element_order(a) != 3) continue;
      for (int b = a + 1; b < t.n; ++b) {
        if (t.element_order(b) != 3) continue;
        if (t.mul(a, b) != t.mul(b, a)) continue;
        auto s = t.subgroup_closure({a, b});
        if (s.size() == 9) subs.insert(s);
      }
    }
    if (subs.size() != 4)
      throw Error("rank2_class_data_odd: expected 4 maximal subgroups");
    d.selfcentralising = true;
    for (const auto& s : subs) {
      std::vector<int> cent;
      for (int g = 0; g < t.n; ++g) {
        bool commutes = true;
        for (int e : s)
          if (t.mul(g, e) != t.mul(e, g)) commutes = false;
        if (commutes) cent.push_back(g);
      }
      if (cent != s) d.selfcentralising = false;
    }
    // G-classes, computed in the alternating quotient
    const int qn = (f == Family::ThreeA6 || f == Family::SixA6) ? 6 : 7;
    auto an = closure(alt_gens(qn), Perm::identity(qn));
    auto syl3 = sylow_of_enumerated(an, 3);
    std::set<std::vector<Perm>> c3subs;
    for (const Perm& e : syl3.elements) {
      if (element_order(e, syl3.id) != 3) continue;
      auto s = closure(std::vector<Perm>{e}, syl3.id).elements;
      c3subs.insert(s);
    }
    std::vector<std::vector<Perm>> reps;
    for (const auto& s : c3subs) {
      bool fresh = true;
      for (const auto& r : reps)
        if (conjugacy_search(an, r, s).found) fresh = false;
      if (fresh) reps.push_back(s);
    }
    d.n_conj = static_cast<int>(reps.size());
    d.m = 2;
    d.a = 6;
    d.notes.push_back(
        "4 maximal rank-2 subgroups in the Sylow model, all "
        "self-centralising; class count computed among order-3 subgroups of "
        "Syl_3(A" +
        std::to_string(qn) + ") up to A" + std::to_string(qn) +
        "-conjugacy; C_P(s) = <s> x C3");
    return d;
  }
  throw UnsupportedFamily("rank2_class_data_odd: unsupported family/prime");
}

TranspositionCentralizerData transposition_centralizer_data(int n) {
  if (n != 8 && n != 9)
    throw OutOfScope("transposition_centralizer_data: n must be 8 or 9");
  const int alpha = 0;
  TranspositionCentralizerData d;
  d.n = n;
  d.x = bracket(1, 2, n, alpha);
  std::vector<int> tail;
  for (int i = 3; i <= n; ++i) tail.push_back(i);
  std::vector<CoverElement> hgens{
      bracket(1, 2, n, alpha), bracket(3, 4, n, alpha),
      lift_perm(Perm::cycle(n, tail), alpha), central_z(n, alpha)};
  auto h = closure(hgens, cover_identity(n, alpha));
  d.preimage_order = h.order();
  if (d.preimage_order != 4 * factorial(n - 2))
    throw Error("transposition_centralizer_data: wrong preimage order");
  auto c = centralizer_enumerated(h, d.x);
  d.c_g_order = c.order();
  auto ceven = even_subset(c);
  d.c_2an_order = ceven.order();
  auto syl = sylow_of_enumerated(ceven, 2);
  auto t = make_table(syl);
  d.syl_fp_2an = fingerprint(t);
  d.syl_label_2an = identify_small_2group(t).value_or("");
  auto sylc = sylow_of_enumerated(c, 2);
  auto [mc, members] =
      commuting_order_p_clique(sylc.elements, sylc.id, 2, 10'000'000);
  d.two_rank_c_g = rank_from_clique(members.size(), 2, mc.exact);
  d.commuting_even_witness_exists = false;
  for (const auto& e : c.elements) {
    if (order(e) != 2) continue;
    if (e.perm.is_identity() || e.perm == d.x.perm) continue;
    d.commuting_even_witness_exists = true;
    break;
  }
  return d;
}

KleinFusionData klein_four_fusion(const GroupSpec& spec) {
  const Family f = spec.family;
  const int n = spec.degree;
  if ((f != Family::TwoSplus && f != Family::TwoSminus) ||
      (n != 6 && n != 7))
    throw UnsupportedFamily("klein_four_fusion: needs 2.S6 or 2±.S7");
  const int alpha = cover_alpha(f);
  KleinFusionData d;
  d.spec = spec;
  auto syl = sylow(spec, 2);
  const auto& p = syl.cover_group;
  // every Klein four contains z here (2-rank is 2), so list them all
  std::vector<CoverElement> invs;
  for (const auto& e : p.elements)
    if (!e.is_identity() && order(e) == 2) invs.push_back(e);
  std::set<std::vector<CoverElement>> subs;
  for (size_t i = 0; i < invs.size(); ++i)
    for (size_t j = i + 1; j < invs.size(); ++j) {
      if (!(invs[i] * invs[j] == invs[j] * invs[i])) continue;
      std::vector<CoverElement> e{p.id, invs[i], invs[j],
                                  invs[i] * invs[j]};
      std::sort(e.begin(), e.end());
      subs.insert(e);
    }
  // P-conjugacy classes
  std::vector<std::vector<CoverElement>> keys(subs.begin(), subs.end());
  std::vector<int> cls(keys.size(), -1);
  int nclasses = 0;
  for (size_t i = 0; i < keys.size(); ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = nclasses;
    for (const auto& g : p.elements) {
      auto img = conjugate_set(keys[i], g);
      auto it = std::lower_bound(keys.begin(), keys.end(), img);
      if (it != keys.end() && *it == img)
        cls[it - keys.begin()] = nclasses;
    }
    ++nclasses;
  }
  d.sylow_class_count = nclasses;
  for (int c = 0; c < nclasses; ++c)
    for (size_t i = 0; i < keys.size(); ++i)
      if (cls[i] == c) {
        d.class_reps.push_back(keys[i]);
        break;
      }
  if (nclasses != 2) return d;  // caller decides; fusion undefined otherwise
  // full group, then exhaustive conjugator search
  std::vector<CoverElement> ggens{central_z(n, alpha)};
  for (int j = 1; j <= n - 1; ++j) ggens.push_back(gen_t(j, n, alpha));
  auto g = closure(ggens, cover_identity(n, alpha));
  d.g_order = g.order();
  for (const auto& e : g.elements) {
    if (conjugate_set(d.class_reps[0], e) == d.class_reps[1]) {
      d.fused = true;
      d.conjugator = e;
      break;
    }
  }
  return d;
}

bool order32_sylows_pairwise_isomorphic() {
  auto t1 = make_table(sylow(make_spec(Family::TwoSplus, 6), 2).cover_group);
  auto t2 = make_table(sylow(make_spec(Family::TwoSplus, 7), 2).cover_group);
  auto t3 = make_table(sylow(make_spec(Family::TwoSminus, 7), 2).cover_group);
  return find_isomorphism(t1, t2).has_value() &&
         find_isomorphism(t1, t3).has_value() &&
         find_isomorphism(t2, t3).has_value();
}

}  // namespace spincover
