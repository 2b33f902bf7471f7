#include "spincover/bsgs.hpp"

#include <map>
#include <sstream>

#include "spincover/errors.hpp"

namespace spincover {

namespace {

struct Level {
  int base_point = 0;                // 1-based
  std::vector<Perm> gens;            // strong generators fixing earlier points
  std::map<int, Perm> transversal;   // orbit point -> coset rep mapping base there
};

struct Chain {
  int degree = 0;
  std::vector<Level> levels;

  void recompute_orbit(size_t li) {
    Level& lv = levels[li];
    lv.transversal.clear();
    lv.transversal.emplace(lv.base_point, Perm::identity(degree));
    std::vector<int> frontier{lv.base_point};
    while (!frontier.empty()) {
      int pt = frontier.back();
      frontier.pop_back();
      const Perm rep = lv.transversal.at(pt);
      for (const Perm& g : lv.gens) {
        int img = g.apply(pt);
        if (!lv.transversal.count(img)) {
          lv.transversal.emplace(img, g * rep);
          frontier.push_back(img);
        }
      }
    }
  }

  // Sift g through levels starting at li; returns residue and level reached.
  std::pair<Perm, size_t> sift(Perm g, size_t li) const {
    for (size_t i = li; i < levels.size(); ++i) {
      int img = g.apply(levels[i].base_point);
      auto it = levels[i].transversal.find(img);
      if (it == levels[i].transversal.end()) return {g, i};
      g = it->second.inverse() * g;
    }
    return {g, levels.size()};
  }

  void add_generator(const Perm& g, size_t li) {
    auto [res, lvl] = sift(g, li);
    if (res.is_identity()) return;
    if (lvl == levels.size()) {
      int bp = 0;
      for (int i = 1; i <= degree; ++i)
        if (res.apply(i) != i) {
          bp = i;
          break;
        }
      levels.push_back(Level{bp, {}, {}});
    }
    for (size_t i = li; i <= lvl && i < levels.size(); ++i) {
      levels[i].gens.push_back(res);
      recompute_orbit(i);
      // close under Schreier generators at this level
      bool changed = true;
      while (changed) {
        changed = false;
        for (const auto& [pt, rep] : levels[i].transversal) {
          for (const Perm& s : levels[i].gens) {
            int img = s.apply(pt);
            const Perm& rep2 = levels[i].transversal.at(img);
            Perm schreier = rep2.inverse() * s * rep;
            auto [r2, l2] = sift(schreier, i + 1);
            if (!r2.is_identity()) {
              add_generator(r2, i + 1);
              changed = true;
            }
          }
          if (changed) break;
        }
      }
    }
  }
};

}  // namespace

unsigned __int128 StabilizerChain::order128() const {
  unsigned __int128 o = 1;
  for (size_t l : orbit_lengths) o *= l;
  return o;
}

uint64_t StabilizerChain::order() const {
  unsigned __int128 o = order128();
  if (o > UINT64_MAX) throw BudgetExceeded("StabilizerChain: order overflow");
  return static_cast<uint64_t>(o);
}

std::string StabilizerChain::order_string() const {
  unsigned __int128 o = order128();
  if (o == 0) return "0";
  std::string s;
  while (o > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(o % 10)));
    o /= 10;
  }
  return std::string(s.rbegin(), s.rend());
}

StabilizerChain build_stabilizer_chain(const std::vector<Perm>& generators) {
  StabilizerChain out;
  if (generators.empty()) return out;
  int degree = generators[0].degree();
  if (degree > 64) throw IndexOutOfRange("build_stabilizer_chain: degree > 64");
  for (const Perm& g : generators)
    if (g.degree() != degree)
      throw DegreeMismatch("build_stabilizer_chain: mixed degrees");
  Chain chain;
  chain.degree = degree;
  for (const Perm& g : generators) chain.add_generator(g, 0);
  for (const auto& lv : chain.levels) {
    out.base.push_back(lv.base_point);
    out.orbit_lengths.push_back(lv.transversal.size());
  }
  return out;
}

uint64_t order_via_bsgs(const std::vector<Perm>& generators) {
  return build_stabilizer_chain(generators).order();
}

}  // namespace spincover
