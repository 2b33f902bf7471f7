#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spincover/cover.hpp"
#include "spincover/families.hpp"
#include "spincover/group.hpp"
#include "spincover/small2.hpp"

namespace spincover {

// Iterated-wreath generators of Syl_p(S_n): one block per base-p digit,
// one level generator per power of p inside a block.
std::vector<Perm> sylow_generators_sym(int n, int p);

struct SylowData {
  GroupSpec spec;
  int p = 2;
  uint64_t order = 1;
  // exactly one of these models is populated
  bool element_level = false;   // cover elements, enumerated
  bool perm_level = false;      // plain permutations (A/S or quotient model)
  bool table_model = false;     // abstract table (extraspecial 3^{1+2})
  bool quotient_model = false;  // computed in a quotient / sibling cover
  Enumerated<CoverElement> cover_group;
  Enumerated<Perm> perm_group;
  TableGroup table;
  std::string label;  // "Q8", "Q16", "SD16", "D8", "" when not identified
  bool label_is_paper_cited = false;
  std::optional<GroupFingerprint> fp;  // when small enough to fingerprint
  std::vector<std::string> notes;
};

SylowData sylow(const GroupSpec& spec, int p,
                size_t budget = kDefaultClosureBudget);

// --- p-rank via maximum clique over the commuting graph of order-p elements

struct MaxCliqueResult {
  std::vector<int> members;
  bool exact = true;  // false if the node budget was exhausted
};

// adj: bitset rows (n vertices); finds a maximum clique (Bron-Kerbosch with
// pivoting) subject to a search-node budget.
MaxCliqueResult max_clique(const std::vector<std::vector<uint64_t>>& adj,
                           int n, size_t node_budget = 10'000'000);

struct PRankResult {
  int rank = 0;
  bool exact = true;
  std::vector<CoverElement> witness;  // clique elements (element-level cases)
  std::vector<Perm> witness_perm;     // quotient-model cases
};

PRankResult p_rank(const GroupSpec& spec, int p,
                   size_t node_budget = 10'000'000);

// Explicit rank-4 witness in 2.An for n >= 8: the three translation
// involutions of an F_2^3 on points 1..8, plus z.
std::vector<CoverElement> rank4_witness_2An(int n, int alpha);

// --- maximal elementary abelian rank-2 classification (p = 2)

struct InvolutionClassDecision {
  int l = 0;            // projected l-fold transposition type
  bool odd_lift = false;
  bool maximal = false;  // <x,z> maximal among elementary abelians
  CoverElement x;
  std::optional<CoverElement> y;  // commuting witness when not maximal
  std::string method;  // "catalog-witness", "search-witness", "enumeration"
};

struct MaximalRank2Data {
  GroupSpec spec;
  int p = 2;
  std::vector<InvolutionClassDecision> classes;
  int n_conj = 0;      // number of classes of maximal rank-2 subgroups
  int m = 0;           // 1, 2 or 4 from the centralizer structure <s> x L
  int a = 0;           // m * p
  bool selfcentralising = false;
  std::vector<std::string> notes;
};

MaximalRank2Data maximal_klein_four_classes(const GroupSpec& spec);

// Odd-p (and the 2+.S8/9 p=2 path) rank-2 class data feeding the
// torsion-free rank computation: class count, selfcentralising flags, m, a.
MaximalRank2Data rank2_class_data_odd(const GroupSpec& spec, int p);

// --- exact centralizer data for the lift of a transposition in 2+.Sn,
//     n in {8, 9} (decides maximality of <[1,2], z> by enumeration)

struct TranspositionCentralizerData {
  int n = 0;
  CoverElement x;                  // [1,2]
  uint64_t preimage_order = 0;     // preimage of C_{Sn}((1,2))
  uint64_t c_g_order = 0;          // |C_G(x)|, G = 2+.Sn
  uint64_t c_2an_order = 0;        // |C_{2.An}(x)|
  int two_rank_c_g = 0;
  std::string syl_label_2an;       // Sylow 2 of C_{2.An}(x), expect Q16
  GroupFingerprint syl_fp_2an;
  bool commuting_even_witness_exists = false;  // y completing a rank-3 group
};

TranspositionCentralizerData transposition_centralizer_data(int n);

// --- Klein-four fusion inside 2.S6 / 2±.S7

struct KleinFusionData {
  GroupSpec spec;
  uint64_t g_order = 0;
  int sylow_class_count = 0;  // P-classes of Klein fours (expect 2)
  std::vector<std::vector<CoverElement>> class_reps;  // full 4-element sets
  bool fused = false;
  std::optional<CoverElement> conjugator;
};

KleinFusionData klein_four_fusion(const GroupSpec& spec);

// Pairwise isomorphism of the three order-32 Sylow groups
// Syl2(2.S6), Syl2(2+.S7), Syl2(2-.S7); returns true when all three
// explicit isomorphisms are found.
bool order32_sylows_pairwise_isomorphic();

}  // namespace spincover
