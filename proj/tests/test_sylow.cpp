#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spincover/sylow.hpp"

using namespace spincover;

namespace {

uint64_t p_part_factorial(int n, int p) {
  uint64_t v = 0;
  for (long long q = p; q <= n; q *= p) v += n / q;
  uint64_t out = 1;
  while (v--) out *= p;
  return out;
}

}  // namespace

TEST_CASE("wreath generators produce a full Sylow of Sn") {
  for (int p : {2, 3, 5})
    for (int n = 2; n <= 10; ++n) {
      auto gens = sylow_generators_sym(n, p);
      auto g = closure(gens, Perm::identity(n));
      CHECK(g.order() == p_part_factorial(n, p));
    }
}

TEST_CASE("sylow labels for the small double covers") {
  CHECK(sylow(make_spec(Family::TwoA, 4), 2).label == "Q8");
  CHECK(sylow(make_spec(Family::TwoA, 5), 2).label == "Q8");
  CHECK(sylow(make_spec(Family::TwoA, 6), 2).label == "Q16");
  CHECK(sylow(make_spec(Family::TwoA, 7), 2).label == "Q16");
  CHECK(sylow(make_spec(Family::TwoSminus, 4), 2).label == "Q16");
  CHECK(sylow(make_spec(Family::TwoSminus, 5), 2).label == "Q16");
  CHECK(sylow(make_spec(Family::TwoSplus, 4), 2).label == "SD16");
  CHECK(sylow(make_spec(Family::TwoSplus, 5), 2).label == "SD16");
  // order-32 Sylow of 2.S6 matches none of the reference groups
  auto s = sylow(make_spec(Family::TwoSplus, 6), 2);
  CHECK(s.order == 32);
  CHECK(s.label.empty());
}

TEST_CASE("sylow orders at larger degree and odd primes") {
  auto d = sylow(make_spec(Family::TwoA, 8), 2);
  CHECK(d.order == 128);
  CHECK(d.element_level);
  for (const auto& e : d.cover_group.elements) CHECK(e.is_even());

  auto s = sylow(make_spec(Family::TwoSminus, 8), 2);
  CHECK(s.order == 256);

  auto t3 = sylow(make_spec(Family::TwoA, 9), 3);
  CHECK(t3.order == 81);
  CHECK(t3.element_level);
  for (const auto& e : t3.cover_group.elements) {
    CHECK(e.is_even());
    int o = order(e);
    CHECK((o == 1 || o % 3 == 0));
  }

  CHECK(sylow(make_spec(Family::TwoSplus, 7), 7).order == 7);
  CHECK(sylow(make_spec(Family::TwoA, 11), 11).order == 11);
}

TEST_CASE("sylow for the exceptional covers") {
  auto a = sylow(make_spec(Family::ThreeA6, 6), 2);
  CHECK(a.perm_level);
  CHECK(a.quotient_model);
  CHECK(a.label == "D8");
  CHECK(sylow(make_spec(Family::ThreeA7, 7), 2).label == "D8");
  CHECK(sylow(make_spec(Family::SixA6, 6), 2).label == "Q16");
  CHECK(sylow(make_spec(Family::SixA7, 7), 2).label == "Q16");

  auto h = sylow(make_spec(Family::ThreeA6, 6), 3);
  CHECK(h.table_model);
  CHECK(h.order == 27);
  REQUIRE(h.fp.has_value());
  CHECK(h.fp->exponent == 3);
  CHECK(sylow(make_spec(Family::SixA7, 7), 3).order == 27);
  CHECK(sylow(make_spec(Family::ThreeA7, 7), 5).order == 5);
  CHECK(sylow(make_spec(Family::SixA6, 6), 7).order == 1);
}

TEST_CASE("max_clique on hand graphs") {
  // 4-cycle: max clique 2
  std::vector<std::vector<uint64_t>> adj(4, std::vector<uint64_t>(1, 0));
  auto link = [&](int i, int j) {
    adj[i][0] |= uint64_t{1} << j;
    adj[j][0] |= uint64_t{1} << i;
  };
  link(0, 1);
  link(1, 2);
  link(2, 3);
  link(3, 0);
  auto r = max_clique(adj, 4);
  CHECK(r.exact);
  CHECK(r.members.size() == 2);
  // add a chord: triangle
  link(0, 2);
  CHECK(max_clique(adj, 4).members.size() == 3);
}

TEST_CASE("2-ranks of small covers") {
  CHECK(p_rank(make_spec(Family::TwoA, 4), 2).rank == 1);   // Q8
  CHECK(p_rank(make_spec(Family::TwoA, 7), 2).rank == 1);   // Q16
  CHECK(p_rank(make_spec(Family::TwoSplus, 4), 2).rank == 2);   // SD16
  CHECK(p_rank(make_spec(Family::TwoSminus, 4), 2).rank == 1);  // Q16
  CHECK(p_rank(make_spec(Family::SixA6, 6), 2).rank == 1);
  CHECK(p_rank(make_spec(Family::ThreeA6, 6), 2).rank == 2);  // D8
}

TEST_CASE("2-rank of 2.An jumps to 4 at n = 8") {
  for (int n : {8, 9}) {
    auto r = p_rank(make_spec(Family::TwoA, n), 2);
    CHECK(r.exact);
    CHECK(r.rank == 4);
    CHECK(r.rank == 3 * (n / 8) + 1);
  }
}

TEST_CASE("odd p-ranks") {
  CHECK(p_rank(make_spec(Family::ThreeA6, 6), 3).rank == 2);
  CHECK(p_rank(make_spec(Family::SixA7, 7), 3).rank == 2);
  CHECK(p_rank(make_spec(Family::TwoA, 9), 3).rank == 3);  // base of C3 wr C3
  CHECK(p_rank(make_spec(Family::TwoA, 7), 5).rank == 1);
  CHECK(p_rank(make_spec(Family::TwoSplus, 6), 7).rank == 0);
}

TEST_CASE("explicit rank-4 witness in 2.An") {
  for (int n : {8, 10, 15}) {
    auto w = rank4_witness_2An(n, 0);
    CHECK(w.size() == 4);
    for (const auto& a : w)
      for (const auto& b : w) CHECK(a * b == b * a);
  }
  CHECK_THROWS_AS(rank4_witness_2An(7, 0), OutOfScope);
}

TEST_CASE("transposition centralizer in 2+.S8") {
  auto d = transposition_centralizer_data(8);
  CHECK(d.preimage_order == 2880);
  CHECK(d.c_g_order == 1440);
  CHECK(d.c_2an_order == 720);
  CHECK(d.syl_label_2an == "Q16");
  CHECK(d.two_rank_c_g == 2);
  CHECK_FALSE(d.commuting_even_witness_exists);
}

TEST_CASE("transposition centralizer in 2+.S9") {
  auto d = transposition_centralizer_data(9);
  CHECK(d.preimage_order == 20160);
  CHECK(d.c_g_order == 10080);
  CHECK(d.c_2an_order == 5040);
  CHECK(d.syl_label_2an == "Q16");
  CHECK_FALSE(d.commuting_even_witness_exists);
}

TEST_CASE("maximal Klein-four classes: the two exceptional cases") {
  for (int n : {8, 9}) {
    auto d = maximal_klein_four_classes(make_spec(Family::TwoSplus, n));
    CHECK(d.n_conj == 1);
    CHECK(d.m == 4);
    CHECK(d.a == 8);
    int maximal_l = -1;
    for (const auto& c : d.classes)
      if (c.maximal) maximal_l = c.l;
    CHECK(maximal_l == 1);
  }
}

TEST_CASE("maximal Klein-four classes: none elsewhere (spot checks)") {
  CHECK(maximal_klein_four_classes(make_spec(Family::TwoA, 8)).n_conj == 0);
  CHECK(maximal_klein_four_classes(make_spec(Family::TwoSminus, 8)).n_conj ==
        0);
  CHECK(maximal_klein_four_classes(make_spec(Family::TwoSplus, 10)).n_conj ==
        0);
  CHECK(maximal_klein_four_classes(make_spec(Family::TwoSminus, 14)).n_conj ==
        0);
  // every non-maximal class carries an explicit commuting witness
  auto d = maximal_klein_four_classes(make_spec(Family::TwoSminus, 14));
  for (const auto& c : d.classes) {
    REQUIRE_FALSE(c.maximal);
    REQUIRE(c.y.has_value());
    CHECK(order(*c.y) == 2);
    CHECK(*c.y * c.x == c.x * *c.y);
    CHECK(c.y->perm != c.x.perm);
    CHECK_FALSE(c.y->perm.is_identity());
  }
}

TEST_CASE("rank-2 class data for the odd-prime cases") {
  for (Family f : {Family::ThreeA6, Family::SixA6}) {
    auto d = rank2_class_data_odd(make_spec(f, 6), 3);
    CHECK(d.n_conj == 2);
    CHECK(d.selfcentralising);
    CHECK(d.m == 2);
    CHECK(d.a == 6);
  }
  auto d7 = rank2_class_data_odd(make_spec(Family::ThreeA7, 7), 3);
  CHECK(d7.n_conj == 2);
  auto d8 = rank2_class_data_odd(make_spec(Family::TwoSplus, 8), 2);
  CHECK(d8.n_conj == 1);
  CHECK(d8.a == 8);
  CHECK_THROWS_AS(rank2_class_data_odd(make_spec(Family::TwoA, 8), 3),
                  UnsupportedFamily);
}

TEST_CASE("Klein-four fusion in 2.S6 and the two covers of S7") {
  for (auto spec :
       {make_spec(Family::TwoSplus, 6), make_spec(Family::TwoSplus, 7),
        make_spec(Family::TwoSminus, 7)}) {
    auto d = klein_four_fusion(spec);
    CHECK(d.sylow_class_count == 2);
    REQUIRE(d.fused);
    REQUIRE(d.conjugator.has_value());
    CHECK(conjugate_set(d.class_reps[0], *d.conjugator) == d.class_reps[1]);
  }
  CHECK(klein_four_fusion(make_spec(Family::TwoSplus, 6)).g_order == 1440);
  CHECK(klein_four_fusion(make_spec(Family::TwoSminus, 7)).g_order == 10080);
}

TEST_CASE("the three order-32 Sylow groups are pairwise isomorphic") {
  CHECK(order32_sylows_pairwise_isomorphic());
}
