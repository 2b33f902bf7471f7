#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spincover/bsgs.hpp"
#include "spincover/cover.hpp"
#include "spincover/group.hpp"

using namespace spincover;

namespace {

std::vector<Perm> sym_gens(int n) {
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = i + 1;
  return {Perm::transposition(n, 1, 2), Perm::cycle(n, cyc)};
}

std::vector<Perm> alt_gens(int n) {
  // standard: (1,2,3) and, for n >= 4, an n- or (n-1)-cycle of even sign
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

}  // namespace

TEST_CASE("perm basics") {
  Perm a = Perm::transposition(4, 1, 2);
  Perm b = Perm::transposition(4, 2, 3);
  // (a*b)(x) = a(b(x)): b first, so 3 -> 2 -> 1
  CHECK((a * b).apply(3) == 1);
  CHECK(a.inverse() == a);
  CHECK(Perm::cycle(5, {1, 2, 3}).order() == 3);
  CHECK(Perm::cycle(5, {1, 2, 3}).is_even());
  CHECK_FALSE(a.is_even());
  CHECK(Perm::cycle(6, {1, 2, 3, 4}).cycle_type() ==
        Partition{4, 1, 1});
}

TEST_CASE("closure: trivial and symmetric") {
  auto triv = closure(std::vector<Perm>{}, Perm::identity(4));
  CHECK(triv.order() == 1);
  auto s4 = closure(sym_gens(4), Perm::identity(4));
  CHECK(s4.order() == 24);
  auto a5 = closure(alt_gens(5), Perm::identity(5));
  CHECK(a5.order() == 60);
}

TEST_CASE("closure budget") {
  CHECK_THROWS_AS(closure(sym_gens(8), Perm::identity(8), 1000),
                  BudgetExceeded);
}

TEST_CASE("order_via_bsgs") {
  CHECK(order_via_bsgs(sym_gens(9)) == 362880);
  CHECK(order_via_bsgs(alt_gens(15)) == 653837184000ull);  // 15!/2
  CHECK(order_via_bsgs({Perm::cycle(5, {1, 2, 3, 4, 5})}) == 5);
}

TEST_CASE("closure and bsgs agree on a corpus") {
  for (int n = 3; n <= 7; ++n) {
    CHECK(closure(sym_gens(n), Perm::identity(n)).order() ==
          order_via_bsgs(sym_gens(n)));
    CHECK(closure(alt_gens(n), Perm::identity(n)).order() ==
          order_via_bsgs(alt_gens(n)));
  }
  // dihedral of order 12 acting on 6 points
  std::vector<Perm> d12{Perm::cycle(6, {1, 2, 3, 4, 5, 6}),
                        Perm::from_images({6, 5, 4, 3, 2, 1})};
  CHECK(closure(d12, Perm::identity(6)).order() == 12);
  CHECK(order_via_bsgs(d12) == 12);
}

TEST_CASE("centralizer in S6 by brute force") {
  auto s6 = closure(sym_gens(6), Perm::identity(6));
  Perm x = Perm::from_cycles(6, {{1, 2}, {3, 4}, {5, 6}});
  auto c = centralizer_enumerated(s6, x);
  CHECK(c.order() == 48);
  CHECK(c.contains(x));
  CHECK(s6.order() % c.order() == 0);
  // oracle: direct count
  size_t count = 0;
  for (const auto& g : s6.elements)
    if (g * x == x * g) ++count;
  CHECK(c.order() == count);
}

TEST_CASE("centralizer of central element is everything") {
  auto g = closure(
      {central_z(4, 0), gen_t(1, 4, 0), gen_t(2, 4, 0), gen_t(3, 4, 0)},
      cover_identity(4, 0));
  CHECK(g.order() == 48);
  auto c = centralizer_enumerated(g, central_z(4, 0));
  CHECK(c.order() == g.order());
}

TEST_CASE("conjugacy search in S4") {
  auto s4 = closure(sym_gens(4), Perm::identity(4));
  std::vector<Perm> a{Perm::from_cycles(4, {{1, 2}, {3, 4}})};
  std::vector<Perm> b{Perm::from_cycles(4, {{1, 3}, {2, 4}})};
  auto r = conjugacy_search(s4, a, b);
  REQUIRE(r.found);
  CHECK(r.exhaustive);
  auto ca = closure(a, Perm::identity(4)).elements;
  auto cb = closure(b, Perm::identity(4)).elements;
  CHECK(conjugate_set(ca, *r.conjugator) == cb);

  auto same = conjugacy_search(s4, a, a);
  REQUIRE(same.found);

  // non-conjugate: different orders
  std::vector<Perm> c{Perm::cycle(4, {1, 2, 3})};
  auto r2 = conjugacy_search(s4, a, c);
  CHECK_FALSE(r2.found);
  CHECK(r2.exhaustive);
}

TEST_CASE("abelianization p' part") {
  // C5 : C4 inside S5 = normalizer of a 5-cycle
  std::vector<Perm> frob{Perm::cycle(5, {1, 2, 3, 4, 5}),
                         Perm::from_images({1, 3, 5, 2, 4})};
  auto f20 = closure(frob, Perm::identity(5));
  CHECK(f20.order() == 20);
  CHECK(abelianization_p_prime_part(f20, 5) ==
        AbelianGroup::from_factors({4}));

  // abelian C6, p = 3
  auto c6 = closure({Perm::cycle(6, {1, 2, 3, 4, 5, 6})}, Perm::identity(6));
  CHECK(abelianization_p_prime_part(c6, 3) ==
        AbelianGroup::from_factors({2}));

  // perfect group: 2.A5 (generated by even cover elements)
  auto twoa5 = closure({gen_x(1, 5, 0), gen_x(2, 5, 0), gen_x(3, 5, 0),
                        central_z(5, 0)},
                       cover_identity(5, 0));
  CHECK(twoa5.order() == 120);
  CHECK(abelianization_p_prime_part(twoa5, 2).is_trivial());
  CHECK(abelianization_p_prime_part(twoa5, 3).is_trivial());
}

TEST_CASE("abelianization handles mixed torsion") {
  // C12 x C2 as perms, p = 5 (keeps everything)
  std::vector<Perm> gens{
      Perm::from_cycles(14, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}}),
      Perm::from_cycles(14, {{13, 14}})};
  auto g = closure(gens, Perm::identity(14));
  CHECK(g.order() == 24);
  CHECK(abelianization_p_prime_part(g, 5) ==
        AbelianGroup::from_factors({12, 2}));
  CHECK(abelianization_p_prime_part(g, 3) ==
        AbelianGroup::from_factors({4, 2}));
  CHECK(abelianization_p_prime_part(g, 2) ==
        AbelianGroup::from_factors({3}));
}

TEST_CASE("sylow of enumerated group") {
  auto s4 = closure(sym_gens(4), Perm::identity(4));
  auto syl2 = sylow_of_enumerated(s4, 2);
  CHECK(syl2.order() == 8);
  auto syl3 = sylow_of_enumerated(s4, 3);
  CHECK(syl3.order() == 3);
  auto a6 = closure(alt_gens(6), Perm::identity(6));
  CHECK(sylow_of_enumerated(a6, 2).order() == 8);
  CHECK(sylow_of_enumerated(a6, 3).order() == 9);
}

TEST_CASE("table group + fingerprint on S3") {
  auto s3 = closure(sym_gens(3), Perm::identity(3));
  auto t = make_table(s3);
  auto fp = fingerprint(t);
  CHECK(fp.order == 6);
  CHECK(fp.center_order == 1);
  CHECK(fp.derived_order == 3);
  CHECK(fp.exponent == 6);
  CHECK(fp.abelianization == AbelianGroup::from_factors({2}));
}

TEST_CASE("quotient table") {
  auto s4 = closure(sym_gens(4), Perm::identity(4));
  auto t = make_table(s4);
  // V4 normal subgroup
  std::vector<int> v4{
      t.subgroup_closure({s4.index_of(Perm::from_cycles(4, {{1, 2}, {3, 4}})),
                          s4.index_of(Perm::from_cycles(4, {{1, 3}, {2, 4}}))})};
  CHECK(v4.size() == 4);
  auto q = quotient_table(t, v4);
  CHECK(q.n == 6);
  auto fp = fingerprint(q);
  CHECK(fp.derived_order == 3);  // quotient is S3
}

TEST_CASE("abelian invariants canonical") {
  CHECK(AbelianGroup::from_factors({3, 8, 2}) ==
        AbelianGroup::from_factors({2, 24}));
  CHECK(AbelianGroup::from_factors({2, 4}).to_string() == "Z/2+Z/4");
  CHECK(AbelianGroup::from_factors({}, 1).to_string() == "Z");
  AbelianGroup g = AbelianGroup::from_factors({6, 4});
  CHECK(g == AbelianGroup::from_factors({2, 12}));
  // idempotent
  CHECK(AbelianGroup::from_factors(g.factors, g.free_rank) == g);
}
