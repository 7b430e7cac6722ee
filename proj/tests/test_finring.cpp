#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "torsionlab/finring.hpp"

using namespace torsionlab;

TEST_CASE("corpus rings satisfy every ring law") {
  for (const auto& R : oracles::corpus()) {
    CAPTURE(R->name);
    CHECK_NOTHROW(validate_ring(*R));
    CHECK(R->m(R->one, 2 % R->n) == 2 % R->n);
  }
}

TEST_CASE("non-associative table is rejected with a witness") {
  FiniteRing R;
  R.name = "bad";
  R.n = 2;
  R.add = {{0, 1}, {1, 0}};
  R.mul = {{0, 1}, {1, 1}};  // 0*1 = 1 breaks the zero law
  R.zero = 0;
  R.one = 1;
  CHECK_THROWS_AS(ring_from_tables(std::move(R)), Error);
}

TEST_CASE("ideal enumeration matches the exhaustive subgroup sweep") {
  struct Row {
    const char* name;
    int right_count;
  };
  // frozen counts for the three rings quoted in the tool's documentation
  std::vector<Row> expected = {{"z4", 3}, {"z6", 4}, {"t2f2", 7}};

  for (const auto& R : oracles::corpus()) {
    CAPTURE(R->name);
    for (Side side : {Side::Right, Side::Left, Side::TwoSided}) {
      auto fast = enumerate_ideals(*R, side);
      auto slow = oracles::brute_ideals(R, side);
      CHECK(fast == slow);
    }
    for (const auto& row : expected)
      if (R->name == row.name)
        CHECK((int)enumerate_ideals(*R, Side::Right).size() == row.right_count);
  }
}

TEST_CASE("upper triangular 2x2 ideal inventory") {
  auto R = oracles::make_t2f2();
  auto right = enumerate_ideals(*R, Side::Right);
  auto two = enumerate_ideals(*R, Side::TwoSided);
  CHECK(right.size() == 7);
  CHECK(two.size() == 5);
  Subset L1 = {0, 1, 2, 3};  // span(e11, e12)
  Subset L2 = {0, 2, 4, 6};  // span(e12, e22)
  CHECK(subset_contains(two[0], R->zero));
  CHECK(std::count(two.begin(), two.end(), L1) == 1);
  CHECK(std::count(two.begin(), two.end(), L2) == 1);
  CHECK(is_ideal(*R, L1, Side::TwoSided));
  CHECK(is_ideal(*R, {0, 4}, Side::Right));   // span(e22) = e22 R
  CHECK(!is_ideal(*R, {0, 4}, Side::Left));   // e12 e22 = e12 escapes
  CHECK(!is_ideal(*R, {0, 1}, Side::Right));  // e11 e12 = e12 escapes

  CHECK(ideal_closure(*R, {2}, Side::Right) == Subset{0, 2});
  CHECK(ideal_closure(*R, {1}, Side::Right) == L1);
}

TEST_CASE("additive invariant factors") {
  CHECK(abelian_invariants(group_of(*oracles::make_zn(4, "z4"))) ==
        std::vector<int>{4});
  CHECK(abelian_invariants(group_of(*oracles::make_zn(6, "z6"))) ==
        std::vector<int>{6});
  CHECK(abelian_invariants(group_of(*oracles::make_z2xz2())) ==
        std::vector<int>{2, 2});
  CHECK(abelian_invariants(group_of(*oracles::make_t2f2())) ==
        std::vector<int>{2, 2, 2});
}

TEST_CASE("annihilators and cyclic pieces") {
  auto z6 = oracles::make_zn(6, "z6");
  auto M = ring_as_right_module(z6);
  CHECK(annihilator(3, M, Side::Right) == Subset{0, 2, 4});
  CHECK(annihilator(2, M, Side::Right) == Subset{0, 3});

  auto V = quotient_module(M, Subset{0, 3});
  CHECK(V.module.size == 3);
  CHECK(V.proj[3] == V.proj[0]);
  CHECK_NOTHROW(validate_module(V.module));

  auto S = submodule_as_module(M, Subset{0, 2, 4});
  CHECK(S.module.size == 3);
  CHECK(S.to_parent[S.module.zero] == 0);
}

TEST_CASE("hom sets match the exhaustive table sweep") {
  auto z6 = oracles::make_zn(6, "z6");
  auto M6 = ring_as_right_module(z6);
  auto A = submodule_as_module(M6, Subset{0, 2, 4}).module;
  auto B = quotient_module(M6, Subset{0, 3}).module;
  auto homs = hom_set(A, B);
  CHECK(homs.size() == 3);
  CHECK((long long)homs.size() == oracles::brute_hom_count(A, B));
  for (const auto& f : homs) CHECK(is_module_hom(A, B, f));

  auto t2 = oracles::make_t2f2();
  auto Mt = ring_as_right_module(t2);
  auto L2 = submodule_as_module(Mt, Subset{0, 2, 4, 6}).module;
  auto homs2 = hom_set(L2, Mt);
  CHECK(homs2.size() == 16);
  CHECK((long long)homs2.size() == oracles::brute_hom_count(L2, Mt));
}

TEST_CASE("derivation enumeration matches the exhaustive table sweep") {
  struct Row {
    RingPtr R;
    long long count;
  };
  std::vector<Row> rows = {{oracles::make_zn(4, "z4"), 1},
                           {oracles::make_zn(6, "z6"), 1},
                           {oracles::make_z2xz2(), 1},
                           {oracles::make_f4(), 1},
                           {oracles::make_dual(), 4},
                           {oracles::make_t2f2(), 4}};
  for (const auto& row : rows) {
    CAPTURE(row.R->name);
    auto ds = enumerate_derivations(*row.R);
    CHECK((long long)ds.size() == row.count);
    long long slow = oracles::brute_derivation_count(row.R);
    if (slow >= 0) CHECK(slow == row.count);
    for (const auto& d : ds) CHECK(is_ring_derivation(*row.R, d));
    CHECK(std::count(ds.begin(), ds.end(), zero_derivation(row.R->n)) == 1);
  }
}

TEST_CASE("inner derivations of the triangular ring") {
  auto R = oracles::make_t2f2();
  auto ds = enumerate_derivations(*R);
  std::set<Derivation> inner;
  for (int a = 0; a < R->n; ++a) inner.insert(inner_derivation(*R, a));
  CHECK(inner.size() == 4);  // center has index 4
  for (const auto& d : ds) CHECK(inner.count(d) == 1);

  Derivation ad_e11 = inner_derivation(*R, 1);
  CHECK(ad_e11.table == std::vector<int>{0, 0, 2, 2, 0, 0, 2, 2});
}

TEST_CASE("nilpotent-extension ring carries a non-inner derivation") {
  auto R = oracles::make_dual();
  Derivation eps{{0, 0, 1, 1}};  // formal derivative
  CHECK(is_ring_derivation(*R, eps));
  auto ds = enumerate_derivations(*R);
  CHECK(std::count(ds.begin(), ds.end(), eps) == 1);
  for (int a = 0; a < R->n; ++a)
    CHECK(inner_derivation(*R, a) == zero_derivation(4));  // commutative
}

TEST_CASE("isomorphism probes") {
  auto z6 = oracles::make_zn(6, "z6");
  auto iso = find_ring_isomorphism(*z6, *z6);
  REQUIRE(iso.has_value());
  CHECK(iso->table[z6->one] == z6->one);

  CHECK(!find_ring_isomorphism(*oracles::make_f4(), *oracles::make_zn(4, "z4"))
             .has_value());
  CHECK(!find_ring_isomorphism(*oracles::make_dual(), *oracles::make_f4())
             .has_value());

  auto t2 = oracles::make_t2f2();
  auto op = opposite_ring(t2);
  CHECK(find_ring_isomorphism(*t2, *op).has_value());  // transpose flip

  CHECK(ring_iso_hint(*z6) == std::optional<std::string>("Z/6"));
  CHECK(ring_iso_hint(*oracles::make_m2f2()) ==
        std::optional<std::string>("M2(F2)"));
  CHECK(ring_iso_hint(*t2) == std::optional<std::string>("T2(F2)"));
  CHECK(ring_iso_hint(*oracles::make_z2xz2()) ==
        std::optional<std::string>("F2 x F2"));
}

TEST_CASE("generator probes regenerate the module") {
  auto t2 = oracles::make_t2f2();
  auto M = ring_as_right_module(t2);
  CHECK(additive_generators(M).size() == 3);
  // greedy, so not guaranteed shortest, but it must generate
  auto gens = module_generators(M);
  Subset seeds(gens.begin(), gens.end());
  std::sort(seeds.begin(), seeds.end());
  CHECK(submodule_closure(M, seeds).size() == 8);

  auto z6 = oracles::make_zn(6, "z6");
  CHECK(module_generators(ring_as_right_module(z6)).size() == 1);
}
