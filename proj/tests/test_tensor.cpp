#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "torsionlab/tensor.hpp"

using namespace torsionlab;

static long long group_order(const TensorGroup& T) { return T.group.size; }

TEST_CASE("smith form on fixed matrices") {
  auto S = smith_normal_form({{2, 0}, {0, 3}});
  CHECK(S.diag == std::vector<long long>{1, 6});

  auto S2 = smith_normal_form({{2, 4}, {6, 8}});
  CHECK(S2.diag == std::vector<long long>{2, 4});

  auto S3 = smith_normal_form({{0, 0}, {0, 0}});
  CHECK(S3.diag == std::vector<long long>{0, 0});

  // divisibility chain on a denser matrix
  auto S4 = smith_normal_form({{6, 4, 2}, {4, 6, 2}, {2, 2, 4}});
  for (size_t i = 0; i + 1 < S4.diag.size(); ++i)
    if (S4.diag[i] != 0 && S4.diag[i + 1] != 0)
      CHECK(S4.diag[i + 1] % S4.diag[i] == 0);
}

TEST_CASE("integer tensor squares") {
  auto t2 = oracles::make_t2f2();
  auto G = group_of(*t2);
  auto T = tensor_over_Z(G, G);
  CHECK(group_order(T) == 512);  // (Z/2)^3 (x) (Z/2)^3 = (Z/2)^9

  auto z6 = group_of(*oracles::make_zn(6, "z6"));
  auto T6 = tensor_over_Z(z6, z6);
  CHECK(abelian_invariants(T6.group) == std::vector<int>{6});

  auto z4 = group_of(*oracles::make_zn(4, "z4"));
  auto z3 = group_of(*oracles::make_zn(3, "z3"));
  auto T0 = tensor_over_Z(z4, z3);
  CHECK(group_order(T0) == 1);  // coprime orders cancel
}

TEST_CASE("pure tensors are biadditive") {
  auto z6 = group_of(*oracles::make_zn(6, "z6"));
  auto T = tensor_over_Z(z6, z6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c) {
        CHECK(T.pure_of(z6.a(a, c), b) ==
              T.group.a(T.pure_of(a, b), T.pure_of(c, b)));
        CHECK(T.pure_of(a, z6.a(b, c)) ==
              T.group.a(T.pure_of(a, b), T.pure_of(a, c)));
      }
}

TEST_CASE("balanced tensor collapses the scalar across the ring") {
  auto z6 = oracles::make_zn(6, "z6");
  auto Mr = one_sided_ring_module(z6, Side::Right);
  auto Ml = one_sided_ring_module(z6, Side::Left);
  auto T = tensor_over_R(Mr, Ml);
  CHECK(group_order(T) == 6);  // R (x)_R R = R

  // R (x)_R (R/I) = R/I
  auto V = quotient_module(ring_as_right_module(z6), Subset{0, 3});
  FiniteModule C = V.module;
  C.ring = nullptr;
  C.act_right.clear();
  C.left_ring = z6;
  C.act_left.assign(z6->n, std::vector<int>(C.size));
  for (int r = 0; r < z6->n; ++r)
    for (int x = 0; x < C.size; ++x)
      C.act_left[r][x] = V.proj[z6->m(r, V.rep[x])];
  validate_module(C);
  auto T2 = tensor_over_R(Mr, C);
  CHECK(group_order(T2) == 3);
}

TEST_CASE("additive extension rejects maps that break the relations") {
  auto z2 = group_of(*oracles::make_zn(2, "z2"));
  auto T = tensor_over_Z(z2, z2);
  REQUIRE(group_order(T) == 2);

  // legitimate: multiply through
  auto ok = extend_additive(T, z2, [&](int a, int b) { return a & b; },
                            "mult map");
  CHECK((int)ok.size() == T.group.size);

  // constant 1 is not biadditive, so no additive map agrees with it
  CHECK_THROWS_AS(
      extend_additive(T, z2, [&](int, int) { return 1; }, "constant"), Error);
}

TEST_CASE("enveloping ring multiplies first slots forward, second slots backward") {
  auto t2 = oracles::make_t2f2();
  auto TR = tensor_ring(t2, t2);
  CHECK(TR.ring->n == 512);
  CHECK_NOTHROW(validate_ring(*TR.ring));

  const auto& D = TR.data;
  auto mul = [&](int x, int y) { return TR.ring->mul[x][y]; };
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v)
      for (int u2 = 0; u2 < 8; ++u2)
        for (int v2 = 0; v2 < 8; ++v2)
          CHECK(mul(D.pure_of(u, v), D.pure_of(u2, v2)) ==
                D.pure_of(t2->m(u, u2), t2->m(v2, v)));
}

TEST_CASE("bimodule repacks as a module over the enveloping ring") {
  auto z6 = oracles::make_zn(6, "z6");
  auto TR = tensor_ring(z6, z6);
  auto M = bimodule_as_tensor_module(ring_as_bimodule(z6), TR);
  CHECK_NOTHROW(validate_module(M));
  CHECK(M.size == 6);
  // x . (u (x) v) = v x u
  for (int x = 0; x < 6; ++x)
    for (int u = 0; u < 6; ++u)
      for (int v = 0; v < 6; ++v)
        CHECK(M.ar(x, TR.data.pure_of(u, v)) == z6->m(z6->m(v, x), u));
}

TEST_CASE("element orders divide the group exponent") {
  auto z6 = group_of(*oracles::make_zn(6, "z6"));
  CHECK(element_order(z6, 0) == 1);
  CHECK(element_order(z6, 1) == 6);
  CHECK(element_order(z6, 2) == 3);
  CHECK(element_order(z6, 3) == 2);
}
