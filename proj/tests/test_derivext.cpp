#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "torsionlab/derivext.hpp"

using namespace torsionlab;

TEST_CASE("derivations descend to stable quotients") {
  auto z6 = oracles::make_zn(6, "z6");
  auto M = ring_as_right_module(z6);
  auto V = quotient_module(M, Subset{0, 3});
  auto ind = induced_derivation(M, V, Subset{0, 3}, zero_derivation(6));
  CHECK(ind.table == std::vector<int>(3, V.module.zero));
}

TEST_CASE("extension through the identity localization reproduces the input") {
  auto dual = oracles::make_dual();
  Derivation eps{{0, 0, 1, 1}};
  auto QR = ring_of_quotients(trivial_filter(dual, Side::Right));
  auto E = extend_ring_derivation(QR, eps, ExtensionStrategy::Auto);
  CHECK(E.ext.found);
  CHECK(E.ext.commutes);
  CHECK(E.ext.law_ok);
  CHECK(E.leibniz);
  CHECK(E.ext.count == 1);
  CHECK(E.ext.unique);
  // carrier is R itself up to the canonical bijection
  for (int x = 0; x < 4; ++x)
    CHECK(E.ext.extension.table[QR.q[x]] == QR.q[eps.table[x]]);

  auto ES = extend_derivation(QR.module, eps, eps, ExtensionStrategy::Search);
  CHECK(ES.found);
  CHECK(ES.extension == E.ext.extension);
  CHECK(ES.method == "search");
}

TEST_CASE("inner derivation extends to the matrix localization as the same bracket") {
  auto t2 = oracles::make_t2f2();
  Derivation ad = inner_derivation(*t2, 1);  // bracket with e11
  auto QR = ring_of_quotients(lambek_filter(t2, Side::Right));
  auto E = extend_ring_derivation(QR, ad, ExtensionStrategy::Auto);
  REQUIRE(E.ext.found);
  CHECK(E.leibniz);
  CHECK(E.ext.count == 1);

  // transport to the reference matrix ring and compare with the bracket there
  auto m2 = oracles::make_m2f2();
  auto theta = find_ring_isomorphism(*QR.ring, *m2);
  REQUIRE(theta.has_value());
  Derivation target = inner_derivation(*m2, theta->table[QR.q[1]]);
  for (int x = 0; x < QR.ring->n; ++x)
    CHECK(theta->table[E.ext.extension.table[x]] ==
          target.table[theta->table[x]]);
}

TEST_CASE("extension count stays one on torsion-free localizations") {
  auto z6 = oracles::make_zn(6, "z6");
  auto F = filter_closure(z6, Side::Right, {{0, 2, 4}});
  auto QM = module_of_quotients(F, ring_as_right_module(z6));
  auto E = extend_derivation(QM, zero_derivation(6), zero_derivation(6),
                             ExtensionStrategy::Auto);
  CHECK(E.found);
  CHECK(E.count == 1);
  CHECK(E.unique);
  CHECK(E.extension.table == std::vector<int>(3, QM.carrier.zero));
}

TEST_CASE("search budget overruns are reported, not silently truncated") {
  auto t2 = oracles::make_t2f2();
  auto M = ring_as_right_module(t2);
  CHECK_THROWS_AS(
      enumerate_module_derivations(M, zero_derivation(8), {}, 1), Error);
}

TEST_CASE("corrupted extension tables are caught by the validators") {
  auto dual = oracles::make_dual();
  Derivation eps{{0, 0, 1, 1}};
  auto QR = ring_of_quotients(trivial_filter(dual, Side::Right));
  auto E = extend_ring_derivation(QR, eps, ExtensionStrategy::Auto);
  REQUIRE(E.ext.found);

  Derivation bad = E.ext.extension;
  bad.table[QR.q[0]] = QR.q[1];  // nonzero image of zero
  bool law = is_module_derivation(QR.module.carrier, eps, bad);
  bool commutes = true;
  for (int x = 0; x < 4; ++x)
    if (bad.table[QR.q[x]] != QR.q[eps.table[x]]) commutes = false;
  CHECK(!(law && commutes));
}

TEST_CASE("nested localizations agree on the smaller one") {
  auto z6 = oracles::make_zn(6, "z6");
  auto derivs6 = enumerate_derivations(*z6);
  auto M6 = ring_as_right_module(z6);
  auto QM1 = module_of_quotients(trivial_filter(z6, Side::Right), M6);
  auto QM2 =
      module_of_quotients(filter_closure(z6, Side::Right, {{0, 2, 4}}), M6);
  auto rep = check_agreement(QM1, QM2, zero_derivation(6), zero_derivation(6),
                             derivs6);
  CHECK(rep.f1_differential);
  CHECK(rep.f2_differential);
  CHECK(rep.ext1_found);
  CHECK(rep.ext2_found);
  CHECK(rep.connecting_commutes);
  CHECK(rep.iterated_commutes);
  CHECK(rep.all_agree);

  auto dual = oracles::make_dual();
  Derivation eps{{0, 0, 1, 1}};
  auto derivsd = enumerate_derivations(*dual);
  auto Md = ring_as_right_module(dual);
  auto QD1 = module_of_quotients(trivial_filter(dual, Side::Right), Md);
  auto QD2 = module_of_quotients(improper_filter(dual, Side::Right), Md);
  auto repd = check_agreement(QD1, QD2, eps, eps, derivsd);
  CHECK(repd.all_agree);

  auto t2 = oracles::make_t2f2();
  Derivation ad = inner_derivation(*t2, 1);
  auto derivst = enumerate_derivations(*t2);
  auto Mt = ring_as_right_module(t2);
  auto QT1 = module_of_quotients(trivial_filter(t2, Side::Right), Mt);
  auto QT2 = module_of_quotients(lambek_filter(t2, Side::Right), Mt);
  auto rept = check_agreement(QT1, QT2, ad, ad, derivst);
  CHECK(rept.all_agree);
}

TEST_CASE("every derivation extends through every filter on the small commutative rings") {
  for (const auto& R :
       {oracles::make_dual(), oracles::make_zn(6, "z6"), oracles::make_f4()}) {
    CAPTURE(R->name);
    auto derivs = enumerate_derivations(*R);
    for (const auto& F : enumerate_gabriel_filters(R, Side::Right)) {
      CHECK(is_differential(F, derivs).differential);
      auto QR = ring_of_quotients(F);
      for (const auto& d : derivs) {
        auto E = extend_ring_derivation(QR, d, ExtensionStrategy::Auto);
        CHECK(E.ext.found);
        CHECK(E.ext.count == 1);
        CHECK(E.leibniz);
      }
    }
  }
}
