#include "torsionlab/derivext.hpp"

#include <algorithm>

namespace torsionlab {

Derivation induced_derivation(const FiniteModule& M, const QuotientView& V,
                              const Subset& N, const Derivation& d) {
  ensure((int)d.table.size() == M.size, ErrorKind::MalformedSpec,
         "derivation table size mismatch");
  for (int t : N)
    if (!subset_contains(N, d.table[t]))
      fail(ErrorKind::TorsionNotPreserved,
           "derivation moves " + std::to_string(t) + " out of the submodule");
  Derivation out;
  out.table.resize(V.module.size);
  for (int v = 0; v < V.module.size; ++v)
    out.table[v] = V.proj[d.table[V.rep[v]]];
  // well-defined on classes
  for (int x = 0; x < M.size; ++x)
    ensure(V.proj[d.table[x]] == out.table[V.proj[x]],
           ErrorKind::InternalInconsistency,
           "induced derivation depends on representatives");
  return out;
}

std::vector<Derivation> enumerate_extensions(const QuotientModule& QM,
                                             const Derivation& delta,
                                             const Derivation& d,
                                             long long budget) {
  std::string why;
  ensure(is_ring_derivation(*QM.filter.ring, delta), ErrorKind::LawViolation,
         "delta is not a ring derivation");
  ensure(is_module_derivation(QM.base, delta, d, &why),
         ErrorKind::LawViolation, "d is not a delta-derivation: " + why);
  std::vector<std::pair<int, int>> pins;
  pins.reserve(QM.base.size);
  for (int m = 0; m < QM.base.size; ++m)
    pins.emplace_back(QM.q[m], QM.q[d.table[m]]);
  return enumerate_module_derivations(QM.carrier, delta, pins, budget);
}

namespace {

Derivation formula_extension(const QuotientModule& QM, const Derivation& delta,
                             const Derivation& d) {
  const Subset& least = QM.filter.min_ideal;
  for (int i : least)
    if (!subset_contains(least, delta.table[i]))
      fail(ErrorKind::FormulaInapplicable,
           "delta moves the least member off itself at " + std::to_string(i));
  for (int t : QM.torsion)
    if (!subset_contains(QM.torsion, d.table[t]))
      fail(ErrorKind::TorsionNotPreserved,
           "d moves torsion off the torsion submodule at " + std::to_string(t));
  QuotientView V = QM.mod_torsion;
  Derivation dbar = induced_derivation(QM.base, V, QM.torsion, d);
  const FiniteModule& MT = V.module;
  int k = (int)QM.least.to_parent.size();
  Derivation out;
  out.table.resize(QM.carrier.size);
  std::vector<int> tmp(k);
  for (int f = 0; f < QM.carrier.size; ++f) {
    for (int x = 0; x < k; ++x) {
      int fi = QM.elements[f].table[x];
      int dx = delta.table[QM.least.to_parent[x]];
      int fdx = QM.elements[f].table[QM.least.from_parent[dx]];
      tmp[x] = MT.add[dbar.table[fi]][MT.neg[fdx]];
    }
    ModuleMap probe{tmp};
    auto it = std::lower_bound(QM.elements.begin(), QM.elements.end(), probe);
    ensure(it != QM.elements.end() && it->table == tmp,
           ErrorKind::InternalInconsistency,
           "formula extension left the carrier");
    out.table[f] = (int)(it - QM.elements.begin());
  }
  return out;
}

bool extension_commutes(const QuotientModule& QM, const Derivation& d,
                        const Derivation& ext) {
  for (int m = 0; m < QM.base.size; ++m)
    if (ext.table[QM.q[m]] != QM.q[d.table[m]]) return false;
  return true;
}

}  // namespace

ExtensionResult extend_derivation(const QuotientModule& QM,
                                  const Derivation& delta, const Derivation& d,
                                  ExtensionStrategy strategy,
                                  long long budget) {
  ExtensionResult res;
  std::vector<Derivation> all;
  bool enumerated = false;
  if (strategy != ExtensionStrategy::Formula) {
    all = enumerate_extensions(QM, delta, d, budget);
    enumerated = true;
  }
  if (strategy == ExtensionStrategy::Formula ||
      strategy == ExtensionStrategy::Auto) {
    try {
      res.extension = formula_extension(QM, delta, d);
      res.found = true;
      res.method = "formula";
    } catch (const Error& e) {
      if (strategy == ExtensionStrategy::Formula) throw;
      if (e.kind() != ErrorKind::FormulaInapplicable &&
          e.kind() != ErrorKind::TorsionNotPreserved)
        throw;
    }
  }
  if (!res.found && strategy != ExtensionStrategy::Formula && !all.empty()) {
    res.extension = all.front();
    res.found = true;
    res.method = "search";
  }
  if (!enumerated) {
    // formula-only callers still get the census when it is affordable
    try {
      all = enumerate_extensions(QM, delta, d, budget);
      enumerated = true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SearchSpaceTooLarge) throw;
    }
  }
  if (enumerated) {
    res.count = (int)all.size();
    res.unique = all.size() == 1;
    if (res.found) {
      bool present = std::find(all.begin(), all.end(), res.extension) != all.end();
      ensure(present, ErrorKind::InternalInconsistency,
             "formula extension missing from the enumerated extensions");
    }
  }
  if (res.found) {
    res.commutes = extension_commutes(QM, d, res.extension);
    ensure(res.commutes, ErrorKind::InternalInconsistency,
           "extension does not restrict to d through the canonical map");
    std::string why;
    res.law_ok = is_module_derivation(QM.carrier, delta, res.extension, &why);
    ensure(res.law_ok, ErrorKind::LawViolation,
           "extension breaks the derivation law: " + why);
  }
  return res;
}

RingExtensionResult extend_ring_derivation(const QuotientRing& QR,
                                           const Derivation& delta,
                                           ExtensionStrategy strategy) {
  RingExtensionResult res;
  res.ext = extend_derivation(QR.module, delta, delta, strategy);
  if (res.ext.found) {
    res.leibniz = is_ring_derivation(*QR.ring, res.ext.extension);
    ensure(res.leibniz, ErrorKind::LawViolation,
           "extended derivation breaks the product rule on the quotient ring");
  }
  return res;
}

AgreementReport check_agreement(const QuotientModule& QM1,
                                const QuotientModule& QM2,
                                const Derivation& delta, const Derivation& d,
                                const std::vector<Derivation>& ring_derivs) {
  AgreementReport rep;
  rep.f1_differential = is_differential(QM1.filter, ring_derivs).differential;
  rep.f2_differential = is_differential(QM2.filter, ring_derivs).differential;
  auto preserves = [&](const Subset& T) {
    for (int t : T)
      if (!subset_contains(T, d.table[t])) return false;
    return true;
  };
  rep.torsion1_preserved = preserves(QM1.torsion);
  rep.torsion2_preserved = preserves(QM2.torsion);

  ExtensionResult e1 = extend_derivation(QM1, delta, d, ExtensionStrategy::Auto);
  ExtensionResult e2 = extend_derivation(QM2, delta, d, ExtensionStrategy::Auto);
  rep.ext1_found = e1.found;
  rep.ext2_found = e2.found;
  if (!e1.found || !e2.found) return rep;

  ConnectingMap c12 = connecting_map(QM1, QM2);
  rep.connecting_commutes = true;
  for (int f = 0; f < QM1.carrier.size; ++f)
    if (c12.table[e1.extension.table[f]] !=
        e2.extension.table[c12.table[f]]) {
      rep.connecting_commutes = false;
      break;
    }

  // iterated route: extend the first extension through the second filter,
  // then compare across the comparison isomorphism
  QuotientModule QA = module_of_quotients(QM2.filter, QM1.carrier);
  ExtensionResult e12 =
      extend_derivation(QA, delta, e1.extension, ExtensionStrategy::Auto);
  if (e12.found) {
    IteratedQuotientCheck cmp = check_iterated_quotient(QM1, QM2);
    rep.iterated_commutes = true;
    for (int g = 0; g < QA.carrier.size; ++g)
      if (cmp.theta[e12.extension.table[g]] !=
          e2.extension.table[cmp.theta[g]]) {
        rep.iterated_commutes = false;
        break;
      }
  }
  rep.all_agree = rep.connecting_commutes && rep.iterated_commutes;
  return rep;
}

}  // namespace torsionlab
