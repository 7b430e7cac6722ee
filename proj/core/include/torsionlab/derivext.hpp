#pragma once

#include "torsionlab/quotient.hpp"

namespace torsionlab {

enum class ExtensionStrategy { Formula, Search, Auto };

// Derivation induced on M/N when d maps N into N.
Derivation induced_derivation(const FiniteModule& M, const QuotientView& V,
                              const Subset& N, const Derivation& d);

struct ExtensionResult {
  bool found = false;
  std::string method;    // "formula" or "search"
  Derivation extension;  // on the quotient carrier
  int count = -1;        // extensions found by enumeration, -1 if skipped
  bool unique = false;
  bool commutes = false;  // extension q = q d
  bool law_ok = false;    // delta-derivation law on the carrier
};

// Carrier derivations that extend d through the canonical map.
std::vector<Derivation> enumerate_extensions(const QuotientModule& QM,
                                             const Derivation& delta,
                                             const Derivation& d,
                                             long long budget = 1 << 22);

// The formula route evaluates f -> (x -> d(f(x)) - f(delta(x))) and needs
// delta to preserve the least member and d to preserve torsion; the search
// route enumerates all extensions. Auto tries the formula first.
ExtensionResult extend_derivation(const QuotientModule& QM,
                                  const Derivation& delta, const Derivation& d,
                                  ExtensionStrategy strategy,
                                  long long budget = 1 << 22);

struct RingExtensionResult {
  ExtensionResult ext;
  bool leibniz = false;  // the extension is a ring derivation on the carrier
};
RingExtensionResult extend_ring_derivation(const QuotientRing& QR,
                                           const Derivation& delta,
                                           ExtensionStrategy strategy);

// How extensions interact along nested filters F1 <= F2 on the same module.
struct AgreementReport {
  bool f1_differential = false;
  bool f2_differential = false;
  bool torsion1_preserved = false;
  bool torsion2_preserved = false;
  bool ext1_found = false, ext2_found = false;
  bool connecting_commutes = false;  // c12 ext1 = ext2 c12
  bool iterated_commutes = false;    // comparison iso carries the iterated
                                     // extension to the direct one
  bool all_agree = false;
};
AgreementReport check_agreement(const QuotientModule& QM1,
                                const QuotientModule& QM2,
                                const Derivation& delta, const Derivation& d,
                                const std::vector<Derivation>& ring_derivs);

}  // namespace torsionlab
