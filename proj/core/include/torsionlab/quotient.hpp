#pragma once

#include <optional>

#include "torsionlab/gabriel.hpp"

namespace torsionlab {

// Carrier of the module of quotients at a filter: maps from the least member
// into the torsion-free quotient of the module, with the matching one-sided
// action installed. Element k of `carrier` is the map `elements[k]`.
struct QuotientModule {
  GabrielFilter filter;
  FiniteModule base;        // one-sided view of the input module
  Subset torsion;           // in base indices
  QuotientView mod_torsion; // base / torsion
  SubmoduleView least;      // the filter's least member as a module
  std::vector<ModuleMap> elements;  // least.module -> mod_torsion.module
  FiniteModule carrier;
  std::vector<int> q;       // base index -> carrier index
  Subset q_kernel;

  // least-member element i (parent index) of the class v in mod_torsion
  int lift(int v) const;
};

QuotientModule module_of_quotients(const GabrielFilter& F,
                                   const FiniteModule& M);

struct QuotientRing {
  QuotientModule module;
  RingPtr ring;             // multiplication on the carrier
  std::vector<int> q;       // ring map R -> carrier
  std::optional<std::string> iso_hint;
};

QuotientRing ring_of_quotients(const GabrielFilter& F);

// Action of the quotient ring on a quotient module over the same filter;
// validated against the module laws and against the plain R-action through q.
std::vector<std::vector<int>> quotient_ring_action(const QuotientModule& QM,
                                                   const QuotientRing& QR);

// Map induced on quotient carriers by an R-linear map h between the bases.
ModuleMap quotient_functor_map(const QuotientModule& QM,
                               const QuotientModule& QN, const ModuleMap& h);

// Carrier-level map when one filter refines another: restrict to the smaller
// least member and project further. Throws NotNested unless F1 <= F2.
struct ConnectingMap {
  std::vector<int> table;  // carrier of QM1 -> carrier of QM2
};
ConnectingMap connecting_map(const QuotientModule& QM1,
                             const QuotientModule& QM2);

// Quotients at a larger filter absorb quotients at a smaller one: the second
// quotient of the first carrier is isomorphic to the direct second quotient,
// compatibly with the canonical maps. Verified by explicit search.
struct IteratedQuotientCheck {
  int iterated_size = 0;
  std::vector<int> theta;  // iterated carrier -> direct carrier
  bool verified = false;
};
IteratedQuotientCheck check_iterated_quotient(const QuotientModule& QM1,
                                              const QuotientModule& QM2);

// Two equivalent perfectness tests, both computed, compared, and returned.
struct PerfectCheck {
  bool perfect = false;
  bool multiplication_bijective = false;  // Q (x)_R Q -> Q
  bool ideals_embed = false;              // I (x)_R Q -> Q injective, all I
  bool cyclic_quotients_match = false;    // (R/I) (x)_R Q -> (R/I)_F bijective
};
PerfectCheck is_perfect_filter(const GabrielFilter& F);

// Join of all perfect faithful filters, with the verdict on the join itself.
struct TotalFilterResult {
  GabrielFilter join;
  std::vector<std::string> constituents;  // labels of perfect faithful filters
  bool join_perfect = false;
  bool join_faithful = false;
};
TotalFilterResult total_filter(const RingPtr& R, Side side, int max_ideals = 0);

}  // namespace torsionlab
