#pragma once

#include "torsionlab/derivext.hpp"
#include "torsionlab/tensor.hpp"

namespace torsionlab {

// Ring-level data shared by every symmetric computation: the enveloping
// tensor ring (second slot opposite), R as a right module over it, and the
// cached ideal inventories.
struct SymmetricContext {
  RingPtr R;
  TensorRing T;
  FiniteModule R_as_T;               // R as right T-module, x.(u(x)v) = v x u
  std::vector<Subset> t_ideals;      // right ideals of T
  std::vector<Subset> left_ideals;   // left ideals of R
  std::vector<Subset> right_ideals;  // right ideals of R
};
using SymContextPtr = std::shared_ptr<const SymmetricContext>;
SymContextPtr make_symmetric_context(const RingPtr& R);

// span(J (x) R + R (x) I) inside the enveloping ring
Subset form_span(const SymmetricContext& ctx, const Subset& right_ideal_J,
                 const Subset& left_ideal_I);

// A pair (left filter, right filter) together with the filter it induces on
// the enveloping ring: the up-set of the span over the two least members.
struct SymmetricFilter {
  SymContextPtr ctx;
  GabrielFilter left;
  GabrielFilter right;
  GabrielFilter induced;  // right filter on the enveloping ring
  Subset least;           // least member of `induced`
  std::string label;
};

SymmetricFilter induce_symmetric_filter(const SymContextPtr& ctx,
                                        GabrielFilter left,
                                        GabrielFilter right);
// sym-lambek, sym-goldie, sym-classical, sym-trivial, sym-improper
SymmetricFilter named_symmetric_filter(const SymContextPtr& ctx,
                                       const std::string& name);
// all pairs of one-sided filters, left-major order
std::vector<SymmetricFilter> enumerate_symmetric_filters(const SymContextPtr& ctx,
                                                         int max_ideals = 0);

bool symmetric_filter_subset(const SymmetricFilter& a, const SymmetricFilter& b);

// both R-actions of a bimodule repackaged as one right action of the
// enveloping ring
FiniteModule as_tensor_module(const SymmetricFilter& SF,
                              const FiniteModule& bimodule);

// torsion elements of a bimodule, computed four equivalent ways and compared:
// killed by the least member; both one-sided annihilators in their filters;
// the span of the annihilators in the induced filter; the enveloping
// annihilator in the induced filter.
Subset symmetric_torsion(const SymmetricFilter& SF,
                         const FiniteModule& bimodule);
bool symmetric_faithful(const SymmetricFilter& SF);

struct SymmetricQuotient {
  SymmetricFilter sf;
  FiniteModule bimodule;          // validated input
  QuotientModule over_T;          // quotient at the induced filter
  FiniteModule carrier_bimodule;  // carrier with both R-actions restored
};
SymmetricQuotient symmetric_module_of_quotients(const SymmetricFilter& SF,
                                                const FiniteModule& bimodule);

// Ring structure on the symmetric quotient of R: carrier elements correspond
// to compatible pairs (left-linear map on the left least member, right-linear
// map on the right least member) and multiply by composing through lifts.
struct SymmetricQuotientRing {
  SymmetricQuotient module;
  RingPtr ring;
  std::vector<int> q;  // R -> carrier
  int pair_count = 0;
  std::optional<std::string> iso_hint;
};
SymmetricQuotientRing symmetric_ring_of_quotients(const SymmetricFilter& SF);

// delta (x) 1 + 1 (x) delta, validated as a derivation of the enveloping ring
Derivation enveloping_derivation(const SymmetricContext& ctx,
                                 const Derivation& delta);

// being a delta-derivation for both actions is the same as being an
// enveloping-delta-derivation for the packed action; both are computed
struct CorrespondenceCheck {
  bool as_tensor_module = false;
  bool as_bimodule = false;
};
CorrespondenceCheck derivation_correspondence(const SymmetricFilter& SF,
                                              const FiniteModule& bimodule,
                                              const Derivation& delta,
                                              const Derivation& d);

struct SymmetricDifferentialCheck {
  bool differential = false;
  bool by_least = false;        // enveloped derivations preserve the least member
  bool by_filter = false;       // quantifier form over induced members
  bool by_annihilator = true;   // torsion elements kill enveloped images
  bool by_torsion = true;       // bimodule derivations preserve torsion
  bool one_sided_sufficient = true;  // both sides differential forces this
};
SymmetricDifferentialCheck is_symmetric_differential(
    const SymmetricFilter& SF, const std::vector<Derivation>& derivs,
    const std::vector<FiniteModule>& bimodules);

struct SymmetricExtension {
  ExtensionResult ext;         // over the induced-filter quotient
  bool two_sided_law = false;  // both derivation laws on the carrier bimodule
};
SymmetricExtension extend_symmetric_derivation(const SymmetricQuotient& SQ,
                                               const Derivation& delta,
                                               const Derivation& d,
                                               ExtensionStrategy strategy);
struct SymmetricRingExtension {
  SymmetricExtension ext;
  bool leibniz = false;
};
SymmetricRingExtension extend_symmetric_ring_derivation(
    const SymmetricQuotientRing& SQR, const Derivation& delta,
    ExtensionStrategy strategy);

struct SymmetricAgreementReport {
  bool left_nested = false, right_nested = false;
  bool sf1_differential = false, sf2_differential = false;
  AgreementReport over_T;
};
SymmetricAgreementReport check_symmetric_agreement(
    const SymmetricFilter& SF1, const SymmetricFilter& SF2,
    const FiniteModule& bimodule, const Derivation& delta, const Derivation& d,
    const std::vector<Derivation>& ring_derivs);

// Perfectness of the symmetric localization: the canonical image must
// regenerate both filters ({I : S q(I) = S} and its right mirror), and the
// double scalar extension of every cyclic bimodule must match the quotient's
// group type.
struct SymmetricPerfectCheck {
  bool left_recovered = false;
  bool right_recovered = false;
  bool cyclic_types_match = true;
  bool perfect = false;
};
SymmetricPerfectCheck is_symmetric_perfect(const SymmetricFilter& SF);

// Symmetric quotient at the pair of dense-ideal filters, cross-checked
// elementwise against {x in the maximal right quotient : I x lands in the
// image of R for some left member}.
struct MaximalSymmetricCheck {
  SymmetricQuotientRing ring;
  int inside_count = 0;
  bool matches = false;
};
MaximalSymmetricCheck maximal_symmetric_quotient(const SymContextPtr& ctx);

// Join of all perfect faithful symmetric filters, with the verdict on the
// join itself. When the join fails its own check the constituents are the
// report; callers must treat perfect/faithful as findings, not guarantees.
struct SymmetricTotalResult {
  SymmetricFilter filter;                 // join of the constituents
  std::vector<std::string> constituents;  // labels of perfect faithful filters
  bool perfect = false;                   // verdict on the join
  bool faithful = false;
  SymmetricQuotientRing ring;
};
SymmetricTotalResult total_symmetric_filter(const SymContextPtr& ctx,
                                            int max_ideals = 0);

}  // namespace torsionlab
