#pragma once

#include "torsionlab/finring.hpp"

namespace torsionlab {

// A filter of one-sided ideals closed under the four Gabriel conditions:
//   (1) contains R and is upward closed,
//   (2) closed under pairwise intersection,
//   (3) closed under transporters (I : r),
//   (4) contains J whenever (J : i) lies in the filter for every i in some
//       member I.
struct GabrielFilter {
  RingPtr ring;
  Side side = Side::Right;
  std::vector<Subset> members;  // canonical order
  Subset min_ideal;             // intersection of all members
  std::string label;

  bool contains(const Subset& I) const;
};

struct AxiomCheck {
  bool ok = true;
  std::string axiom;
  std::string witness;
};

// (I : r) = {x : r x in I} for right ideals, {x : x r in I} for left ideals.
Subset ideal_transporter(const FiniteRing& R, Side side, const Subset& I,
                         int r);

AxiomCheck check_gabriel_filter(const RingPtr& R, Side side,
                                const std::vector<Subset>& members,
                                const std::vector<Subset>* all_ideals = nullptr);

GabrielFilter make_filter(const RingPtr& R, Side side,
                          std::vector<Subset> members, std::string label,
                          const std::vector<Subset>* all_ideals = nullptr);

// Least filter containing the seed ideals.
GabrielFilter filter_closure(const RingPtr& R, Side side,
                             std::vector<Subset> seeds,
                             std::string label = "closure");

// Every filter on R, smallest least-member first. Throws TooManyIdeals when
// the ideal count exceeds max_ideals (0 = no cap).
std::vector<GabrielFilter> enumerate_gabriel_filters(const RingPtr& R,
                                                     Side side,
                                                     int max_ideals = 0);

// {x : ann(x) in F}; checked to be a submodule and to agree with the
// least-member shortcut x . min = 0.
Subset torsion_submodule(const GabrielFilter& F, const FiniteModule& M);
bool is_torsion_free(const GabrielFilter& F, const FiniteModule& M);

// I is dense when for all x, y != 0 there is r with x r in I and y r != 0
// (mirrored on the left).
bool is_dense_ideal(const RingPtr& R, Side side, const Subset& I);

GabrielFilter lambek_filter(const RingPtr& R, Side side);
GabrielFilter goldie_filter(const RingPtr& R, Side side);

struct ClassicalFilterResult {
  GabrielFilter filter;
  Subset regular;  // elements cancellable on both sides
  bool ore = false;
  bool regular_are_units = false;
};
// Throws NotOre when the denominator condition fails.
ClassicalFilterResult classical_filter(const RingPtr& R, Side side);

GabrielFilter trivial_filter(const RingPtr& R, Side side);
GabrielFilter improper_filter(const RingPtr& R, Side side);
// Dispatch by name: lambek, goldie, classical, trivial, improper.
GabrielFilter named_filter(const RingPtr& R, Side side, const std::string& name);

bool is_faithful(const GabrielFilter& F);

struct DifferentialCheck {
  bool differential = false;
  bool by_definition = false;  // for each member, some member maps into it
  bool by_min_ideal = false;   // every derivation preserves the least member
  std::string witness;
};
// The two routes are equivalent; both are computed and compared.
DifferentialCheck is_differential(const GabrielFilter& F,
                                  const std::vector<Derivation>& derivs);

bool filter_subset(const GabrielFilter& F1, const GabrielFilter& F2);
GabrielFilter filter_join(const GabrielFilter& F1, const GabrielFilter& F2);

}  // namespace torsionlab
