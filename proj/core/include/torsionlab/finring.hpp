#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "torsionlab/errors.hpp"

namespace torsionlab {

// Elements of every finite structure are dense indices 0..n-1 and all
// structure is explicit tables. Every enumeration returns a canonical order
// (size, then lexicographic) so repeated runs emit identical bytes.

using Subset = std::vector<int>;  // strictly increasing element indices

enum class Side { Right, Left, TwoSided };
const char* side_name(Side s);

struct FiniteRing {
  std::string name;
  int n = 0;
  std::vector<std::vector<int>> add;  // n x n
  std::vector<std::vector<int>> mul;  // n x n
  int zero = 0;
  int one = 0;
  std::vector<std::string> elements;  // display names, always size n
  std::vector<int> neg;               // additive inverse, derived

  int a(int x, int y) const { return add[x][y]; }
  int m(int x, int y) const { return mul[x][y]; }
  int sub(int x, int y) const { return add[x][neg[y]]; }
};

using RingPtr = std::shared_ptr<const FiniteRing>;

// A finite abelian group with an optional right action of `ring` and an
// optional left action of `left_ring`. Bare groups (both null) are legal and
// are what the tensor engine produces before actions are installed.
struct FiniteModule {
  std::string name;
  int size = 0;
  std::vector<std::vector<int>> add;  // size x size
  int zero = 0;
  std::vector<int> neg;

  RingPtr ring;                             // right-acting ring
  std::vector<std::vector<int>> act_right;  // size x ring->n

  RingPtr left_ring;                       // left-acting ring
  std::vector<std::vector<int>> act_left;  // left_ring->n x size

  bool has_right() const { return ring != nullptr; }
  bool has_left() const { return left_ring != nullptr; }
  int a(int x, int y) const { return add[x][y]; }
  int ar(int x, int r) const { return act_right[x][r]; }
  int al(int r, int x) const { return act_left[r][x]; }
  int sub(int x, int y) const { return add[x][neg[y]]; }
};

// Maps are tables over the domain; domain/codomain travel separately.
struct ModuleMap {
  std::vector<int> table;
  bool operator==(const ModuleMap&) const = default;
  auto operator<=>(const ModuleMap&) const = default;
};
struct RingMap {
  std::vector<int> table;
  bool operator==(const RingMap&) const = default;
};
struct Derivation {
  std::vector<int> table;
  bool operator==(const Derivation&) const = default;
  auto operator<=>(const Derivation&) const = default;
};

// ---- construction and validation -------------------------------------------

// Validates every ring law on the full tables; throws AxiomViolation with the
// witness triple on the first failure.
void validate_ring(const FiniteRing& R);
RingPtr ring_from_tables(FiniteRing R);
RingPtr opposite_ring(const RingPtr& R);

void validate_module(const FiniteModule& M);

FiniteModule ring_as_right_module(const RingPtr& R);
FiniteModule ring_as_bimodule(const RingPtr& R);
FiniteModule group_of(const FiniteRing& R);  // additive group only
// R acting on itself from the requested side only.
FiniteModule one_sided_ring_module(const RingPtr& R, Side side);

// ---- subsets ---------------------------------------------------------------

bool subset_contains(const Subset& s, int x);
Subset subset_intersect(const Subset& a, const Subset& b);
bool subset_includes(const Subset& big, const Subset& small);
// {a+b : a in A, b in B} inside the group of M.
Subset subset_sum(const FiniteModule& M, const Subset& a, const Subset& b);

bool is_subgroup(const FiniteModule& M, const Subset& s);
bool is_submodule(const FiniteModule& M, const Subset& s);  // all present actions
bool is_ideal(const FiniteRing& R, const Subset& s, Side side);

Subset subgroup_closure(const FiniteModule& M, Subset seeds);
Subset submodule_closure(const FiniteModule& M, Subset seeds);
Subset ideal_closure(const FiniteRing& R, Subset seeds, Side side);

// ---- derived modules -------------------------------------------------------

struct SubmoduleView {
  FiniteModule module;        // reindexed carrier
  std::vector<int> to_parent; // sub index -> parent index
  std::vector<int> from_parent;  // parent index -> sub index or -1
};
SubmoduleView submodule_as_module(const FiniteModule& M, const Subset& s);

struct QuotientView {
  FiniteModule module;      // cosets, represented by least members
  std::vector<int> proj;    // parent index -> coset index
  std::vector<int> rep;     // coset index -> least parent representative
};
QuotientView quotient_module(const FiniteModule& M, const Subset& s);

// ---- enumerations ----------------------------------------------------------

// All submodules (closed under every present action), via join-closure of the
// cyclic ones. Canonical order.
std::vector<Subset> enumerate_submodules(const FiniteModule& M);
// Submodules of M containing s, computed through M/s.
std::vector<Subset> enumerate_submodules_over(const FiniteModule& M, const Subset& s);

std::vector<Subset> enumerate_ideals(const FiniteRing& R, Side side);

Subset annihilator(int x, const FiniteModule& M, Side side);
// {t in T : x.t = 0} for a right module; the whole-ring annihilator of x.
Subset annihilator_right(int x, const FiniteModule& M);

// Minimal additive generating sequence, greedy over element order.
std::vector<int> additive_generators(const FiniteModule& M);
// Minimal module generating sequence (closure under all present actions).
std::vector<int> module_generators(const FiniteModule& M);

// All homomorphisms A -> B equivariant for every action present on both
// sides (rings must agree structurally). Canonical order.
std::vector<ModuleMap> hom_set(const FiniteModule& A, const FiniteModule& B);
bool is_module_hom(const FiniteModule& A, const FiniteModule& B, const ModuleMap& f);

// ---- derivations -----------------------------------------------------------

bool is_ring_derivation(const FiniteRing& R, const Derivation& d,
                        std::string* witness = nullptr);
// d(x r) = d(x) r + x delta(r); bimodules additionally d(r x) = delta(r) x + r d(x).
bool is_module_derivation(const FiniteModule& M, const Derivation& delta,
                          const Derivation& d, std::string* witness = nullptr);

std::vector<Derivation> enumerate_derivations(const FiniteRing& R);
// `pins` force images of specific elements; `budget` caps visited search
// nodes (0 = unlimited), overrun throws SearchSpaceTooLarge.
std::vector<Derivation> enumerate_module_derivations(
    const FiniteModule& M, const Derivation& delta,
    const std::vector<std::pair<int, int>>& pins = {}, long long budget = 0);
Derivation inner_derivation(const FiniteRing& R, int a);  // x -> ax - xa
Derivation zero_derivation(int n, int zero_index = 0);

// ---- structure probes ------------------------------------------------------

// Invariant factors d_1 | d_2 | ... of the additive group, via order counting.
std::vector<int> abelian_invariants(const FiniteModule& M);

// Unital ring isomorphism A -> B by backtracking over additive generators.
// `pin` entries force images of specific elements.
std::optional<RingMap> find_ring_isomorphism(
    const FiniteRing& A, const FiniteRing& B,
    const std::vector<std::pair<int, int>>& pin = {});
// Injective unital ring map A -> B.
std::optional<RingMap> find_ring_embedding(
    const FiniteRing& A, const FiniteRing& B,
    const std::vector<std::pair<int, int>>& pin = {});

// Name of a well-known ring isomorphic to R ("Z/6", "M2(F2)", ...), if any.
std::optional<std::string> ring_iso_hint(const FiniteRing& R);

bool same_ring(const RingPtr& a, const RingPtr& b);

// ---- canonical ordering ----------------------------------------------------

bool subset_less(const Subset& a, const Subset& b);  // size, then lex
void sort_subsets(std::vector<Subset>& v);

}  // namespace torsionlab
