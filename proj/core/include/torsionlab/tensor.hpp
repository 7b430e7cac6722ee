#pragma once

#include <functional>

#include "torsionlab/finring.hpp"

namespace torsionlab {

using Mat = std::vector<std::vector<long long>>;

// U * A * V = D with U, V unimodular; diag holds the full diagonal of D.
struct SmithForm {
  Mat U, V, Vinv;
  std::vector<long long> diag;
};
SmithForm smith_normal_form(Mat A);

// A finite abelian group presented as generators and a relation lattice.
// expr[x] writes element x as an integer combination of the generators.
struct GroupPresentation {
  std::vector<int> gens;
  std::vector<std::vector<long long>> expr;
  Mat rels;  // triangular basis of the relation lattice
};
GroupPresentation present_group(const FiniteModule& G);

// Tensor product of finite abelian groups, with enough bookkeeping to extend
// pure-tensor assignments additively and to locate every pure tensor.
struct TensorGroup {
  FiniteModule group;            // elements are coordinate tuples
  std::vector<long long> dims;   // cyclic order of each coordinate, > 1
  int nA = 0, nB = 0;
  std::vector<std::vector<int>> pure;       // nA x nB -> group index
  std::vector<int> gen_a, gen_b;            // generator element indices
  std::vector<std::vector<long long>> basis_pre;  // coord -> coeffs over
                                                  // generator pairs (i*q+j)
  std::vector<std::vector<int>> coords;     // group index -> tuple

  int pure_of(int a, int b) const { return pure[a][b]; }
};

TensorGroup tensor_over_Z(const FiniteModule& A, const FiniteModule& B);
// M right module, N left module over the same ring; adds balance relations
// (m.r) x n = m x (r.n).
TensorGroup tensor_over_R(const FiniteModule& M, const FiniteModule& N);

// The unique additive map on the tensor group agreeing with `on_pure` on all
// pure tensors, as a table into C. Throws IllDefined when no such map exists,
// i.e. the assignment does not respect the relations.
std::vector<int> extend_additive(const TensorGroup& T, const FiniteModule& C,
                                 const std::function<int(int, int)>& on_pure,
                                 const std::string& what);

// S (x) R with the second slot multiplying opposite:
// (u (x) v)(u' (x) v') = uu' (x) v'v.
struct TensorRing {
  RingPtr ring;
  TensorGroup data;
  RingPtr S, R;
};
TensorRing tensor_ring(const RingPtr& S, const RingPtr& R);

// Right module over tensor_ring(S, R) from an (S, R)-bimodule where S acts on
// the right and R on the left: x . (u (x) v) = v x u.
FiniteModule bimodule_as_tensor_module(const FiniteModule& M,
                                       const TensorRing& T);

int element_order(const FiniteModule& M, int x);

}  // namespace torsionlab
