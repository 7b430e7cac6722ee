#include "torsionlab/quotient.hpp"

#include <algorithm>

#include "torsionlab/tensor.hpp"

namespace torsionlab {

namespace {

// copy of M carrying only the action the filter side uses
FiniteModule one_sided_view(const FiniteModule& M, const GabrielFilter& F) {
  FiniteModule V = M;
  if (F.side == Side::Right) {
    ensure(V.has_right(), ErrorKind::MissingAction,
           "module " + M.name + " has no right action");
    ensure(same_ring(V.ring, F.ring), ErrorKind::IncompatibleActions,
           "module " + M.name + " is not over the filter's ring");
    V.left_ring = nullptr;
    V.act_left.clear();
  } else {
    ensure(V.has_left(), ErrorKind::MissingAction,
           "module " + M.name + " has no left action");
    ensure(same_ring(V.left_ring, F.ring), ErrorKind::IncompatibleActions,
           "module " + M.name + " is not over the filter's ring");
    V.ring = nullptr;
    V.act_right.clear();
  }
  return V;
}

int find_element(const std::vector<ModuleMap>& elems,
                 const std::vector<int>& table, const std::string& what) {
  ModuleMap probe{table};
  auto it = std::lower_bound(elems.begin(), elems.end(), probe);
  ensure(it != elems.end() && it->table == table,
         ErrorKind::InternalInconsistency,
         what + ": carrier is not closed (map not found)");
  return (int)(it - elems.begin());
}

}  // namespace

int QuotientModule::lift(int v) const {
  for (int i : filter.min_ideal)
    if (mod_torsion.proj[i] == v) return i;
  return -1;
}

QuotientModule module_of_quotients(const GabrielFilter& F,
                                   const FiniteModule& M) {
  QuotientModule Q;
  Q.filter = F;
  Q.base = one_sided_view(M, F);
  const RingPtr& R = F.ring;
  // the least member of a filter is two-sided; everything below leans on it
  ensure(is_ideal(*R, F.min_ideal, Side::TwoSided),
         ErrorKind::InternalInconsistency,
         "least member of '" + F.label + "' is not two-sided");
  Q.torsion = torsion_submodule(F, Q.base);
  Q.mod_torsion = quotient_module(Q.base, Q.torsion);
  Q.least = submodule_as_module(one_sided_ring_module(R, F.side), F.min_ideal);
  Q.elements = hom_set(Q.least.module, Q.mod_torsion.module);
  ensure(!Q.elements.empty(), ErrorKind::InternalInconsistency,
         "empty hom carrier");

  bool right = F.side == Side::Right;
  int k = (int)Q.least.to_parent.size();
  const FiniteModule& MT = Q.mod_torsion.module;

  FiniteModule& C = Q.carrier;
  C.name = M.name + "@" + F.label;
  C.size = (int)Q.elements.size();
  C.zero = find_element(Q.elements, std::vector<int>(k, MT.zero), C.name);
  C.add.assign(C.size, std::vector<int>(C.size));
  std::vector<int> tmp(k);
  for (int a = 0; a < C.size; ++a)
    for (int b = 0; b < C.size; ++b) {
      for (int x = 0; x < k; ++x)
        tmp[x] = MT.add[Q.elements[a].table[x]][Q.elements[b].table[x]];
      C.add[a][b] = find_element(Q.elements, tmp, C.name + " add");
    }
  C.neg.assign(C.size, -1);
  for (int a = 0; a < C.size; ++a)
    for (int b = 0; b < C.size; ++b)
      if (C.add[a][b] == C.zero) C.neg[a] = b;

  if (right) {
    C.ring = R;
    C.act_right.assign(C.size, std::vector<int>(R->n));
    for (int a = 0; a < C.size; ++a)
      for (int r = 0; r < R->n; ++r) {
        // (f.r)(x) = f(r x), r x stays in the least member
        for (int x = 0; x < k; ++x) {
          int rx = R->mul[r][Q.least.to_parent[x]];
          int xi = Q.least.from_parent[rx];
          ensure(xi >= 0, ErrorKind::InternalInconsistency,
                 "least member not closed under left multiplication");
          tmp[x] = Q.elements[a].table[xi];
        }
        C.act_right[a][r] = find_element(Q.elements, tmp, C.name + " action");
      }
  } else {
    C.left_ring = R;
    C.act_left.assign(R->n, std::vector<int>(C.size));
    for (int r = 0; r < R->n; ++r)
      for (int a = 0; a < C.size; ++a) {
        for (int x = 0; x < k; ++x) {
          int xr = R->mul[Q.least.to_parent[x]][r];
          int xi = Q.least.from_parent[xr];
          ensure(xi >= 0, ErrorKind::InternalInconsistency,
                 "least member not closed under right multiplication");
          tmp[x] = Q.elements[a].table[xi];
        }
        C.act_left[r][a] = find_element(Q.elements, tmp, C.name + " action");
      }
  }
  validate_module(C);

  Q.q.assign(Q.base.size, -1);
  for (int m = 0; m < Q.base.size; ++m) {
    for (int x = 0; x < k; ++x) {
      int mx = right ? Q.base.act_right[m][Q.least.to_parent[x]]
                     : Q.base.act_left[Q.least.to_parent[x]][m];
      tmp[x] = Q.mod_torsion.proj[mx];
    }
    Q.q[m] = find_element(Q.elements, tmp, C.name + " canonical map");
  }
  ensure(is_module_hom(Q.base, C, ModuleMap{Q.q}),
         ErrorKind::InternalInconsistency,
         "canonical map into the quotient carrier is not linear");
  for (int m = 0; m < Q.base.size; ++m)
    if (Q.q[m] == C.zero) Q.q_kernel.push_back(m);
  ensure(Q.q_kernel == Q.torsion, ErrorKind::InternalInconsistency,
         "kernel of the canonical map differs from the torsion submodule");
  ensure(is_torsion_free(F, C), ErrorKind::InternalInconsistency,
         "quotient carrier has torsion");
  return Q;
}

namespace {

// guards shared by every lift-composition product: values must lift into the
// least member, and maps must kill the torsion part of the least member
void check_liftable(const QuotientModule& QR_mod, const QuotientModule& QM,
                    const std::string& what) {
  const Subset& least = QR_mod.filter.min_ideal;
  for (const auto& f : QR_mod.elements)
    for (int v : f.table)
      ensure(QR_mod.lift(v) >= 0, ErrorKind::InternalInconsistency,
             what + ": value outside the image of the least member");
  Subset meet = subset_intersect(least, QR_mod.torsion);
  for (const auto& f : QM.elements)
    for (int t : meet) {
      int ti = QM.least.from_parent[t];
      ensure(ti >= 0, ErrorKind::InternalInconsistency, what + ": bad index");
      ensure(f.table[ti] == QM.mod_torsion.module.zero,
             ErrorKind::InternalInconsistency,
             what + ": map does not kill torsion in the least member, so the "
                    "lift composition would depend on lift choice");
    }
}

}  // namespace

QuotientRing ring_of_quotients(const GabrielFilter& F) {
  QuotientRing out;
  out.module = module_of_quotients(F, one_sided_ring_module(F.ring, F.side));
  QuotientModule& Q = out.module;
  check_liftable(Q, Q, "ring of quotients at '" + F.label + "'");
  bool right = F.side == Side::Right;
  int k = (int)Q.least.to_parent.size();

  FiniteRing ring;
  ring.name = F.ring->name + "@" + F.label;
  ring.n = Q.carrier.size;
  ring.add = Q.carrier.add;
  ring.zero = Q.carrier.zero;
  ring.one = Q.q[F.ring->one];
  ring.mul.assign(ring.n, std::vector<int>(ring.n));
  std::vector<int> tmp(k);
  for (int a = 0; a < ring.n; ++a)
    for (int b = 0; b < ring.n; ++b) {
      // right side: (f g)(x) = f(lift(g(x))); left side mirrored
      const ModuleMap& outer = right ? Q.elements[a] : Q.elements[b];
      const ModuleMap& inner = right ? Q.elements[b] : Q.elements[a];
      for (int x = 0; x < k; ++x) {
        int lifted = Q.lift(inner.table[x]);
        tmp[x] = outer.table[Q.least.from_parent[lifted]];
      }
      ring.mul[a][b] = find_element(Q.elements, tmp, ring.name + " product");
    }
  out.ring = ring_from_tables(std::move(ring));
  out.q = Q.q;
  for (int a = 0; a < F.ring->n; ++a)
    for (int b = 0; b < F.ring->n; ++b)
      ensure(out.q[F.ring->mul[a][b]] == out.ring->mul[out.q[a]][out.q[b]],
             ErrorKind::InternalInconsistency,
             "canonical ring map is not multiplicative");
  // the ring product extends the module action through q
  for (int a = 0; a < out.ring->n; ++a)
    for (int r = 0; r < F.ring->n; ++r) {
      int via_ring = right ? out.ring->mul[a][out.q[r]]
                           : out.ring->mul[out.q[r]][a];
      int via_action = right ? Q.carrier.act_right[a][r]
                             : Q.carrier.act_left[r][a];
      ensure(via_ring == via_action, ErrorKind::InternalInconsistency,
             "ring product disagrees with the scalar action through q");
    }
  out.iso_hint = ring_iso_hint(*out.ring);
  return out;
}

std::vector<std::vector<int>> quotient_ring_action(const QuotientModule& QM,
                                                   const QuotientRing& QR) {
  ensure(same_ring(QM.filter.ring, QR.module.filter.ring) &&
             QM.filter.side == QR.module.filter.side &&
             QM.filter.members == QR.module.filter.members,
         ErrorKind::IncompatibleActions,
         "module and ring of quotients built from different filters");
  ensure(QM.least.to_parent == QR.module.least.to_parent,
         ErrorKind::InternalInconsistency, "least-member views disagree");
  check_liftable(QR.module, QM, "scalar extension of " + QM.carrier.name);
  bool right = QM.filter.side == Side::Right;
  int k = (int)QM.least.to_parent.size();
  int n = QM.carrier.size, m = QR.ring->n;

  // table[f][g] on the right, table[g][f] on the left
  std::vector<std::vector<int>> act(right ? n : m,
                                    std::vector<int>(right ? m : n));
  std::vector<int> tmp(k);
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < m; ++g) {
      for (int x = 0; x < k; ++x) {
        int lifted = QR.module.lift(QR.module.elements[g].table[x]);
        tmp[x] = QM.elements[f].table[QM.least.from_parent[lifted]];
      }
      int val = find_element(QM.elements, tmp, "scalar extension");
      if (right)
        act[f][g] = val;
      else
        act[g][f] = val;
    }
  // module laws over the quotient ring
  FiniteModule ext = QM.carrier;
  if (right) {
    ext.ring = QR.ring;
    ext.act_right = act;
    ext.act_left.clear();
    ext.left_ring = nullptr;
  } else {
    ext.left_ring = QR.ring;
    ext.act_left = act;
    ext.act_right.clear();
    ext.ring = nullptr;
  }
  validate_module(ext);
  // restriction along q agrees with the original action
  for (int f = 0; f < n; ++f)
    for (int r = 0; r < QM.filter.ring->n; ++r) {
      int via_ext = right ? act[f][QR.q[r]] : act[QR.q[r]][f];
      int via_base =
          right ? QM.carrier.act_right[f][r] : QM.carrier.act_left[r][f];
      ensure(via_ext == via_base, ErrorKind::InternalInconsistency,
             "extended scalars disagree with the base action through q");
    }
  return act;
}

ModuleMap quotient_functor_map(const QuotientModule& QM,
                               const QuotientModule& QN, const ModuleMap& h) {
  ensure(QM.filter.members == QN.filter.members &&
             same_ring(QM.filter.ring, QN.filter.ring) &&
             QM.filter.side == QN.filter.side,
         ErrorKind::IncompatibleActions, "functor map across different filters");
  ensure(is_module_hom(QM.base, QN.base, h), ErrorKind::LawViolation,
         "functor input is not a module map");
  for (int t : QM.torsion)
    ensure(subset_contains(QN.torsion, h.table[t]),
           ErrorKind::TorsionNotPreserved,
           "module map sends torsion outside torsion at " + std::to_string(t));
  int k = (int)QM.least.to_parent.size();
  std::vector<int> cls(QM.mod_torsion.module.size);
  for (int v = 0; v < (int)cls.size(); ++v)
    cls[v] = QN.mod_torsion.proj[h.table[QM.mod_torsion.rep[v]]];
  ModuleMap out;
  out.table.resize(QM.carrier.size);
  std::vector<int> tmp(k);
  for (int f = 0; f < QM.carrier.size; ++f) {
    for (int x = 0; x < k; ++x) tmp[x] = cls[QM.elements[f].table[x]];
    out.table[f] = find_element(QN.elements, tmp, "functor map");
  }
  ensure(is_module_hom(QM.carrier, QN.carrier, out),
         ErrorKind::InternalInconsistency, "functor map is not linear");
  for (int m = 0; m < QM.base.size; ++m)
    ensure(out.table[QM.q[m]] == QN.q[h.table[m]],
           ErrorKind::InternalInconsistency,
           "functor map does not commute with the canonical maps");
  return out;
}

ConnectingMap connecting_map(const QuotientModule& QM1,
                             const QuotientModule& QM2) {
  ensure(same_ring(QM1.filter.ring, QM2.filter.ring) &&
             QM1.filter.side == QM2.filter.side,
         ErrorKind::IncompatibleActions, "filters on different rings or sides");
  ensure(QM1.base.add == QM2.base.add &&
             QM1.base.act_right == QM2.base.act_right &&
             QM1.base.act_left == QM2.base.act_left,
         ErrorKind::IncompatibleActions,
         "connecting map needs the same base module");
  GabrielFilter F1 = QM1.filter, F2 = QM2.filter;
  if (!filter_subset(F1, F2))
    fail(ErrorKind::NotNested, "filter '" + F1.label +
                                   "' is not contained in '" + F2.label + "'");
  ensure(subset_includes(QM2.torsion, QM1.torsion),
         ErrorKind::InternalInconsistency,
         "torsion fails to grow along the filter inclusion");
  int k2 = (int)QM2.least.to_parent.size();
  ConnectingMap out;
  out.table.resize(QM1.carrier.size);
  std::vector<int> tmp(k2);
  for (int f = 0; f < QM1.carrier.size; ++f) {
    for (int x = 0; x < k2; ++x) {
      int parent = QM2.least.to_parent[x];  // inside the smaller least member
      int xi = QM1.least.from_parent[parent];
      ensure(xi >= 0, ErrorKind::InternalInconsistency,
             "nested least members fail to include");
      int v1 = QM1.elements[f].table[xi];
      tmp[x] = QM2.mod_torsion.proj[QM1.mod_torsion.rep[v1]];
    }
    out.table[f] = find_element(QM2.elements, tmp, "connecting map");
  }
  ensure(is_module_hom(QM1.carrier, QM2.carrier, ModuleMap{out.table}),
         ErrorKind::InternalInconsistency, "connecting map is not linear");
  for (int m = 0; m < QM1.base.size; ++m)
    ensure(out.table[QM1.q[m]] == QM2.q[m], ErrorKind::InternalInconsistency,
           "connecting map does not commute with the canonical maps");
  return out;
}

IteratedQuotientCheck check_iterated_quotient(const QuotientModule& QM1,
                                              const QuotientModule& QM2) {
  ConnectingMap c12 = connecting_map(QM1, QM2);
  const GabrielFilter& F2 = QM2.filter;
  bool right = F2.side == Side::Right;
  QuotientModule A = module_of_quotients(F2, QM1.carrier);

  // the connecting map factors through the second torsion quotient
  std::vector<int> u(A.mod_torsion.module.size);
  for (int v = 0; v < (int)u.size(); ++v) u[v] = c12.table[A.mod_torsion.rep[v]];
  for (int f = 0; f < QM1.carrier.size; ++f)
    ensure(c12.table[f] == u[A.mod_torsion.proj[f]],
           ErrorKind::InternalInconsistency,
           "connecting map fails to kill second-stage torsion");

  IteratedQuotientCheck res;
  res.iterated_size = A.carrier.size;
  ensure(A.carrier.size == QM2.carrier.size, ErrorKind::InternalInconsistency,
         "iterated and direct quotients have different sizes");
  int k2 = (int)A.least.to_parent.size();
  res.theta.assign(A.carrier.size, -1);
  for (int g = 0; g < A.carrier.size; ++g) {
    int match = -1;
    for (int y = 0; y < QM2.carrier.size; ++y) {
      bool ok = true;
      for (int x = 0; x < k2 && ok; ++x) {
        int i = A.least.to_parent[x];
        int yi = right ? QM2.carrier.act_right[y][i]
                       : QM2.carrier.act_left[i][y];
        ok = yi == u[A.elements[g].table[x]];
      }
      if (ok) {
        ensure(match < 0, ErrorKind::InternalInconsistency,
               "iterated quotient element matches two direct elements");
        match = y;
      }
    }
    ensure(match >= 0, ErrorKind::InternalInconsistency,
           "iterated quotient element matches no direct element");
    res.theta[g] = match;
  }
  std::vector<char> seen(QM2.carrier.size, 0);
  for (int v : res.theta) {
    ensure(!seen[v], ErrorKind::InternalInconsistency,
           "iterated comparison map is not injective");
    seen[v] = 1;
  }
  ensure(is_module_hom(A.carrier, QM2.carrier, ModuleMap{res.theta}),
         ErrorKind::InternalInconsistency,
         "iterated comparison map is not linear");
  for (int f = 0; f < QM1.carrier.size; ++f)
    ensure(res.theta[A.q[f]] == c12.table[f], ErrorKind::InternalInconsistency,
           "iterated comparison map does not extend the connecting map");
  res.verified = true;
  return res;
}

namespace {

// Q as a module over R on the side opposite to the carrier's own action,
// through the canonical ring map.
FiniteModule other_side_view(const QuotientRing& QR) {
  const QuotientModule& Q = QR.module;
  bool right = Q.filter.side == Side::Right;
  FiniteModule V = Q.carrier;
  if (right) {
    V.left_ring = Q.filter.ring;
    V.act_left.assign(Q.filter.ring->n, std::vector<int>(V.size));
    for (int r = 0; r < Q.filter.ring->n; ++r)
      for (int x = 0; x < V.size; ++x)
        V.act_left[r][x] = QR.ring->mul[QR.q[r]][x];
  } else {
    V.ring = Q.filter.ring;
    V.act_right.assign(V.size, std::vector<int>(Q.filter.ring->n));
    for (int x = 0; x < V.size; ++x)
      for (int r = 0; r < Q.filter.ring->n; ++r)
        V.act_right[x][r] = QR.ring->mul[x][QR.q[r]];
  }
  validate_module(V);
  return V;
}

bool table_bijective(const std::vector<int>& t, int codomain) {
  if ((int)t.size() != codomain) return false;
  std::vector<char> seen(codomain, 0);
  for (int v : t) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool table_injective(const std::vector<int>& t, int codomain) {
  std::vector<char> seen(codomain, 0);
  for (int v : t) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

PerfectCheck is_perfect_filter(const GabrielFilter& F) {
  PerfectCheck res;
  QuotientRing QR = ring_of_quotients(F);
  const RingPtr& R = F.ring;
  bool right = F.side == Side::Right;
  FiniteModule own = QR.module.carrier;   // carries the F-side action over R
  FiniteModule other = other_side_view(QR);
  // orient: tensor takes (right module, left module)
  const FiniteModule& first = right ? own : other;
  const FiniteModule& second = right ? other : own;

  {
    TensorGroup TG = tensor_over_R(first, second);
    std::vector<int> mu = extend_additive(
        TG, QR.module.carrier,
        [&](int a, int b) { return QR.ring->mul[a][b]; },
        "multiplication off the tensor square");
    res.multiplication_bijective =
        TG.group.size == QR.module.carrier.size &&
        table_bijective(mu, QR.module.carrier.size);
  }

  std::vector<Subset> ideals = enumerate_ideals(*R, F.side);
  FiniteModule RM = one_sided_ring_module(R, F.side);

  res.ideals_embed = true;
  for (const auto& I : ideals) {
    SubmoduleView V = submodule_as_module(RM, I);
    TensorGroup TG = right ? tensor_over_R(V.module, second)
                           : tensor_over_R(first, V.module);
    auto on_pure = [&](int a, int b) {
      return right ? QR.ring->mul[QR.q[V.to_parent[a]]][b]
                   : QR.ring->mul[a][QR.q[V.to_parent[b]]];
    };
    std::vector<int> tab = extend_additive(TG, QR.module.carrier, on_pure,
                                           "ideal embedding into quotients");
    if (!table_injective(tab, QR.module.carrier.size)) {
      res.ideals_embed = false;
      break;
    }
  }

  res.cyclic_quotients_match = true;
  for (const auto& I : ideals) {
    QuotientView C = quotient_module(RM, I);
    QuotientModule QC = module_of_quotients(F, C.module);
    std::vector<std::vector<int>> act = quotient_ring_action(QC, QR);
    TensorGroup TG = right ? tensor_over_R(C.module, second)
                           : tensor_over_R(first, C.module);
    auto on_pure = [&](int a, int b) {
      return right ? act[QC.q[a]][b] : act[a][QC.q[b]];
    };
    std::vector<int> tab = extend_additive(TG, QC.carrier, on_pure,
                                           "cyclic module extension");
    if (TG.group.size != QC.carrier.size ||
        !table_bijective(tab, QC.carrier.size)) {
      res.cyclic_quotients_match = false;
      break;
    }
  }

  ensure((res.multiplication_bijective && res.ideals_embed) ==
             res.cyclic_quotients_match,
         ErrorKind::CriteriaDisagree,
         "the two perfectness criteria disagree on '" + F.label + "'");
  res.perfect = res.cyclic_quotients_match;
  return res;
}

TotalFilterResult total_filter(const RingPtr& R, Side side, int max_ideals) {
  std::vector<GabrielFilter> filters =
      enumerate_gabriel_filters(R, side, max_ideals);
  TotalFilterResult res;
  std::vector<GabrielFilter> good;
  for (const auto& F : filters)
    if (is_faithful(F) && is_perfect_filter(F).perfect) {
      good.push_back(F);
      res.constituents.push_back(F.label);
    }
  ensure(!good.empty(), ErrorKind::InternalInconsistency,
         "no perfect faithful filter found (the one-member filter is both)");
  GabrielFilter join = good.front();
  for (size_t i = 1; i < good.size(); ++i) join = filter_join(join, good[i]);
  join.label = "total";
  res.join = std::move(join);
  res.join_faithful = is_faithful(res.join);
  res.join_perfect = is_perfect_filter(res.join).perfect;
  return res;
}

}  // namespace torsionlab
