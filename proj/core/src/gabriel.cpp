#include "torsionlab/gabriel.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace torsionlab {

namespace {

std::string subset_str(const Subset& s) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

Subset full_subset(int n) {
  Subset s(n);
  for (int i = 0; i < n; ++i) s[i] = i;
  return s;
}

}  // namespace

bool GabrielFilter::contains(const Subset& I) const {
  auto it = std::lower_bound(members.begin(), members.end(), I, subset_less);
  return it != members.end() && *it == I;
}

Subset ideal_transporter(const FiniteRing& R, Side side, const Subset& I,
                         int r) {
  std::vector<char> in(R.n, 0);
  for (int x : I) in[x] = 1;
  Subset out;
  for (int x = 0; x < R.n; ++x) {
    int y = side == Side::Right ? R.mul[r][x] : R.mul[x][r];
    if (in[y]) out.push_back(x);
  }
  return out;
}

AxiomCheck check_gabriel_filter(const RingPtr& R, Side side,
                                const std::vector<Subset>& members,
                                const std::vector<Subset>* all_ideals) {
  AxiomCheck res;
  auto bad = [&](const std::string& axiom, const std::string& witness) {
    res.ok = false;
    res.axiom = axiom;
    res.witness = witness;
    return res;
  };
  if (members.empty()) return bad("nonempty", "no members");
  std::vector<Subset> sorted = members;
  sort_subsets(sorted);
  auto member = [&](const Subset& I) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), I, subset_less);
    return it != sorted.end() && *it == I;
  };
  for (const auto& I : sorted)
    if (!is_ideal(*R, I, side))
      return bad("members are ideals", subset_str(I));
  if (!member(full_subset(R->n)))
    return bad("whole ring belongs", "R missing");

  std::vector<Subset> ideals;
  if (all_ideals) {
    ideals = *all_ideals;
  } else {
    ideals = enumerate_ideals(*R, side);
  }
  // upward closure
  for (const auto& I : sorted)
    for (const auto& L : ideals)
      if (subset_includes(L, I) && !member(L))
        return bad("upward closure", subset_str(I) + " <= " + subset_str(L));
  // intersections
  for (size_t i = 0; i < sorted.size(); ++i)
    for (size_t j = i + 1; j < sorted.size(); ++j) {
      Subset meet = subset_intersect(sorted[i], sorted[j]);
      if (!member(meet))
        return bad("intersection closure",
                   subset_str(sorted[i]) + " ^ " + subset_str(sorted[j]));
    }
  Subset least = sorted.front();
  for (const auto& I : sorted) least = subset_intersect(least, I);
  ensure(member(least), ErrorKind::InternalInconsistency,
         "intersection-closed family lost its least member");
  // transporters: (I : r) grows with I, so the least member decides
  for (int r = 0; r < R->n; ++r) {
    Subset t = ideal_transporter(*R, side, least, r);
    if (!member(t))
      return bad("transporter closure",
                 "(" + subset_str(least) + " : " + std::to_string(r) + ")");
  }
  // composition condition; the hypothesis over any member implies it over the
  // least member, so testing the least member is exact
  for (const auto& J : ideals) {
    if (member(J)) continue;
    bool hyp = true;
    for (int i : least) {
      if (!member(ideal_transporter(*R, side, J, i))) {
        hyp = false;
        break;
      }
    }
    if (hyp)
      return bad("composition closure",
                 subset_str(J) + " forced by " + subset_str(least));
  }
  return res;
}

GabrielFilter make_filter(const RingPtr& R, Side side,
                          std::vector<Subset> members, std::string label,
                          const std::vector<Subset>* all_ideals) {
  for (auto& m : members) std::sort(m.begin(), m.end());
  sort_subsets(members);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  AxiomCheck c = check_gabriel_filter(R, side, members, all_ideals);
  if (!c.ok)
    fail(ErrorKind::AxiomViolation,
         "filter '" + label + "' fails " + c.axiom + " at " + c.witness);
  GabrielFilter F;
  F.ring = R;
  F.side = side;
  F.members = std::move(members);
  F.min_ideal = F.members.front();
  for (const auto& I : F.members) F.min_ideal = subset_intersect(F.min_ideal, I);
  F.label = std::move(label);
  ensure(F.contains(F.min_ideal), ErrorKind::InternalInconsistency,
         "filter lost its least member");
  return F;
}

GabrielFilter filter_closure(const RingPtr& R, Side side,
                             std::vector<Subset> seeds, std::string label) {
  std::vector<Subset> ideals = enumerate_ideals(*R, side);
  std::set<Subset> cur;
  cur.insert(full_subset(R->n));
  for (auto s : seeds) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!is_ideal(*R, s, side))
      fail(ErrorKind::NotAnIdeal,
           "closure seed " + subset_str(s) + " is not a " +
               std::string(side_name(side)) + " ideal");
    cur.insert(std::move(s));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subset> snapshot(cur.begin(), cur.end());
    // upward
    for (const auto& I : snapshot)
      for (const auto& L : ideals)
        if (subset_includes(L, I)) grew |= cur.insert(L).second;
    // intersections
    for (size_t i = 0; i < snapshot.size(); ++i)
      for (size_t j = i + 1; j < snapshot.size(); ++j)
        grew |= cur.insert(subset_intersect(snapshot[i], snapshot[j])).second;
    // transporters
    for (const auto& I : snapshot)
      for (int r = 0; r < R->n; ++r)
        grew |= cur.insert(ideal_transporter(*R, side, I, r)).second;
    // composition
    for (const auto& J : ideals) {
      if (cur.count(J)) continue;
      for (const auto& I : snapshot) {
        bool hyp = true;
        for (int i : I)
          if (!cur.count(ideal_transporter(*R, side, J, i))) {
            hyp = false;
            break;
          }
        if (hyp) {
          grew |= cur.insert(J).second;
          break;
        }
      }
    }
  }
  std::vector<Subset> members(cur.begin(), cur.end());
  return make_filter(R, side, std::move(members), std::move(label), &ideals);
}

std::vector<GabrielFilter> enumerate_gabriel_filters(const RingPtr& R,
                                                     Side side,
                                                     int max_ideals) {
  std::vector<Subset> ideals = enumerate_ideals(*R, side);
  if (max_ideals > 0 && (int)ideals.size() > max_ideals)
    fail(ErrorKind::TooManyIdeals,
         "ring has " + std::to_string(ideals.size()) +
             " one-sided ideals, cap is " + std::to_string(max_ideals));
  std::vector<GabrielFilter> out;
  std::set<std::vector<Subset>> seen;
  // every filter is the up-set of its least member, so try each ideal
  for (const auto& C : ideals) {
    std::vector<Subset> members;
    for (const auto& L : ideals)
      if (subset_includes(L, C)) members.push_back(L);
    AxiomCheck c = check_gabriel_filter(R, side, members, &ideals);
    if (!c.ok) continue;
    if (!seen.insert(members).second) continue;
    GabrielFilter F;
    F.ring = R;
    F.side = side;
    F.members = std::move(members);
    F.min_ideal = C;
    F.label = "F" + std::to_string(out.size());
    out.push_back(std::move(F));
  }
  std::sort(out.begin(), out.end(),
            [](const GabrielFilter& a, const GabrielFilter& b) {
              return subset_less(a.min_ideal, b.min_ideal);
            });
  for (size_t i = 0; i < out.size(); ++i) out[i].label = "F" + std::to_string(i);
  return out;
}

Subset torsion_submodule(const GabrielFilter& F, const FiniteModule& M) {
  Subset out;
  if (F.side == Side::Right) {
    ensure(M.has_right(), ErrorKind::MissingAction,
           "right-filter torsion needs a right action");
    ensure(same_ring(M.ring, F.ring), ErrorKind::IncompatibleActions,
           "module is not over the filter's ring");
    for (int x = 0; x < M.size; ++x) {
      bool by_filter = F.contains(annihilator(x, M, Side::Right));
      bool by_least = true;
      for (int i : F.min_ideal)
        if (M.act_right[x][i] != M.zero) {
          by_least = false;
          break;
        }
      ensure(by_filter == by_least, ErrorKind::EquivalenceBroken,
             "torsion: annihilator test disagrees with least-member test at " +
                 std::to_string(x));
      if (by_filter) out.push_back(x);
    }
  } else {
    ensure(F.side == Side::Left, ErrorKind::MalformedSpec,
           "torsion needs a one-sided filter");
    ensure(M.has_left(), ErrorKind::MissingAction,
           "left-filter torsion needs a left action");
    ensure(same_ring(M.left_ring, F.ring), ErrorKind::IncompatibleActions,
           "module is not over the filter's ring");
    for (int x = 0; x < M.size; ++x) {
      bool by_filter = F.contains(annihilator(x, M, Side::Left));
      bool by_least = true;
      for (int i : F.min_ideal)
        if (M.act_left[i][x] != M.zero) {
          by_least = false;
          break;
        }
      ensure(by_filter == by_least, ErrorKind::EquivalenceBroken,
             "torsion: annihilator test disagrees with least-member test at " +
                 std::to_string(x));
      if (by_filter) out.push_back(x);
    }
  }
  ensure(is_submodule(M, out), ErrorKind::InternalInconsistency,
         "torsion set is not a submodule of " + M.name);
  return out;
}

bool is_torsion_free(const GabrielFilter& F, const FiniteModule& M) {
  return torsion_submodule(F, M) == Subset{M.zero};
}

bool is_dense_ideal(const RingPtr& R, Side side, const Subset& I) {
  std::vector<char> in(R->n, 0);
  for (int x : I) in[x] = 1;
  for (int x = 0; x < R->n; ++x)
    for (int y = 0; y < R->n; ++y) {
      if (y == R->zero) continue;
      bool found = false;
      for (int r = 0; r < R->n && !found; ++r) {
        if (side == Side::Right)
          found = in[R->mul[x][r]] && R->mul[y][r] != R->zero;
        else
          found = in[R->mul[r][x]] && R->mul[r][y] != R->zero;
      }
      if (!found) return false;
    }
  return true;
}

GabrielFilter lambek_filter(const RingPtr& R, Side side) {
  std::vector<Subset> ideals = enumerate_ideals(*R, side);
  std::vector<Subset> members;
  for (const auto& I : ideals)
    if (is_dense_ideal(R, side, I)) members.push_back(I);
  return make_filter(R, side, std::move(members), "lambek", &ideals);
}

namespace {

bool is_essential_ideal(const Subset& E, const std::vector<Subset>& ideals,
                        int zero) {
  for (const auto& J : ideals) {
    if (J == Subset{zero}) continue;
    Subset meet = subset_intersect(E, J);
    if (meet == Subset{zero}) return false;
  }
  return true;
}

// {x : ann(x) essential}, for a one-sided module over R
Subset singular_submodule(const RingPtr& R, Side side, const FiniteModule& M,
                          const std::vector<Subset>& ideals) {
  Subset out;
  for (int x = 0; x < M.size; ++x) {
    Subset ann = annihilator(x, M, side);
    if (is_essential_ideal(ann, ideals, R->zero)) out.push_back(x);
  }
  ensure(is_submodule(M, out), ErrorKind::InternalInconsistency,
         "singular set is not a submodule");
  return out;
}

}  // namespace

GabrielFilter goldie_filter(const RingPtr& R, Side side) {
  std::vector<Subset> ideals = enumerate_ideals(*R, side);
  std::vector<Subset> members;
  FiniteModule RM = one_sided_ring_module(R, side);
  for (const auto& I : ideals) {
    QuotientView Q = quotient_module(RM, I);
    Subset z1 = singular_submodule(R, side, Q.module, ideals);
    QuotientView Q2 = quotient_module(Q.module, z1);
    Subset z2rel = singular_submodule(R, side, Q2.module, ideals);
    // I belongs iff the second singular layer is everything
    bool all = true;
    for (int x = 0; x < Q2.module.size; ++x)
      if (!subset_contains(z2rel, x)) {
        all = false;
        break;
      }
    if (all) members.push_back(I);
  }
  return make_filter(R, side, std::move(members), "goldie", &ideals);
}

ClassicalFilterResult classical_filter(const RingPtr& R, Side side) {
  ClassicalFilterResult res;
  for (int t = 0; t < R->n; ++t) {
    bool reg = true;
    for (int y = 0; y < R->n && reg; ++y) {
      if (y == R->zero) continue;
      if (R->mul[t][y] == R->zero || R->mul[y][t] == R->zero) reg = false;
    }
    if (reg) res.regular.push_back(t);
  }
  // denominator condition
  for (int r = 0; r < R->n; ++r)
    for (int t : res.regular) {
      bool found = false;
      for (int t2 : res.regular) {
        for (int r2 = 0; r2 < R->n && !found; ++r2) {
          if (side == Side::Right)
            found = R->mul[r][t2] == R->mul[t][r2];
          else
            found = R->mul[t2][r] == R->mul[r2][t];
        }
        if (found) break;
      }
      if (!found)
        fail(ErrorKind::NotOre,
             "denominator condition fails for element " + std::to_string(r) +
                 " and cancellable element " + std::to_string(t));
    }
  res.ore = true;
  res.regular_are_units = true;
  for (int t : res.regular) {
    bool unit = false;
    for (int y = 0; y < R->n; ++y)
      if (R->mul[t][y] == R->one && R->mul[y][t] == R->one) unit = true;
    if (!unit) res.regular_are_units = false;
  }
  std::vector<Subset> ideals = enumerate_ideals(*R, side);
  std::vector<Subset> members;
  for (const auto& I : ideals) {
    bool has = false;
    for (int t : res.regular)
      if (subset_contains(I, t)) has = true;
    if (has) members.push_back(I);
  }
  res.filter = make_filter(R, side, std::move(members), "classical", &ideals);
  return res;
}

GabrielFilter trivial_filter(const RingPtr& R, Side side) {
  return make_filter(R, side, {full_subset(R->n)}, "trivial");
}

GabrielFilter improper_filter(const RingPtr& R, Side side) {
  std::vector<Subset> ideals = enumerate_ideals(*R, side);
  std::vector<Subset> members = ideals;
  return make_filter(R, side, std::move(members), "improper", &ideals);
}

GabrielFilter named_filter(const RingPtr& R, Side side,
                           const std::string& name) {
  if (name == "lambek") return lambek_filter(R, side);
  if (name == "goldie") return goldie_filter(R, side);
  if (name == "classical") return classical_filter(R, side).filter;
  if (name == "trivial") return trivial_filter(R, side);
  if (name == "improper") return improper_filter(R, side);
  fail(ErrorKind::MalformedSpec, "unknown filter name '" + name + "'");
}

bool is_faithful(const GabrielFilter& F) {
  FiniteModule RM = one_sided_ring_module(F.ring, F.side);
  return torsion_submodule(F, RM) == Subset{F.ring->zero};
}

DifferentialCheck is_differential(const GabrielFilter& F,
                                  const std::vector<Derivation>& derivs) {
  DifferentialCheck res;
  const FiniteRing& R = *F.ring;
  auto maps_into = [&](const Derivation& d, const Subset& J, const Subset& I) {
    for (int x : J)
      if (!subset_contains(I, d.table[x])) return false;
    return true;
  };
  res.by_definition = true;
  for (const auto& I : F.members) {
    bool found = false;
    for (const auto& J : F.members) {
      bool all = true;
      for (const auto& d : derivs)
        if (!maps_into(d, J, I)) {
          all = false;
          break;
        }
      if (all) {
        found = true;
        break;
      }
    }
    if (!found) {
      res.by_definition = false;
      res.witness = "no member maps into " + subset_str(I);
      break;
    }
  }
  res.by_min_ideal = true;
  for (size_t k = 0; k < derivs.size(); ++k)
    if (!maps_into(derivs[k], F.min_ideal, F.min_ideal)) {
      res.by_min_ideal = false;
      if (res.witness.empty())
        res.witness = "derivation " + std::to_string(k) +
                      " moves the least member off itself";
      break;
    }
  ensure(res.by_definition == res.by_min_ideal, ErrorKind::EquivalenceBroken,
         "differential filter tests disagree on '" + F.label + "'");
  res.differential = res.by_definition;
  (void)R;
  return res;
}

bool filter_subset(const GabrielFilter& F1, const GabrielFilter& F2) {
  ensure(same_ring(F1.ring, F2.ring) && F1.side == F2.side,
         ErrorKind::IncompatibleActions,
         "filters live on different rings or sides");
  bool by_members = true;
  for (const auto& I : F1.members)
    if (!F2.contains(I)) {
      by_members = false;
      break;
    }
  bool by_least = subset_includes(F1.min_ideal, F2.min_ideal);
  ensure(by_members == by_least, ErrorKind::EquivalenceBroken,
         "filter inclusion tests disagree");
  return by_members;
}

GabrielFilter filter_join(const GabrielFilter& F1, const GabrielFilter& F2) {
  ensure(same_ring(F1.ring, F2.ring) && F1.side == F2.side,
         ErrorKind::IncompatibleActions,
         "filters live on different rings or sides");
  std::vector<Subset> seeds = F1.members;
  seeds.insert(seeds.end(), F2.members.begin(), F2.members.end());
  return filter_closure(F1.ring, F1.side, std::move(seeds),
                        F1.label + "+" + F2.label);
}

}  // namespace torsionlab
