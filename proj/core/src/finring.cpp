#include "torsionlab/finring.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace torsionlab {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::MissingAction: return "MissingAction";
    case ErrorKind::IncompatibleActions: return "IncompatibleActions";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::TooManyIdeals: return "TooManyIdeals";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::CriteriaDisagree: return "CriteriaDisagree";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::TorsionNotPreserved: return "TorsionNotPreserved";
    case ErrorKind::NoExtension: return "NoExtension";
    case ErrorKind::FormulaInapplicable: return "FormulaInapplicable";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::ExtensionMissing: return "ExtensionMissing";
    case ErrorKind::EquivalenceBroken: return "EquivalenceBroken";
    case ErrorKind::IllDefined: return "IllDefined";
    case ErrorKind::LawViolation: return "LawViolation";
    case ErrorKind::NotOre: return "NotOre";
  }
  return "Unknown";
}

const char* side_name(Side s) {
  switch (s) {
    case Side::Right: return "right";
    case Side::Left: return "left";
    case Side::TwoSided: return "two-sided";
  }
  return "?";
}

namespace {

std::string triple(const std::string& op, int x, int y, int z = -1) {
  std::ostringstream os;
  os << op << " at (" << x << "," << y;
  if (z >= 0) os << "," << z;
  os << ")";
  return os.str();
}

void check_table(const std::vector<std::vector<int>>& t, int rows, int cols,
                 const std::string& what) {
  ensure((int)t.size() == rows, ErrorKind::MalformedSpec,
         what + ": wrong row count");
  for (const auto& row : t)
    ensure((int)row.size() == cols, ErrorKind::MalformedSpec,
           what + ": wrong column count");
}

void check_entries(const std::vector<std::vector<int>>& t, int bound,
                   const std::string& what) {
  for (const auto& row : t)
    for (int v : row)
      ensure(0 <= v && v < bound, ErrorKind::MalformedSpec,
             what + ": entry out of range");
}

// Validates the abelian-group part shared by rings and modules; fills neg.
// The cubic loops here and in the ring/module validators build their witness
// strings only on failure; doing it eagerly dwarfs the table lookups.
void check_group(const std::vector<std::vector<int>>& add, int n, int zero,
                 std::vector<int>& neg, const std::string& who) {
  ensure(0 <= zero && zero < n, ErrorKind::MalformedSpec, who + ": bad zero");
  neg.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    const auto& add_x = add[x];
    if (add_x[zero] != x)
      fail(ErrorKind::AxiomViolation,
           who + ": zero is not neutral, " + triple("x+0!=x", x, zero));
    for (int y = 0; y < n; ++y) {
      const int xy = add_x[y];
      if (xy != add[y][x])
        fail(ErrorKind::AxiomViolation,
             who + ": addition not commutative, " + triple("x+y", x, y));
      if (xy == zero) neg[x] = y;
      const auto& add_xy = add[xy];
      const auto& add_y = add[y];
      for (int z = 0; z < n; ++z)
        if (add_xy[z] != add_x[add_y[z]])
          fail(ErrorKind::AxiomViolation,
               who + ": addition not associative, " + triple("x+y+z", x, y, z));
    }
    if (neg[x] < 0)
      fail(ErrorKind::AxiomViolation,
           who + ": no additive inverse for element " + std::to_string(x));
  }
}

std::vector<int> derive_neg(const std::vector<std::vector<int>>& add, int n,
                            int zero) {
  std::vector<int> neg(n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (add[x][y] == zero) { neg[x] = y; break; }
  return neg;
}

}  // namespace

void validate_ring(const FiniteRing& R) {
  ensure(R.n >= 1, ErrorKind::MalformedSpec, "ring must be nonempty");
  check_table(R.add, R.n, R.n, "ring add");
  check_entries(R.add, R.n, "ring add");
  check_table(R.mul, R.n, R.n, "ring mul");
  check_entries(R.mul, R.n, "ring mul");
  std::vector<int> neg;
  check_group(R.add, R.n, R.zero, neg, "ring " + R.name);
  ensure(0 <= R.one && R.one < R.n, ErrorKind::MalformedSpec, "bad one");
  for (int x = 0; x < R.n; ++x) {
    if (R.mul[R.one][x] != x || R.mul[x][R.one] != x)
      fail(ErrorKind::AxiomViolation,
           "ring " + R.name + ": one is not neutral at " + std::to_string(x));
    const auto& mul_x = R.mul[x];
    const auto& add_x = R.add[x];
    for (int y = 0; y < R.n; ++y) {
      const auto& mul_y = R.mul[y];
      const auto& add_y = R.add[y];
      const auto& mul_xy = R.mul[mul_x[y]];
      const auto& add_xy = R.add[mul_x[y]];
      const auto& mul_xpy = R.mul[add_x[y]];
      for (int z = 0; z < R.n; ++z) {
        if (mul_xy[z] != mul_x[mul_y[z]])
          fail(ErrorKind::AxiomViolation,
               "ring " + R.name + ": mul not associative, " +
                   triple("xyz", x, y, z));
        if (mul_x[add_y[z]] != add_xy[mul_x[z]])
          fail(ErrorKind::AxiomViolation,
               "ring " + R.name + ": left distributivity fails, " +
                   triple("x(y+z)", x, y, z));
        if (mul_xpy[z] != R.add[mul_x[z]][mul_y[z]])
          fail(ErrorKind::AxiomViolation,
               "ring " + R.name + ": right distributivity fails, " +
                   triple("(x+y)z", x, y, z));
      }
    }
  }
}

RingPtr ring_from_tables(FiniteRing R) {
  if ((int)R.elements.size() != R.n) {
    R.elements.resize(R.n);
    for (int i = 0; i < R.n; ++i) R.elements[i] = std::to_string(i);
  }
  validate_ring(R);
  R.neg = derive_neg(R.add, R.n, R.zero);
  return std::make_shared<const FiniteRing>(std::move(R));
}

RingPtr opposite_ring(const RingPtr& R) {
  FiniteRing S;
  S.name = R->name + "^op";
  S.n = R->n;
  S.add = R->add;
  S.mul.assign(R->n, std::vector<int>(R->n));
  for (int x = 0; x < R->n; ++x)
    for (int y = 0; y < R->n; ++y) S.mul[x][y] = R->mul[y][x];
  S.zero = R->zero;
  S.one = R->one;
  S.elements = R->elements;
  return ring_from_tables(std::move(S));
}

void validate_module(const FiniteModule& M) {
  ensure(M.size >= 1, ErrorKind::MalformedSpec, "module must be nonempty");
  check_table(M.add, M.size, M.size, "module add");
  check_entries(M.add, M.size, "module add");
  std::vector<int> neg;
  check_group(M.add, M.size, M.zero, neg, "module " + M.name);
  if (M.has_right()) {
    const FiniteRing& R = *M.ring;
    check_table(M.act_right, M.size, R.n, "right action");
    check_entries(M.act_right, M.size, "right action");
    for (int x = 0; x < M.size; ++x) {
      const auto& act_x = M.act_right[x];
      const auto& madd_x = M.add[x];
      if (act_x[R.one] != x)
        fail(ErrorKind::AxiomViolation,
             "module " + M.name + ": right action not unital at " +
                 std::to_string(x));
      if (act_x[R.zero] != M.zero)
        fail(ErrorKind::AxiomViolation,
             "module " + M.name + ": x*0 != 0 at " + std::to_string(x));
      for (int r = 0; r < R.n; ++r) {
        const auto& mul_r = R.mul[r];
        const auto& radd_r = R.add[r];
        const auto& act_xr = M.act_right[act_x[r]];
        const auto& add_xr = M.add[act_x[r]];
        for (int s = 0; s < R.n; ++s) {
          if (act_x[mul_r[s]] != act_xr[s])
            fail(ErrorKind::AxiomViolation,
                 "module " + M.name + ": x(rs)!=(xr)s, " + triple("xrs", x, r, s));
          if (act_x[radd_r[s]] != add_xr[act_x[s]])
            fail(ErrorKind::AxiomViolation,
                 "module " + M.name + ": x(r+s) fails, " + triple("", x, r, s));
        }
        for (int y = 0; y < M.size; ++y)
          if (M.act_right[madd_x[y]][r] != add_xr[M.act_right[y][r]])
            fail(ErrorKind::AxiomViolation,
                 "module " + M.name + ": (x+y)r fails, " + triple("", x, y, r));
      }
    }
  }
  if (M.has_left()) {
    const FiniteRing& L = *M.left_ring;
    check_table(M.act_left, L.n, M.size, "left action");
    check_entries(M.act_left, M.size, "left action");
    for (int x = 0; x < M.size; ++x) {
      ensure(M.act_left[L.one][x] == x, ErrorKind::AxiomViolation,
             "module " + M.name + ": left action not unital at " +
                 std::to_string(x));
      ensure(M.act_left[L.zero][x] == M.zero, ErrorKind::AxiomViolation,
             "module " + M.name + ": 0*x != 0 at " + std::to_string(x));
    }
    for (int r = 0; r < L.n; ++r) {
      const auto& act_r = M.act_left[r];
      for (int s = 0; s < L.n; ++s) {
        const auto& act_rs = M.act_left[L.mul[r][s]];
        const auto& act_rps = M.act_left[L.add[r][s]];
        const auto& act_s = M.act_left[s];
        for (int x = 0; x < M.size; ++x) {
          if (act_rs[x] != act_r[act_s[x]])
            fail(ErrorKind::AxiomViolation,
                 "module " + M.name + ": (rs)x!=r(sx), " + triple("rsx", r, s, x));
          if (act_rps[x] != M.add[act_r[x]][act_s[x]])
            fail(ErrorKind::AxiomViolation,
                 "module " + M.name + ": (r+s)x fails, " + triple("", r, s, x));
        }
      }
      for (int x = 0; x < M.size; ++x) {
        const auto& madd_x = M.add[x];
        const auto& add_rx = M.add[act_r[x]];
        for (int y = 0; y < M.size; ++y)
          if (act_r[madd_x[y]] != add_rx[act_r[y]])
            fail(ErrorKind::AxiomViolation,
                 "module " + M.name + ": r(x+y) fails, " + triple("", r, x, y));
      }
    }
  }
  if (M.has_right() && M.has_left()) {
    // bimodule compatibility (r x) s = r (x s)
    const FiniteRing& L = *M.left_ring;
    const FiniteRing& R = *M.ring;
    for (int r = 0; r < L.n; ++r) {
      const auto& act_r = M.act_left[r];
      for (int x = 0; x < M.size; ++x) {
        const auto& right_rx = M.act_right[act_r[x]];
        const auto& right_x = M.act_right[x];
        for (int s = 0; s < R.n; ++s)
          if (right_rx[s] != act_r[right_x[s]])
            fail(ErrorKind::AxiomViolation,
                 "module " + M.name + ": (rx)s!=r(xs), " + triple("rxs", r, x, s));
      }
    }
  }
}

FiniteModule ring_as_right_module(const RingPtr& R) {
  FiniteModule M;
  M.name = R->name;
  M.size = R->n;
  M.add = R->add;
  M.zero = R->zero;
  M.neg = derive_neg(M.add, M.size, M.zero);
  M.ring = R;
  M.act_right = R->mul;
  return M;
}

FiniteModule ring_as_bimodule(const RingPtr& R) {
  FiniteModule M = ring_as_right_module(R);
  M.left_ring = R;
  M.act_left = R->mul;
  return M;
}

FiniteModule group_of(const FiniteRing& R) {
  FiniteModule M;
  M.name = R.name + "+";
  M.size = R.n;
  M.add = R.add;
  M.zero = R.zero;
  M.neg = derive_neg(M.add, M.size, M.zero);
  return M;
}

FiniteModule one_sided_ring_module(const RingPtr& R, Side side) {
  ensure(side != Side::TwoSided, ErrorKind::MalformedSpec,
         "one-sided module view needs a definite side");
  if (side == Side::Right) return ring_as_right_module(R);
  FiniteModule M = group_of(*R);
  M.name = R->name;
  M.left_ring = R;
  M.act_left = R->mul;
  return M;
}

// ---- subsets ----------------------------------------------------------------

bool subset_contains(const Subset& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

Subset subset_intersect(const Subset& a, const Subset& b) {
  Subset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool subset_includes(const Subset& big, const Subset& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Subset subset_sum(const FiniteModule& M, const Subset& a, const Subset& b) {
  std::vector<char> in(M.size, 0);
  for (int x : a)
    for (int y : b) in[M.add[x][y]] = 1;
  Subset out;
  for (int i = 0; i < M.size; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

bool is_subgroup(const FiniteModule& M, const Subset& s) {
  if (!subset_contains(s, M.zero)) return false;
  for (int x : s)
    for (int y : s)
      if (!subset_contains(s, M.add[x][y])) return false;
  return true;
}

bool is_submodule(const FiniteModule& M, const Subset& s) {
  if (!is_subgroup(M, s)) return false;
  if (M.has_right())
    for (int x : s)
      for (int r = 0; r < M.ring->n; ++r)
        if (!subset_contains(s, M.act_right[x][r])) return false;
  if (M.has_left())
    for (int x : s)
      for (int r = 0; r < M.left_ring->n; ++r)
        if (!subset_contains(s, M.act_left[r][x])) return false;
  return true;
}

bool is_ideal(const FiniteRing& R, const Subset& s, Side side) {
  FiniteModule G = group_of(R);
  if (!is_subgroup(G, s)) return false;
  if (side == Side::Right || side == Side::TwoSided)
    for (int x : s)
      for (int r = 0; r < R.n; ++r)
        if (!subset_contains(s, R.mul[x][r])) return false;
  if (side == Side::Left || side == Side::TwoSided)
    for (int x : s)
      for (int r = 0; r < R.n; ++r)
        if (!subset_contains(s, R.mul[r][x])) return false;
  return true;
}

Subset subgroup_closure(const FiniteModule& M, Subset seeds) {
  std::vector<char> in(M.size, 0);
  in[M.zero] = 1;
  for (int x : seeds) {
    ensure(0 <= x && x < M.size, ErrorKind::MalformedSpec,
           "closure seed out of range");
    in[x] = 1;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < M.size; ++x)
      if (in[x])
        for (int y = x; y < M.size; ++y)
          if (in[y] && !in[M.add[x][y]]) {
            in[M.add[x][y]] = 1;
            grew = true;
          }
  }
  Subset out;
  for (int i = 0; i < M.size; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

Subset submodule_closure(const FiniteModule& M, Subset seeds) {
  Subset cur = subgroup_closure(M, std::move(seeds));
  for (;;) {
    Subset grown = cur;
    std::vector<char> in(M.size, 0);
    for (int x : cur) in[x] = 1;
    bool grew = false;
    for (int x : cur) {
      if (M.has_right())
        for (int r = 0; r < M.ring->n; ++r)
          if (!in[M.act_right[x][r]]) {
            in[M.act_right[x][r]] = 1;
            grew = true;
          }
      if (M.has_left())
        for (int r = 0; r < M.left_ring->n; ++r)
          if (!in[M.act_left[r][x]]) {
            in[M.act_left[r][x]] = 1;
            grew = true;
          }
    }
    if (!grew) return cur;
    Subset next;
    for (int i = 0; i < M.size; ++i)
      if (in[i]) next.push_back(i);
    cur = subgroup_closure(M, next);
  }
}

Subset ideal_closure(const FiniteRing& R, Subset seeds, Side side) {
  RingPtr tmp;  // only used to build a module view; copies tables
  FiniteRing copy = R;
  tmp = std::make_shared<const FiniteRing>(std::move(copy));
  FiniteModule M = group_of(R);
  if (side == Side::Right || side == Side::TwoSided) {
    M.ring = tmp;
    M.act_right = R.mul;
  }
  if (side == Side::Left || side == Side::TwoSided) {
    M.left_ring = tmp;
    M.act_left = R.mul;
  }
  return submodule_closure(M, std::move(seeds));
}

// ---- derived modules --------------------------------------------------------

SubmoduleView submodule_as_module(const FiniteModule& M, const Subset& s) {
  ensure(is_submodule(M, s), ErrorKind::NotAnIdeal,
         "subset is not a submodule of " + M.name);
  SubmoduleView V;
  V.to_parent = s;
  V.from_parent.assign(M.size, -1);
  for (int i = 0; i < (int)s.size(); ++i) V.from_parent[s[i]] = i;
  FiniteModule& S = V.module;
  S.name = M.name + "|sub" + std::to_string(s.size());
  S.size = (int)s.size();
  S.add.assign(S.size, std::vector<int>(S.size));
  for (int i = 0; i < S.size; ++i)
    for (int j = 0; j < S.size; ++j)
      S.add[i][j] = V.from_parent[M.add[s[i]][s[j]]];
  S.zero = V.from_parent[M.zero];
  S.neg = derive_neg(S.add, S.size, S.zero);
  if (M.has_right()) {
    S.ring = M.ring;
    S.act_right.assign(S.size, std::vector<int>(M.ring->n));
    for (int i = 0; i < S.size; ++i)
      for (int r = 0; r < M.ring->n; ++r)
        S.act_right[i][r] = V.from_parent[M.act_right[s[i]][r]];
  }
  if (M.has_left()) {
    S.left_ring = M.left_ring;
    S.act_left.assign(M.left_ring->n, std::vector<int>(S.size));
    for (int r = 0; r < M.left_ring->n; ++r)
      for (int i = 0; i < S.size; ++i)
        S.act_left[r][i] = V.from_parent[M.act_left[r][s[i]]];
  }
  return V;
}

QuotientView quotient_module(const FiniteModule& M, const Subset& s) {
  ensure(is_submodule(M, s), ErrorKind::NotAnIdeal,
         "cannot form quotient: subset is not a submodule of " + M.name);
  QuotientView V;
  std::vector<int> least(M.size, -1);
  for (int x = 0; x < M.size; ++x) {
    int lo = x;
    for (int t : s) lo = std::min(lo, M.add[x][t]);
    least[x] = lo;
  }
  std::vector<int> reps;
  for (int x = 0; x < M.size; ++x)
    if (least[x] == x) reps.push_back(x);
  std::vector<int> idx(M.size, -1);
  for (int i = 0; i < (int)reps.size(); ++i) idx[reps[i]] = i;
  V.proj.assign(M.size, -1);
  for (int x = 0; x < M.size; ++x) V.proj[x] = idx[least[x]];
  V.rep = reps;
  FiniteModule& Q = V.module;
  Q.name = M.name + "/sub" + std::to_string(s.size());
  Q.size = (int)reps.size();
  Q.add.assign(Q.size, std::vector<int>(Q.size));
  for (int i = 0; i < Q.size; ++i)
    for (int j = 0; j < Q.size; ++j)
      Q.add[i][j] = V.proj[M.add[reps[i]][reps[j]]];
  Q.zero = V.proj[M.zero];
  Q.neg = derive_neg(Q.add, Q.size, Q.zero);
  if (M.has_right()) {
    Q.ring = M.ring;
    Q.act_right.assign(Q.size, std::vector<int>(M.ring->n));
    for (int i = 0; i < Q.size; ++i)
      for (int r = 0; r < M.ring->n; ++r)
        Q.act_right[i][r] = V.proj[M.act_right[reps[i]][r]];
  }
  if (M.has_left()) {
    Q.left_ring = M.left_ring;
    Q.act_left.assign(M.left_ring->n, std::vector<int>(Q.size));
    for (int r = 0; r < M.left_ring->n; ++r)
      for (int i = 0; i < Q.size; ++i)
        Q.act_left[r][i] = V.proj[M.act_left[r][reps[i]]];
  }
  return V;
}

// ---- enumerations -----------------------------------------------------------

bool subset_less(const Subset& a, const Subset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void sort_subsets(std::vector<Subset>& v) {
  std::sort(v.begin(), v.end(), subset_less);
}

// Join of two submodules is their sum; computed coset by coset.
static Subset submodule_join(const FiniteModule& M, const Subset& a,
                             const Subset& b) {
  std::vector<char> in(M.size, 0);
  for (int x : a) in[x] = 1;
  for (int c : b) {
    if (in[c]) continue;
    for (int x : a) in[M.add[x][c]] = 1;
  }
  Subset out;
  for (int i = 0; i < M.size; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

std::vector<Subset> enumerate_submodules(const FiniteModule& M) {
  std::set<Subset> cyclics;
  for (int x = 0; x < M.size; ++x) cyclics.insert(submodule_closure(M, {x}));
  std::set<Subset> all;
  std::deque<Subset> work;
  for (const auto& c : cyclics) {
    if (all.insert(c).second) work.push_back(c);
  }
  while (!work.empty()) {
    Subset cur = std::move(work.front());
    work.pop_front();
    for (const auto& c : cyclics) {
      if (subset_includes(cur, c)) continue;
      Subset j = submodule_join(M, cur, c);
      if (all.insert(j).second) work.push_back(j);
    }
  }
  std::vector<Subset> out(all.begin(), all.end());
  sort_subsets(out);
  return out;
}

std::vector<Subset> enumerate_submodules_over(const FiniteModule& M,
                                              const Subset& s) {
  QuotientView Q = quotient_module(M, s);
  std::vector<Subset> subs = enumerate_submodules(Q.module);
  std::vector<Subset> out;
  out.reserve(subs.size());
  for (const auto& t : subs) {
    std::vector<char> in(Q.module.size, 0);
    for (int x : t) in[x] = 1;
    Subset back;
    for (int x = 0; x < M.size; ++x)
      if (in[Q.proj[x]]) back.push_back(x);
    out.push_back(std::move(back));
  }
  sort_subsets(out);
  return out;
}

std::vector<Subset> enumerate_ideals(const FiniteRing& R, Side side) {
  FiniteRing copy = R;
  RingPtr P = std::make_shared<const FiniteRing>(std::move(copy));
  if (side == Side::Right) return enumerate_submodules(ring_as_right_module(P));
  if (side == Side::Left)
    return enumerate_submodules(ring_as_right_module(opposite_ring(P)));
  std::vector<Subset> right = enumerate_submodules(ring_as_right_module(P));
  std::vector<Subset> out;
  for (auto& s : right)
    if (is_ideal(R, s, Side::Left)) out.push_back(std::move(s));
  sort_subsets(out);
  return out;
}

Subset annihilator(int x, const FiniteModule& M, Side side) {
  ensure(0 <= x && x < M.size, ErrorKind::MalformedSpec,
         "annihilator: element out of range");
  Subset out;
  if (side == Side::Right) {
    ensure(M.has_right(), ErrorKind::MissingAction,
           "right annihilator needs a right action");
    for (int r = 0; r < M.ring->n; ++r)
      if (M.act_right[x][r] == M.zero) out.push_back(r);
    return out;
  }
  if (side == Side::Left) {
    ensure(M.has_left(), ErrorKind::MissingAction,
           "left annihilator needs a left action");
    for (int r = 0; r < M.left_ring->n; ++r)
      if (M.act_left[r][x] == M.zero) out.push_back(r);
    return out;
  }
  ensure(M.has_right() && M.has_left(), ErrorKind::MissingAction,
         "two-sided annihilator needs both actions");
  ensure(same_ring(M.ring, M.left_ring), ErrorKind::IncompatibleActions,
         "two-sided annihilator needs matching acting rings");
  return subset_intersect(annihilator(x, M, Side::Right),
                          annihilator(x, M, Side::Left));
}

Subset annihilator_right(int x, const FiniteModule& M) {
  return annihilator(x, M, Side::Right);
}

std::vector<int> additive_generators(const FiniteModule& M) {
  std::vector<int> gens;
  Subset have = {M.zero};
  for (int x = 0; x < M.size; ++x) {
    if (subset_contains(have, x)) continue;
    gens.push_back(x);
    Subset seeds = have;
    seeds.push_back(x);
    have = subgroup_closure(M, seeds);
    if ((int)have.size() == M.size) break;
  }
  return gens;
}

std::vector<int> module_generators(const FiniteModule& M) {
  std::vector<int> gens;
  Subset have = {M.zero};
  for (int x = 0; x < M.size; ++x) {
    if (subset_contains(have, x)) continue;
    gens.push_back(x);
    Subset seeds = have;
    seeds.push_back(x);
    have = submodule_closure(M, seeds);
    if ((int)have.size() == M.size) break;
  }
  return gens;
}

// ---- hom enumeration --------------------------------------------------------

namespace {

// Partial-map propagation shared by hom/derivation/isomorphism searches.
// `table` maps domain indices to codomain indices, -1 when unknown.
struct Propagator {
  const FiniteModule& A;
  const FiniteModule& B;
  bool use_right, use_left;
  std::vector<int> table;
  std::vector<int> defined;  // indices with known image, in discovery order

  Propagator(const FiniteModule& a, const FiniteModule& b, bool r, bool l)
      : A(a), B(b), use_right(r), use_left(l) {
    table.assign(A.size, -1);
  }

  bool define(int x, int y, std::vector<int>& queue) {
    if (table[x] != -1) return table[x] == y;
    table[x] = y;
    queue.push_back(x);
    return true;
  }

  // Closes the partial map under sums and actions. Returns false on conflict.
  bool propagate(std::vector<int> queue) {
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      int y = table[x];
      if (use_right)
        for (int r = 0; r < A.ring->n; ++r)
          if (!define(A.act_right[x][r], B.act_right[y][r], queue)) return false;
      if (use_left)
        for (int r = 0; r < A.left_ring->n; ++r)
          if (!define(A.act_left[r][x], B.act_left[r][y], queue)) return false;
      defined.push_back(x);
      for (size_t i = 0; i < defined.size(); ++i) {
        int d = defined[i];
        if (!define(A.add[x][d], B.add[y][table[d]], queue)) return false;
      }
    }
    return true;
  }
};

}  // namespace

bool is_module_hom(const FiniteModule& A, const FiniteModule& B,
                   const ModuleMap& f) {
  if ((int)f.table.size() != A.size) return false;
  for (int v : f.table)
    if (v < 0 || v >= B.size) return false;
  if (f.table[A.zero] != B.zero) return false;
  for (int x = 0; x < A.size; ++x)
    for (int y = 0; y < A.size; ++y)
      if (f.table[A.add[x][y]] != B.add[f.table[x]][f.table[y]]) return false;
  if (A.has_right() && B.has_right())
    for (int x = 0; x < A.size; ++x)
      for (int r = 0; r < A.ring->n; ++r)
        if (f.table[A.act_right[x][r]] != B.act_right[f.table[x]][r])
          return false;
  if (A.has_left() && B.has_left())
    for (int x = 0; x < A.size; ++x)
      for (int r = 0; r < A.left_ring->n; ++r)
        if (f.table[A.act_left[r][x]] != B.act_left[r][f.table[x]])
          return false;
  return true;
}

std::vector<ModuleMap> hom_set(const FiniteModule& A, const FiniteModule& B) {
  ensure(A.has_right() == B.has_right(), ErrorKind::IncompatibleActions,
         "hom_set: right actions present on only one side");
  ensure(A.has_left() == B.has_left(), ErrorKind::IncompatibleActions,
         "hom_set: left actions present on only one side");
  if (A.has_right())
    ensure(same_ring(A.ring, B.ring), ErrorKind::IncompatibleActions,
           "hom_set: right actions over different rings");
  if (A.has_left())
    ensure(same_ring(A.left_ring, B.left_ring), ErrorKind::IncompatibleActions,
           "hom_set: left actions over different rings");
  std::vector<int> gens = module_generators(A);
  std::vector<ModuleMap> found;

  std::function<void(const Propagator&, size_t)> dfs =
      [&](const Propagator& base, size_t gi) {
        // skip generators already forced by earlier choices
        size_t g = gi;
        while (g < gens.size() && base.table[gens[g]] != -1) ++g;
        if (g == gens.size()) {
          ModuleMap f{base.table};
          for (int& v : f.table)
            ensure(v != -1, ErrorKind::InternalInconsistency,
                   "hom search left an element unassigned");
          ensure(is_module_hom(A, B, f), ErrorKind::InternalInconsistency,
                 "hom search produced a non-homomorphism");
          found.push_back(std::move(f));
          return;
        }
        for (int y = 0; y < B.size; ++y) {
          Propagator p = base;
          std::vector<int> queue;
          if (!p.define(gens[g], y, queue)) continue;
          if (!p.propagate(std::move(queue))) continue;
          dfs(p, g + 1);
        }
      };

  Propagator root(A, B, A.has_right(), A.has_left());
  std::vector<int> queue;
  bool ok = root.define(A.zero, B.zero, queue) && root.propagate(std::move(queue));
  ensure(ok, ErrorKind::InternalInconsistency, "hom search: zero image conflict");
  dfs(root, 0);
  std::sort(found.begin(), found.end());
  return found;
}

// ---- derivations ------------------------------------------------------------

bool is_ring_derivation(const FiniteRing& R, const Derivation& d,
                        std::string* witness) {
  if ((int)d.table.size() != R.n) {
    if (witness) *witness = "table size mismatch";
    return false;
  }
  for (int v : d.table)
    if (v < 0 || v >= R.n) {
      if (witness) *witness = "entry out of range";
      return false;
    }
  for (int x = 0; x < R.n; ++x)
    for (int y = 0; y < R.n; ++y) {
      if (d.table[R.add[x][y]] != R.add[d.table[x]][d.table[y]]) {
        if (witness) *witness = "additivity fails at " + triple("", x, y);
        return false;
      }
      int lhs = d.table[R.mul[x][y]];
      int rhs = R.add[R.mul[d.table[x]][y]][R.mul[x][d.table[y]]];
      if (lhs != rhs) {
        if (witness) *witness = "product rule fails at " + triple("", x, y);
        return false;
      }
    }
  return true;
}

bool is_module_derivation(const FiniteModule& M, const Derivation& delta,
                          const Derivation& d, std::string* witness) {
  if ((int)d.table.size() != M.size) {
    if (witness) *witness = "table size mismatch";
    return false;
  }
  for (int v : d.table)
    if (v < 0 || v >= M.size) {
      if (witness) *witness = "entry out of range";
      return false;
    }
  for (int x = 0; x < M.size; ++x)
    for (int y = 0; y < M.size; ++y)
      if (d.table[M.add[x][y]] != M.add[d.table[x]][d.table[y]]) {
        if (witness) *witness = "additivity fails at " + triple("", x, y);
        return false;
      }
  if (M.has_right()) {
    ensure((int)delta.table.size() == M.ring->n, ErrorKind::MalformedSpec,
           "ring derivation table size mismatch");
    for (int x = 0; x < M.size; ++x)
      for (int r = 0; r < M.ring->n; ++r) {
        int lhs = d.table[M.act_right[x][r]];
        int rhs = M.add[M.act_right[d.table[x]][r]]
                       [M.act_right[x][delta.table[r]]];
        if (lhs != rhs) {
          if (witness)
            *witness = "right rule fails at " + triple("", x, r);
          return false;
        }
      }
  }
  if (M.has_left()) {
    ensure((int)delta.table.size() == M.left_ring->n, ErrorKind::MalformedSpec,
           "ring derivation table size mismatch");
    for (int r = 0; r < M.left_ring->n; ++r)
      for (int x = 0; x < M.size; ++x) {
        int lhs = d.table[M.act_left[r][x]];
        int rhs = M.add[M.act_left[delta.table[r]][x]]
                       [M.act_left[r][d.table[x]]];
        if (lhs != rhs) {
          if (witness) *witness = "left rule fails at " + triple("", r, x);
          return false;
        }
      }
  }
  return true;
}

// Backtracking over additive generators; the forcing rules close the partial
// table under sums and the applicable product rules.
namespace {

struct DerivSearch {
  const FiniteModule& M;          // carrier
  const Derivation* delta;        // null for the self-referential ring case
  const FiniteRing* R;            // ring law when delta == null
  std::vector<int> table;
  std::vector<int> defined;

  bool define(int x, int y, std::vector<int>& q) {
    if (table[x] != -1) return table[x] == y;
    table[x] = y;
    q.push_back(x);
    return true;
  }

  bool propagate(std::vector<int> q) {
    while (!q.empty()) {
      int x = q.back();
      q.pop_back();
      int dx = table[x];
      if (delta) {
        if (M.has_right())
          for (int r = 0; r < M.ring->n; ++r) {
            int val = M.add[M.act_right[dx][r]][M.act_right[x][delta->table[r]]];
            if (!define(M.act_right[x][r], val, q)) return false;
          }
        if (M.has_left())
          for (int r = 0; r < M.left_ring->n; ++r) {
            int val = M.add[M.act_left[delta->table[r]][x]][M.act_left[r][dx]];
            if (!define(M.act_left[r][x], val, q)) return false;
          }
      }
      defined.push_back(x);
      for (size_t i = 0; i < defined.size(); ++i) {
        int z = defined[i];
        if (!define(M.add[x][z], M.add[dx][table[z]], q)) return false;
        if (!delta) {
          // ring derivation: d(xz) = d(x) z + x d(z), both orders
          int a = R->add[R->mul[dx][z]][R->mul[x][table[z]]];
          if (!define(R->mul[x][z], a, q)) return false;
          int b = R->add[R->mul[table[z]][x]][R->mul[z][dx]];
          if (!define(R->mul[z][x], b, q)) return false;
        }
      }
    }
    return true;
  }
};

}  // namespace

std::vector<Derivation> enumerate_derivations(const FiniteRing& R) {
  FiniteModule G = group_of(R);
  std::vector<int> gens = additive_generators(G);
  std::vector<Derivation> found;
  std::function<void(const DerivSearch&, size_t)> dfs =
      [&](const DerivSearch& base, size_t gi) {
        size_t g = gi;
        while (g < gens.size() && base.table[gens[g]] != -1) ++g;
        if (g == gens.size()) {
          Derivation d{base.table};
          if (is_ring_derivation(R, d)) found.push_back(std::move(d));
          return;
        }
        for (int y = 0; y < R.n; ++y) {
          DerivSearch s = base;
          std::vector<int> q;
          if (!s.define(gens[g], y, q)) continue;
          if (!s.propagate(std::move(q))) continue;
          dfs(s, g + 1);
        }
      };
  DerivSearch root{G, nullptr, &R, std::vector<int>(R.n, -1), {}};
  std::vector<int> q;
  bool ok = root.define(R.zero, R.zero, q) && root.propagate(std::move(q));
  ensure(ok, ErrorKind::InternalInconsistency, "derivation search: zero conflict");
  dfs(root, 0);
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Derivation> enumerate_module_derivations(
    const FiniteModule& M, const Derivation& delta,
    const std::vector<std::pair<int, int>>& pins, long long budget) {
  std::vector<int> gens = additive_generators(M);
  std::vector<Derivation> found;
  long long visited = 0;
  std::function<void(const DerivSearch&, size_t)> dfs =
      [&](const DerivSearch& base, size_t gi) {
        if (budget > 0 && ++visited > budget)
          fail(ErrorKind::SearchSpaceTooLarge,
               "derivation search on " + M.name + " exceeded its node budget");
        size_t g = gi;
        while (g < gens.size() && base.table[gens[g]] != -1) ++g;
        if (g == gens.size()) {
          Derivation d{base.table};
          if (is_module_derivation(M, delta, d)) found.push_back(std::move(d));
          return;
        }
        for (int y = 0; y < M.size; ++y) {
          DerivSearch s = base;
          std::vector<int> q;
          if (!s.define(gens[g], y, q)) continue;
          if (!s.propagate(std::move(q))) continue;
          dfs(s, g + 1);
        }
      };
  DerivSearch root{M, &delta, nullptr, std::vector<int>(M.size, -1), {}};
  std::vector<int> q;
  bool ok = root.define(M.zero, M.zero, q);
  for (auto [x, y] : pins) {
    ensure(0 <= x && x < M.size && 0 <= y && y < M.size,
           ErrorKind::MalformedSpec, "derivation pin out of range");
    ok = ok && root.define(x, y, q);
  }
  ok = ok && root.propagate(std::move(q));
  if (!ok) return found;  // pins already contradictory: no such derivation
  dfs(root, 0);
  std::sort(found.begin(), found.end());
  return found;
}

Derivation inner_derivation(const FiniteRing& R, int a) {
  ensure(0 <= a && a < R.n, ErrorKind::MalformedSpec,
         "inner derivation: element out of range");
  std::vector<int> neg = derive_neg(R.add, R.n, R.zero);
  Derivation d;
  d.table.resize(R.n);
  for (int x = 0; x < R.n; ++x)
    d.table[x] = R.add[R.mul[a][x]][neg[R.mul[x][a]]];
  return d;
}

Derivation zero_derivation(int n, int zero_index) {
  Derivation d;
  d.table.assign(n, zero_index);
  return d;
}

// ---- structure probes -------------------------------------------------------

std::vector<int> abelian_invariants(const FiniteModule& M) {
  int n = M.size;
  // order of each element
  std::vector<int> ord(n, 0);
  for (int x = 0; x < n; ++x) {
    int cur = x, k = 1;
    while (cur != M.zero) {
      cur = M.add[cur][x];
      ++k;
    }
    ord[x] = k;
  }
  // primary parts per prime
  std::map<int, std::vector<int>> primary;  // p -> exponents (descending)
  int total = n;
  for (int p = 2; p <= total; ++p) {
    if (total % p != 0) continue;
    // c_k = #elements with order dividing p^k
    std::vector<long long> c = {1};
    for (;;) {
      long long pk = 1;
      for (size_t i = 0; i < c.size(); ++i) pk *= p;
      long long cnt = 0;
      for (int x = 0; x < n; ++x)
        if (pk % ord[x] == 0) ++cnt;
      if (cnt == c.back()) break;
      c.push_back(cnt);
    }
    std::vector<int> exps;
    for (size_t k = 1; k < c.size(); ++k) {
      long long ratio = c[k] / c[k - 1];
      int copies = 0;
      while (ratio > 1) {
        ratio /= p;
        ++copies;
      }
      // `copies` factors of order >= p^k
      exps.push_back(copies);
    }
    // exps[k-1] = number of cyclic p-factors with exponent >= k
    std::vector<int> parts;
    for (size_t k = 0; k < exps.size(); ++k) {
      int here = exps[k] - (k + 1 < exps.size() ? exps[k + 1] : 0);
      for (int i = 0; i < here; ++i) parts.push_back((int)k + 1);
    }
    std::sort(parts.rbegin(), parts.rend());
    if (!parts.empty()) primary[p] = parts;
    while (total % p == 0) total /= p;
  }
  // merge primary parts into invariant factors d_1 | d_2 | ...
  size_t depth = 0;
  for (auto& [p, parts] : primary) depth = std::max(depth, parts.size());
  std::vector<long long> inv(depth, 1);
  for (auto& [p, parts] : primary)
    for (size_t i = 0; i < parts.size(); ++i) {
      long long f = 1;
      for (int k = 0; k < parts[i]; ++k) f *= p;
      inv[i] *= f;
    }
  std::sort(inv.begin(), inv.end());
  std::vector<int> out;
  for (long long v : inv)
    if (v > 1) out.push_back((int)v);
  return out;
}

namespace {

std::optional<RingMap> ring_map_search(const FiniteRing& A, const FiniteRing& B,
                                       const std::vector<std::pair<int, int>>& pin,
                                       bool need_injective, bool need_surjective) {
  if (need_surjective && A.n != B.n) return std::nullopt;
  FiniteModule GA = group_of(A);
  std::vector<int> gens = additive_generators(GA);
  std::optional<RingMap> result;

  struct State {
    std::vector<int> table;
    std::vector<int> defined;
  };
  auto define = [&](State& s, int x, int y, std::vector<int>& q) {
    if (s.table[x] != -1) return s.table[x] == y;
    s.table[x] = y;
    q.push_back(x);
    return true;
  };
  auto propagate = [&](State& s, std::vector<int> q) {
    while (!q.empty()) {
      int x = q.back();
      q.pop_back();
      int y = s.table[x];
      s.defined.push_back(x);
      for (size_t i = 0; i < s.defined.size(); ++i) {
        int d = s.defined[i];
        if (!define(s, A.add[x][d], B.add[y][s.table[d]], q)) return false;
        if (!define(s, A.mul[x][d], B.mul[y][s.table[d]], q)) return false;
        if (!define(s, A.mul[d][x], B.mul[s.table[d]][y], q)) return false;
      }
    }
    return true;
  };
  std::function<void(const State&, size_t)> dfs = [&](const State& base,
                                                      size_t gi) {
    if (result) return;
    size_t g = gi;
    while (g < gens.size() && base.table[gens[g]] != -1) ++g;
    if (g == gens.size()) {
      RingMap f{base.table};
      for (int v : f.table)
        if (v == -1) return;
      if (need_injective) {
        std::vector<char> seen(B.n, 0);
        for (int v : f.table) {
          if (seen[v]) return;
          seen[v] = 1;
        }
      }
      // full law check (propagation already enforces, keep as a guard)
      for (int x = 0; x < A.n; ++x)
        for (int y = 0; y < A.n; ++y) {
          if (f.table[A.add[x][y]] != B.add[f.table[x]][f.table[y]]) return;
          if (f.table[A.mul[x][y]] != B.mul[f.table[x]][f.table[y]]) return;
        }
      result = std::move(f);
      return;
    }
    for (int y = 0; y < B.n && !result; ++y) {
      State s = base;
      std::vector<int> q;
      if (!define(s, gens[g], y, q)) continue;
      if (!propagate(s, std::move(q))) continue;
      dfs(s, g + 1);
    }
  };
  State root{std::vector<int>(A.n, -1), {}};
  std::vector<int> q;
  if (!define(root, A.zero, B.zero, q)) return std::nullopt;
  if (!define(root, A.one, B.one, q)) return std::nullopt;
  for (auto [x, y] : pin)
    if (!define(root, x, y, q)) return std::nullopt;
  if (!propagate(root, std::move(q))) return std::nullopt;
  dfs(root, 0);
  return result;
}

}  // namespace

std::optional<RingMap> find_ring_isomorphism(
    const FiniteRing& A, const FiniteRing& B,
    const std::vector<std::pair<int, int>>& pin) {
  if (A.n != B.n) return std::nullopt;
  return ring_map_search(A, B, pin, true, true);
}

std::optional<RingMap> find_ring_embedding(
    const FiniteRing& A, const FiniteRing& B,
    const std::vector<std::pair<int, int>>& pin) {
  return ring_map_search(A, B, pin, true, false);
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->n == b->n && a->zero == b->zero && a->one == b->one &&
         a->add == b->add && a->mul == b->mul;
}

// ---- catalog for isomorphism hints ------------------------------------------

namespace {

RingPtr cyclic_ring(int n) {
  FiniteRing R;
  R.name = "Z/" + std::to_string(n);
  R.n = n;
  R.add.assign(n, std::vector<int>(n));
  R.mul.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      R.add[x][y] = (x + y) % n;
      R.mul[x][y] = (x * y) % n;
    }
  R.zero = 0;
  R.one = n == 1 ? 0 : 1;
  return ring_from_tables(std::move(R));
}

RingPtr product_ring(const RingPtr& A, const RingPtr& B, const std::string& nm) {
  FiniteRing R;
  R.name = nm;
  R.n = A->n * B->n;
  auto pack = [&](int a, int b) { return a * B->n + b; };
  R.add.assign(R.n, std::vector<int>(R.n));
  R.mul.assign(R.n, std::vector<int>(R.n));
  for (int a = 0; a < A->n; ++a)
    for (int b = 0; b < B->n; ++b)
      for (int c = 0; c < A->n; ++c)
        for (int d = 0; d < B->n; ++d) {
          R.add[pack(a, b)][pack(c, d)] = pack(A->add[a][c], B->add[b][d]);
          R.mul[pack(a, b)][pack(c, d)] = pack(A->mul[a][c], B->mul[b][d]);
        }
  R.zero = pack(A->zero, B->zero);
  R.one = pack(A->one, B->one);
  return ring_from_tables(std::move(R));
}

RingPtr f4_ring() {
  // F4 with elements 0, 1, w, w+1
  FiniteRing R;
  R.name = "F4";
  R.n = 4;
  R.add = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  R.mul = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  R.zero = 0;
  R.one = 1;
  return ring_from_tables(std::move(R));
}

RingPtr dual_numbers_ring() {
  // F2[t]/(t^2), elements 0, 1, t, 1+t
  FiniteRing R;
  R.name = "F2[t]/(t^2)";
  R.n = 4;
  R.add = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  R.mul = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 0, 2}, {0, 3, 2, 1}};
  R.zero = 0;
  R.one = 1;
  return ring_from_tables(std::move(R));
}

// 2x2 matrices over F2 packed as bit masks (e11, e12, e21, e22) -> bits 0..3.
RingPtr m2f2_ring() {
  FiniteRing R;
  R.name = "M2(F2)";
  R.n = 16;
  R.add.assign(16, std::vector<int>(16));
  R.mul.assign(16, std::vector<int>(16));
  auto bit = [](int m, int i, int j) { return (m >> (i * 2 + j)) & 1; };
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      R.add[a][b] = a ^ b;
      int prod = 0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          int v = 0;
          for (int k = 0; k < 2; ++k) v ^= bit(a, i, k) & bit(b, k, j);
          prod |= v << (i * 2 + j);
        }
      R.mul[a][b] = prod;
    }
  R.zero = 0;
  R.one = 0b1001;
  return ring_from_tables(std::move(R));
}

// Upper triangular 2x2 over F2 packed as (e11, e12, e22) -> bits 0..2.
RingPtr t2f2_ring() {
  FiniteRing R;
  R.name = "T2(F2)";
  R.n = 8;
  R.add.assign(8, std::vector<int>(8));
  R.mul.assign(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      R.add[a][b] = a ^ b;
      int a11 = a & 1, a12 = (a >> 1) & 1, a22 = (a >> 2) & 1;
      int b11 = b & 1, b12 = (b >> 1) & 1, b22 = (b >> 2) & 1;
      int c11 = a11 & b11;
      int c12 = (a11 & b12) ^ (a12 & b22);
      int c22 = a22 & b22;
      R.mul[a][b] = c11 | (c12 << 1) | (c22 << 2);
    }
  R.zero = 0;
  R.one = 0b101;
  return ring_from_tables(std::move(R));
}

}  // namespace

std::optional<std::string> ring_iso_hint(const FiniteRing& R) {
  static const std::vector<RingPtr> catalog = [] {
    std::vector<RingPtr> v;
    for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 16})
      v.push_back(cyclic_ring(n));
    v.push_back(f4_ring());
    v.push_back(dual_numbers_ring());
    v.push_back(product_ring(cyclic_ring(2), cyclic_ring(2), "F2 x F2"));
    v.push_back(product_ring(cyclic_ring(2), cyclic_ring(3), "Z/2 x Z/3"));
    v.push_back(product_ring(cyclic_ring(2), cyclic_ring(4), "Z/2 x Z/4"));
    v.push_back(product_ring(cyclic_ring(4), cyclic_ring(4), "Z/4 x Z/4"));
    v.push_back(t2f2_ring());
    v.push_back(m2f2_ring());
    v.push_back(product_ring(f4_ring(), f4_ring(), "F4 x F4"));
    return v;
  }();
  for (const auto& c : catalog) {
    if (c->n != R.n) continue;
    if (find_ring_isomorphism(R, *c)) return c->name;
  }
  return std::nullopt;
}

}  // namespace torsionlab
