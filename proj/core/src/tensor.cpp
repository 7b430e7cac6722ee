#include "torsionlab/tensor.hpp"

#include <algorithm>
#include <cstdlib>

namespace torsionlab {

namespace {

long long chk_add(long long a, long long b) {
  __int128 r = (__int128)a + b;
  ensure(r <= INT64_MAX / 4 && r >= INT64_MIN / 4,
         ErrorKind::InternalInconsistency, "integer overflow in tensor engine");
  return (long long)r;
}
long long chk_mul(long long a, long long b) {
  __int128 r = (__int128)a * b;
  ensure(r <= INT64_MAX / 4 && r >= INT64_MIN / 4,
         ErrorKind::InternalInconsistency, "integer overflow in tensor engine");
  return (long long)r;
}

long long pos_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

int element_order(const FiniteModule& M, int x) {
  int cur = x, k = 1;
  while (cur != M.zero) {
    cur = M.add[cur][x];
    ++k;
  }
  return k;
}

SmithForm smith_normal_form(Mat A) {
  int rows = (int)A.size();
  int cols = rows ? (int)A[0].size() : 0;
  SmithForm S;
  S.U.assign(rows, std::vector<long long>(rows, 0));
  S.V.assign(cols, std::vector<long long>(cols, 0));
  S.Vinv.assign(cols, std::vector<long long>(cols, 0));
  for (int i = 0; i < rows; ++i) S.U[i][i] = 1;
  for (int i = 0; i < cols; ++i) S.V[i][i] = S.Vinv[i][i] = 1;

  auto swap_rows = [&](int i, int j) {
    if (i == j) return;
    std::swap(A[i], A[j]);
    std::swap(S.U[i], S.U[j]);
  };
  auto swap_cols = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows; ++r) std::swap(A[r][i], A[r][j]);
    for (int r = 0; r < cols; ++r) std::swap(S.V[r][i], S.V[r][j]);
    std::swap(S.Vinv[i], S.Vinv[j]);
  };
  // row_j -= k * row_i
  auto add_row = [&](int i, int j, long long k) {
    if (k == 0) return;
    for (int c = 0; c < cols; ++c)
      A[j][c] = chk_add(A[j][c], -chk_mul(k, A[i][c]));
    for (int c = 0; c < rows; ++c)
      S.U[j][c] = chk_add(S.U[j][c], -chk_mul(k, S.U[i][c]));
  };
  // col_j -= k * col_i; inverse tracked as row_i += k * row_j on Vinv
  auto add_col = [&](int i, int j, long long k) {
    if (k == 0) return;
    for (int r = 0; r < rows; ++r)
      A[r][j] = chk_add(A[r][j], -chk_mul(k, A[r][i]));
    for (int r = 0; r < cols; ++r)
      S.V[r][j] = chk_add(S.V[r][j], -chk_mul(k, S.V[r][i]));
    for (int c = 0; c < cols; ++c)
      S.Vinv[i][c] = chk_add(S.Vinv[i][c], chk_mul(k, S.Vinv[j][c]));
  };
  auto negate_row = [&](int i) {
    for (int c = 0; c < cols; ++c) A[i][c] = -A[i][c];
    for (int c = 0; c < rows; ++c) S.U[i][c] = -S.U[i][c];
  };

  int t = 0;
  int lim = std::min(rows, cols);
  while (t < lim) {
    // find smallest nonzero entry in the remaining block
    int pr = -1, pc = -1;
    long long best = 0;
    for (int r = t; r < rows; ++r)
      for (int c = t; c < cols; ++c)
        if (A[r][c] != 0 &&
            (pr < 0 || std::llabs(A[r][c]) < best)) {
          best = std::llabs(A[r][c]);
          pr = r;
          pc = c;
        }
    if (pr < 0) break;  // remaining block is zero
    swap_rows(t, pr);
    swap_cols(t, pc);
    if (A[t][t] < 0) negate_row(t);
    bool clean = true;
    for (int r = t + 1; r < rows; ++r) {
      long long q = A[r][t] / A[t][t];
      add_row(t, r, q);
      if (A[r][t] != 0) clean = false;
    }
    for (int c = t + 1; c < cols; ++c) {
      long long q = A[t][c] / A[t][t];
      add_col(t, c, q);
      if (A[t][c] != 0) clean = false;
    }
    if (!clean) continue;  // remainders became new, smaller pivot candidates
    // divisibility: pivot must divide every remaining entry
    bool fixed = false;
    for (int r = t + 1; r < rows && !fixed; ++r)
      for (int c = t + 1; c < cols && !fixed; ++c)
        if (A[r][c] % A[t][t] != 0) {
          add_row(r, t, -1);  // row_t += row_r
          fixed = true;
        }
    if (fixed) continue;
    ++t;
  }
  S.diag.assign(lim, 0);
  for (int i = 0; i < lim; ++i) S.diag[i] = A[i][i];
  return S;
}

GroupPresentation present_group(const FiniteModule& G) {
  GroupPresentation P;
  P.gens = additive_generators(G);
  int p = (int)P.gens.size();
  P.expr.assign(G.size, {});
  std::vector<char> have(G.size, 0);
  P.expr[G.zero] = std::vector<long long>(p, 0);
  have[G.zero] = 1;
  std::vector<int> members = {G.zero};
  P.rels.clear();
  for (int i = 0; i < p; ++i) {
    int g = P.gens[i];
    // order of g over the previous subgroup
    int t = g, o = 1;
    while (!have[t]) {
      t = G.add[t][g];
      ++o;
    }
    std::vector<long long> rel(p, 0);
    rel[i] = o;
    for (int k = 0; k < p; ++k) rel[k] = chk_add(rel[k], -P.expr[t][k]);
    P.rels.push_back(std::move(rel));
    // extend expressions over the new coset decomposition
    std::vector<int> prev = members;
    int shift = G.zero;
    for (int c = 1; c < o; ++c) {
      shift = G.add[shift][g];
      for (int h : prev) {
        int x = G.add[h][shift];
        ensure(!have[x], ErrorKind::InternalInconsistency,
               "coset decomposition collision");
        have[x] = 1;
        P.expr[x] = P.expr[h];
        P.expr[x][i] += c;
        members.push_back(x);
      }
    }
  }
  ensure((int)members.size() == G.size, ErrorKind::InternalInconsistency,
         "generators fail to span the group");
  return P;
}

namespace {

// shared construction for both tensor variants
TensorGroup build_tensor(const FiniteModule& A, const FiniteModule& B,
                         bool balanced) {
  if (balanced) {
    ensure(A.has_right(), ErrorKind::MissingAction,
           "tensor over a ring needs a right action on the first factor");
    ensure(B.has_left(), ErrorKind::MissingAction,
           "tensor over a ring needs a left action on the second factor");
    ensure(same_ring(A.ring, B.left_ring), ErrorKind::IncompatibleActions,
           "tensor over a ring needs both factors over the same ring");
  }
  GroupPresentation PA = present_group(A);
  GroupPresentation PB = present_group(B);
  int p = (int)PA.gens.size(), q = (int)PB.gens.size();
  int N = p * q;

  Mat rels;
  // relations of A tensored with each B-generator
  for (const auto& r : PA.rels)
    for (int j = 0; j < q; ++j) {
      std::vector<long long> row(N, 0);
      for (int i = 0; i < p; ++i) row[i * q + j] = r[i];
      rels.push_back(std::move(row));
    }
  for (const auto& r : PB.rels)
    for (int i = 0; i < p; ++i) {
      std::vector<long long> row(N, 0);
      for (int j = 0; j < q; ++j) row[i * q + j] = r[j];
      rels.push_back(std::move(row));
    }
  if (balanced) {
    const FiniteRing& R = *A.ring;
    for (int i = 0; i < p; ++i)
      for (int rr = 0; rr < R.n; ++rr) {
        int mr = A.act_right[PA.gens[i]][rr];
        for (int j = 0; j < q; ++j) {
          int rn = B.act_left[rr][PB.gens[j]];
          // (m.r) (x) n - m (x) (r.n)
          std::vector<long long> row(N, 0);
          for (int a = 0; a < p; ++a)
            row[a * q + j] = chk_add(row[a * q + j], PA.expr[mr][a]);
          for (int b = 0; b < q; ++b)
            row[i * q + b] = chk_add(row[i * q + b], -PB.expr[rn][b]);
          bool nonzero = false;
          for (long long v : row) nonzero |= (v != 0);
          if (nonzero) rels.push_back(std::move(row));
        }
      }
  }
  if (rels.empty()) rels.push_back(std::vector<long long>(N, 0));

  SmithForm S = smith_normal_form(rels);
  int lim = (int)S.diag.size();
  std::vector<long long> full(N, 0);
  for (int k = 0; k < N; ++k) full[k] = k < lim ? S.diag[k] : 0;
  for (long long d : full)
    ensure(d != 0, ErrorKind::InternalInconsistency,
           "tensor group of finite groups came out infinite");

  TensorGroup T;
  T.nA = A.size;
  T.nB = B.size;
  T.gen_a = PA.gens;
  T.gen_b = PB.gens;
  std::vector<int> keep;  // coordinates with order > 1
  for (int k = 0; k < N; ++k)
    if (full[k] > 1) {
      keep.push_back(k);
      T.dims.push_back(full[k]);
    }
  int K = (int)keep.size();
  long long order = 1;
  for (long long d : T.dims) {
    order = chk_mul(order, d);
    ensure(order <= 1 << 20, ErrorKind::SearchSpaceTooLarge,
           "tensor group too large to tabulate");
  }
  int n = (int)order;

  // strides, last coordinate fastest
  std::vector<long long> stride(K, 1);
  for (int k = K - 2; k >= 0; --k) stride[k] = stride[k + 1] * T.dims[k + 1];

  T.coords.assign(n, std::vector<int>(K, 0));
  for (int e = 0; e < n; ++e) {
    long long rem = e;
    for (int k = 0; k < K; ++k) {
      T.coords[e][k] = (int)(rem / stride[k]);
      rem %= stride[k];
    }
  }

  FiniteModule& G = T.group;
  G.name = "tensor(" + A.name + "," + B.name + ")";
  G.size = n;
  G.zero = 0;
  G.add.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      long long idx = 0;
      for (int k = 0; k < K; ++k)
        idx += stride[k] * ((T.coords[x][k] + T.coords[y][k]) % T.dims[k]);
      G.add[x][y] = (int)idx;
    }
  G.neg.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    long long idx = 0;
    for (int k = 0; k < K; ++k)
      idx += stride[k] * ((T.dims[k] - T.coords[x][k]) % T.dims[k]);
    G.neg[x] = (int)idx;
  }

  // image of a generator-pair coefficient vector under Z^N -> group
  auto project = [&](const std::vector<long long>& vec) {
    long long idx = 0;
    for (int k = 0; k < K; ++k) {
      long long c = 0;
      for (int a = 0; a < N; ++a)
        c = chk_add(c, chk_mul(vec[a], S.V[a][keep[k]]));
      idx += stride[k] * pos_mod(c, T.dims[k]);
    }
    return (int)idx;
  };

  T.pure.assign(A.size, std::vector<int>(B.size));
  std::vector<long long> vec(N);
  for (int a = 0; a < A.size; ++a)
    for (int b = 0; b < B.size; ++b) {
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
          vec[i * q + j] = chk_mul(PA.expr[a][i], PB.expr[b][j]);
      T.pure[a][b] = project(vec);
    }

  T.basis_pre.assign(K, std::vector<long long>(N, 0));
  for (int k = 0; k < K; ++k)
    for (int a = 0; a < N; ++a) T.basis_pre[k][a] = S.Vinv[keep[k]][a];

  // guard: each basis preimage really lands on the basis element
  for (int k = 0; k < K; ++k) {
    int got = project(T.basis_pre[k]);
    long long want = stride[k] % order;
    ensure(got == (int)want, ErrorKind::InternalInconsistency,
           "tensor basis preimage check failed");
  }
  return T;
}

void scaled_add(const FiniteModule& C, const std::vector<int>& ord, int& acc,
                int x, long long c) {
  long long r = pos_mod(c, ord[x]);
  for (long long i = 0; i < r; ++i) acc = C.add[acc][x];
}

}  // namespace

TensorGroup tensor_over_Z(const FiniteModule& A, const FiniteModule& B) {
  return build_tensor(A, B, false);
}

TensorGroup tensor_over_R(const FiniteModule& M, const FiniteModule& N) {
  return build_tensor(M, N, true);
}

std::vector<int> extend_additive(const TensorGroup& T, const FiniteModule& C,
                                 const std::function<int(int, int)>& on_pure,
                                 const std::string& what) {
  int K = (int)T.dims.size();
  int p = (int)T.gen_a.size(), q = (int)T.gen_b.size();
  std::vector<int> ord(C.size);
  for (int x = 0; x < C.size; ++x) ord[x] = element_order(C, x);
  // image of each coordinate basis element
  std::vector<int> basis_img(K, C.zero);
  for (int k = 0; k < K; ++k) {
    int acc = C.zero;
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < q; ++j) {
        long long c = T.basis_pre[k][i * q + j];
        if (c != 0) scaled_add(C, ord, acc, on_pure(T.gen_a[i], T.gen_b[j]), c);
      }
    basis_img[k] = acc;
  }
  std::vector<int> table(T.group.size, C.zero);
  for (int e = 0; e < T.group.size; ++e) {
    int acc = C.zero;
    for (int k = 0; k < K; ++k)
      if (T.coords[e][k]) scaled_add(C, ord, acc, basis_img[k], T.coords[e][k]);
    table[e] = acc;
  }
  // the assignment factors through the tensor group iff the extension agrees
  // with it on every pure tensor
  for (int a = 0; a < T.nA; ++a)
    for (int b = 0; b < T.nB; ++b)
      if (table[T.pure[a][b]] != on_pure(a, b))
        fail(ErrorKind::IllDefined,
             what + ": assignment does not respect the tensor relations at (" +
                 std::to_string(a) + "," + std::to_string(b) + ")");
  return table;
}

TensorRing tensor_ring(const RingPtr& S, const RingPtr& R) {
  TensorRing out;
  out.S = S;
  out.R = R;
  FiniteModule GA = group_of(*S);
  FiniteModule GB = group_of(*R);
  out.data = tensor_over_Z(GA, GB);
  TensorGroup& T = out.data;
  int n = T.group.size;
  int K = (int)T.dims.size();
  int p = (int)T.gen_a.size(), q = (int)T.gen_b.size();

  std::vector<int> ord(n);
  for (int x = 0; x < n; ++x) ord[x] = element_order(T.group, x);

  // products of coordinate basis elements
  std::vector<std::vector<int>> B(K, std::vector<int>(K, 0));
  for (int k = 0; k < K; ++k)
    for (int l = 0; l < K; ++l) {
      int acc = T.group.zero;
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
          long long a = T.basis_pre[k][i * q + j];
          if (a == 0) continue;
          for (int i2 = 0; i2 < p; ++i2)
            for (int j2 = 0; j2 < q; ++j2) {
              long long b = T.basis_pre[l][i2 * q + j2];
              if (b == 0) continue;
              // (u (x) v)(u' (x) v') = uu' (x) v'v
              int u = S->mul[T.gen_a[i]][T.gen_a[i2]];
              int v = R->mul[T.gen_b[j2]][T.gen_b[j]];
              scaled_add(T.group, ord, acc, T.pure[u][v], chk_mul(a, b));
            }
        }
      B[k][l] = acc;
    }

  FiniteRing ring;
  ring.name = T.group.name;
  ring.n = n;
  ring.add = T.group.add;
  ring.zero = 0;
  ring.mul.assign(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x) {
    // partial sums over the left factor's coordinates
    std::vector<int> row(K, T.group.zero);
    for (int l = 0; l < K; ++l) {
      int acc = T.group.zero;
      for (int k = 0; k < K; ++k)
        if (T.coords[x][k])
          scaled_add(T.group, ord, acc, B[k][l], T.coords[x][k]);
      row[l] = acc;
    }
    for (int y = 0; y < n; ++y) {
      int acc = T.group.zero;
      for (int l = 0; l < K; ++l)
        if (T.coords[y][l]) scaled_add(T.group, ord, acc, row[l], T.coords[y][l]);
      ring.mul[x][y] = acc;
    }
  }
  ring.one = T.pure[S->one][R->one];
  out.ring = ring_from_tables(std::move(ring));

  // guard: pure products multiply as pure tensors of products
  for (int u = 0; u < S->n; ++u)
    for (int v = 0; v < R->n; ++v)
      for (int u2 = 0; u2 < S->n; ++u2)
        for (int v2 = 0; v2 < R->n; ++v2)
          ensure(out.ring->mul[T.pure[u][v]][T.pure[u2][v2]] ==
                     T.pure[S->mul[u][u2]][R->mul[v2][v]],
                 ErrorKind::InternalInconsistency,
                 "tensor ring multiplication disagrees on pure tensors");
  return out;
}

FiniteModule bimodule_as_tensor_module(const FiniteModule& M,
                                       const TensorRing& T) {
  ensure(M.has_right() && M.has_left(), ErrorKind::MissingAction,
         "tensor-module construction needs a bimodule");
  ensure(same_ring(M.ring, T.S), ErrorKind::IncompatibleActions,
         "bimodule right ring must match the first tensor slot");
  ensure(same_ring(M.left_ring, T.R), ErrorKind::IncompatibleActions,
         "bimodule left ring must match the second tensor slot");
  const TensorGroup& D = T.data;
  int K = (int)D.dims.size();
  int p = (int)D.gen_a.size(), q = (int)D.gen_b.size();
  std::vector<int> ord(M.size);
  for (int x = 0; x < M.size; ++x) ord[x] = element_order(M, x);

  FiniteModule out;
  out.name = M.name + " over " + T.ring->name;
  out.size = M.size;
  out.add = M.add;
  out.zero = M.zero;
  out.neg = M.neg;
  out.ring = T.ring;
  out.act_right.assign(M.size, std::vector<int>(T.ring->n, M.zero));
  for (int x = 0; x < M.size; ++x) {
    // image of x under each coordinate basis element, x . (u (x) v) = v x u
    std::vector<int> basis_img(K, M.zero);
    for (int k = 0; k < K; ++k) {
      int acc = M.zero;
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
          long long c = D.basis_pre[k][i * q + j];
          if (c == 0) continue;
          int val = M.act_left[D.gen_b[j]][M.act_right[x][D.gen_a[i]]];
          scaled_add(M, ord, acc, val, c);
        }
      basis_img[k] = acc;
    }
    for (int t = 0; t < T.ring->n; ++t) {
      int acc = M.zero;
      for (int k = 0; k < K; ++k)
        if (D.coords[t][k])
          scaled_add(M, ord, acc, basis_img[k], D.coords[t][k]);
      out.act_right[x][t] = acc;
    }
  }
  validate_module(out);
  // guard: pure tensors act as the two-sided product
  for (int x = 0; x < M.size; ++x)
    for (int u = 0; u < T.S->n; ++u)
      for (int v = 0; v < T.R->n; ++v)
        ensure(out.act_right[x][D.pure[u][v]] ==
                   M.act_left[v][M.act_right[x][u]],
               ErrorKind::InternalInconsistency,
               "tensor-module action disagrees on pure tensors");
  return out;
}

}  // namespace torsionlab
