#include "ncpart/linmap.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "ncpart/projective.hpp"

namespace ncpart {

namespace {

long long checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error(Err::RangeError, "rational overflow");
  return static_cast<long long>(v);
}

long long gcd_ll(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    const long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long ipow(long long base, int e) {
  long long v = 1;
  for (int i = 0; i < e; ++i) v = checked(static_cast<__int128>(v) * base);
  return v;
}

}  // namespace

Rat::Rat(long long n, long long d) {
  if (d == 0) throw Error(Err::RangeError, "zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const long long g = gcd_ll(n, d);
  num = g ? n / g : 0;
  den = g ? d / g : 1;
  if (num == 0) den = 1;
}

Rat Rat::operator+(const Rat& o) const {
  return Rat(checked(static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den),
             checked(static_cast<__int128>(den) * o.den));
}

Rat Rat::operator-(const Rat& o) const { return *this + Rat(-o.num, o.den); }

Rat Rat::operator*(const Rat& o) const {
  return Rat(checked(static_cast<__int128>(num) * o.num), checked(static_cast<__int128>(den) * o.den));
}

Rat Rat::operator/(const Rat& o) const {
  if (o.num == 0) throw Error(Err::RangeError, "division by zero");
  return Rat(checked(static_cast<__int128>(num) * o.den), checked(static_cast<__int128>(den) * o.num));
}

RatMatrix rat_identity(int n) {
  RatMatrix m(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rat(1);
  return m;
}

RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b) {
  const size_t n = a.size(), m = b[0].size(), kk = b.size();
  RatMatrix out(n, std::vector<Rat>(m));
  for (size_t i = 0; i < n; ++i) {
    for (size_t k = 0; k < kk; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) {
        if (b[k][j].is_zero()) continue;
        out[i][j] = out[i][j] + a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

RatMatrix rat_add(const RatMatrix& a, const RatMatrix& b, long long sign) {
  RatMatrix out = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j)
      out[i][j] = a[i][j] + Rat(sign) * b[i][j];
  return out;
}

RatMatrix rat_transpose(const RatMatrix& a) {
  RatMatrix out(a[0].size(), std::vector<Rat>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
  return out;
}

int rat_rank(RatMatrix a) {
  if (a.empty() || a[0].empty()) return 0;
  const size_t rows = a.size(), cols = a[0].size();
  int rank = 0;
  size_t pr = 0;
  for (size_t c = 0; c < cols && pr < rows; ++c) {
    size_t piv = pr;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[pr], a[piv]);
    const Rat inv = Rat(1) / a[pr][c];
    for (size_t j = c; j < cols; ++j) a[pr][j] = a[pr][j] * inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == pr || a[r][c].is_zero()) continue;
      const Rat f = a[r][c];
      for (size_t j = c; j < cols; ++j) a[r][j] = a[r][j] - f * a[pr][j];
    }
    ++pr;
    ++rank;
  }
  return rank;
}

Rat rat_trace(const RatMatrix& a) {
  Rat t(0);
  for (size_t i = 0; i < a.size(); ++i) t = t + a[i][i];
  return t;
}

bool rat_is_zero(const RatMatrix& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

ScaledMatrix t_ring(const Partition& p, int N) {
  if (N < 1) throw Error(Err::RangeError, "dimension base must be positive");
  const int k = p.upper_len();
  const int l = p.lower_len();
  __int128 total = 1;
  for (int i = 0; i < k + l; ++i) total *= N;
  if (total > kEntryBudget)
    throw Error(Err::DimensionBudgetExceeded,
                "matrix of " + std::to_string(static_cast<long long>(total)) + " entries exceeds budget");
  ScaledMatrix m;
  m.n_base = N;
  m.rows = static_cast<int>(ipow(N, l));
  m.cols = static_cast<int>(ipow(N, k));
  m.twice_exponent = 0;
  m.entries.assign(static_cast<size_t>(m.rows) * m.cols, 0);

  std::vector<int> digit(static_cast<size_t>(k + l), 0);
  std::vector<int> first_digit(static_cast<size_t>(p.block_count()), -1);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) {
      int x = c;
      for (int i = k - 1; i >= 0; --i) {
        digit[static_cast<size_t>(i)] = x % N;
        x /= N;
      }
      x = r;
      for (int j = l - 1; j >= 0; --j) {
        digit[static_cast<size_t>(k + j)] = x % N;
        x /= N;
      }
      std::fill(first_digit.begin(), first_digit.end(), -1);
      bool ok = true;
      for (int i = 0; i < k + l && ok; ++i) {
        int& f = first_digit[static_cast<size_t>(p.block_id(i))];
        if (f == -1)
          f = digit[static_cast<size_t>(i)];
        else if (f != digit[static_cast<size_t>(i)])
          ok = false;
      }
      if (ok) m.at(r, c) = 1;
    }
  }
  return m;
}

ScaledMatrix t_norm(const Partition& p, int N) {
  ScaledMatrix m = t_ring(p, N);
  m.twice_exponent = -stats(p).beta;
  return m;
}

ScaledMatrix sm_mul(const ScaledMatrix& a, const ScaledMatrix& b) {
  if (a.cols != b.rows || a.n_base != b.n_base)
    throw Error(Err::SizeMismatch, "matrix product shape mismatch");
  ScaledMatrix out;
  out.rows = a.rows;
  out.cols = b.cols;
  out.n_base = a.n_base;
  out.twice_exponent = a.twice_exponent + b.twice_exponent;
  out.entries.assign(static_cast<size_t>(out.rows) * out.cols, 0);
  for (int i = 0; i < a.rows; ++i) {
    for (int k = 0; k < a.cols; ++k) {
      const long long av = a.at(i, k);
      if (!av) continue;
      for (int j = 0; j < b.cols; ++j) {
        const long long bv = b.at(k, j);
        if (!bv) continue;
        out.at(i, j) = checked(static_cast<__int128>(out.at(i, j)) + static_cast<__int128>(av) * bv);
      }
    }
  }
  return out;
}

ScaledMatrix sm_kron(const ScaledMatrix& a, const ScaledMatrix& b) {
  if (a.n_base != b.n_base) throw Error(Err::SizeMismatch, "mixed dimension bases");
  if (static_cast<long long>(a.rows) * b.rows * a.cols * b.cols > kEntryBudget)
    throw Error(Err::DimensionBudgetExceeded, "Kronecker product exceeds budget");
  ScaledMatrix out;
  out.rows = a.rows * b.rows;
  out.cols = a.cols * b.cols;
  out.n_base = a.n_base;
  out.twice_exponent = a.twice_exponent + b.twice_exponent;
  out.entries.assign(static_cast<size_t>(out.rows) * out.cols, 0);
  for (int ia = 0; ia < a.rows; ++ia)
    for (int ib = 0; ib < b.rows; ++ib)
      for (int ja = 0; ja < a.cols; ++ja)
        for (int jb = 0; jb < b.cols; ++jb)
          out.at(ia * b.rows + ib, ja * b.cols + jb) =
              checked(static_cast<__int128>(a.at(ia, ja)) * b.at(ib, jb));
  return out;
}

ScaledMatrix sm_adjoint(const ScaledMatrix& a) {
  ScaledMatrix out;
  out.rows = a.cols;
  out.cols = a.rows;
  out.n_base = a.n_base;
  out.twice_exponent = a.twice_exponent;
  out.entries.assign(a.entries.size(), 0);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out.at(j, i) = a.at(i, j);
  return out;
}

bool sm_equal(const ScaledMatrix& a, const ScaledMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols || a.n_base != b.n_base) return false;
  const bool az = std::all_of(a.entries.begin(), a.entries.end(), [](long long v) { return v == 0; });
  const bool bz = std::all_of(b.entries.begin(), b.entries.end(), [](long long v) { return v == 0; });
  if (az || bz) return az && bz;
  const int d = a.twice_exponent - b.twice_exponent;
  if (d % 2 != 0) return false;  // nonzero matrices differing by an odd half-power
  const long long scale = ipow(a.n_base, std::abs(d) / 2);
  for (size_t i = 0; i < a.entries.size(); ++i) {
    const __int128 av = d > 0 ? static_cast<__int128>(a.entries[i]) * scale : a.entries[i];
    const __int128 bv = d < 0 ? static_cast<__int128>(b.entries[i]) * scale : b.entries[i];
    if (av != bv) return false;
  }
  return true;
}

ScaledMatrix sm_scale(ScaledMatrix a, int twice_exponent_delta) {
  a.twice_exponent += twice_exponent_delta;
  return a;
}

RatMatrix sm_to_rational(const ScaledMatrix& a) {
  if (a.twice_exponent % 2 != 0)
    throw Error(Err::RangeError, "half-integer exponent has no rational value");
  const int e = a.twice_exponent / 2;
  const long long p = ipow(a.n_base, std::abs(e));
  RatMatrix out(static_cast<size_t>(a.rows), std::vector<Rat>(static_cast<size_t>(a.cols)));
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      out[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          e >= 0 ? Rat(checked(static_cast<__int128>(a.at(i, j)) * p)) : Rat(a.at(i, j), p);
  return out;
}

FunctorialityReport verify_functoriality(const Partition& p, const Partition& q, int N,
                                         long long tensor_entry_budget) {
  FunctorialityReport rep;
  // reflection
  rep.adjoint_ok = sm_equal(t_norm(adjoint(p), N), sm_adjoint(t_norm(p, N))) &&
                   sm_equal(t_norm(adjoint(q), N), sm_adjoint(t_norm(q, N)));
  // tensor
  __int128 kron_entries = 1;
  for (int i = 0; i < p.total_points() + q.total_points(); ++i) kron_entries *= N;
  if (kron_entries <= tensor_entry_budget) {
    rep.tensor_ok = sm_equal(t_norm(tensor(p, q), N), sm_kron(t_norm(p, N), t_norm(q, N)));
    rep.tensor_checked = true;
  } else {
    rep.tensor_checked = false;
    rep.tensor_ok = true;  // out of budget, not a failure
  }
  // composition: q on top of p
  if (p.upper_len() != q.lower_len() || p.upper_word() != q.lower_word())
    throw Error(Err::SizeMismatch, "pair is not composable");
  const auto comp = compose(p, q);
  rep.loops = comp.loops;
  const int tb = stats(p).beta + stats(q).beta - stats(comp.partition).beta;
  rep.twice_gamma = tb - 2 * comp.loops;
  const ScaledMatrix lhs = sm_mul(t_norm(p, N), t_norm(q, N));
  const ScaledMatrix rhs = sm_scale(t_norm(comp.partition, N), -rep.twice_gamma);
  rep.compose_ok = sm_equal(lhs, rhs);
  return rep;
}

namespace {

constexpr unsigned long long kP1 = 2305843009213693951ull;  // 2^61 - 1
constexpr unsigned long long kP2 = 4611686018427387847ull;  // 62-bit prime

unsigned long long mulmod(unsigned long long a, unsigned long long b, unsigned long long m) {
  return static_cast<unsigned long long>(static_cast<unsigned __int128>(a) * b % m);
}

unsigned long long powmod(unsigned long long a, unsigned long long e, unsigned long long m) {
  unsigned long long r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

int rank_mod(const std::vector<std::vector<long long>>& in, unsigned long long p) {
  const size_t n = in.size();
  if (n == 0) return 0;
  const size_t m = in[0].size();
  std::vector<std::vector<unsigned long long>> a(n, std::vector<unsigned long long>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) {
      long long v = in[i][j] % static_cast<long long>(p);
      if (v < 0) v += static_cast<long long>(p);
      a[i][j] = static_cast<unsigned long long>(v);
    }
  int rank = 0;
  size_t pr = 0;
  for (size_t c = 0; c < m && pr < n; ++c) {
    size_t piv = pr;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[pr], a[piv]);
    const unsigned long long inv = powmod(a[pr][c], p - 2, p);
    for (size_t j = c; j < m; ++j) a[pr][j] = mulmod(a[pr][j], inv, p);
    for (size_t r = pr + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const unsigned long long f = a[r][c];
      for (size_t j = c; j < m; ++j) {
        unsigned long long v = a[r][j] + p - mulmod(f, a[pr][j], p);
        if (v >= p) v -= p;
        a[r][j] = v;
      }
    }
    ++pr;
    ++rank;
  }
  return rank;
}

}  // namespace

GramResult gram_rank(const std::vector<Partition>& ps, int N) {
  GramResult out;
  const size_t n = ps.size();
  out.gram.assign(n, std::vector<long long>(n, 0));
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a; b < n; ++b) {
      if (ps[a].upper_len() != ps[b].upper_len() || ps[a].lower_len() != ps[b].lower_len())
        throw Error(Err::SizeMismatch, "gram needs a common shape");
      // Trace pairing: count joint components of the two block structures
      // on the shared point set.
      const int npts = ps[a].total_points();
      std::vector<int> parent(static_cast<size_t>(npts));
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
          parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
          x = parent[static_cast<size_t>(x)];
        }
        return x;
      };
      for (const Partition* pp : {&ps[a], &ps[b]}) {
        std::vector<int> rep(static_cast<size_t>(pp->block_count()), -1);
        for (int i = 0; i < npts; ++i) {
          int& r = rep[static_cast<size_t>(pp->block_id(i))];
          if (r == -1)
            r = i;
          else
            parent[static_cast<size_t>(find(i))] = find(r);
        }
      }
      int comps = 0;
      for (int i = 0; i < npts; ++i)
        if (find(i) == i) ++comps;
      const long long v = ipow(N, comps);
      out.gram[a][b] = v;
      out.gram[b][a] = v;
    }
  }
  const int r1 = rank_mod(out.gram, kP1);
  const int r2 = rank_mod(out.gram, kP2);
  out.rank = std::max(r1, r2);
  out.full_rank = out.rank == static_cast<int>(n);
  return out;
}

int exact_rank(std::vector<std::vector<long long>> m) {
  RatMatrix a(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (long long v : m[i]) a[i].push_back(Rat(v));
  return rat_rank(std::move(a));
}

RatMatrix span_projection(const std::vector<ScaledMatrix>& mats) {
  if (mats.empty()) throw Error(Err::RangeError, "empty span");
  const int dim = mats[0].rows;
  // Collect columns, reduce to a basis of the joint column space.
  RatMatrix cols;
  for (const auto& m : mats) {
    if (m.rows != dim) throw Error(Err::SizeMismatch, "span needs equal dimensions");
    for (int c = 0; c < m.cols; ++c) {
      std::vector<Rat> col(static_cast<size_t>(dim));
      bool nonzero = false;
      for (int r = 0; r < dim; ++r) {
        col[static_cast<size_t>(r)] = Rat(m.at(r, c));
        nonzero = nonzero || m.at(r, c) != 0;
      }
      if (nonzero) cols.push_back(std::move(col));
    }
  }
  // Row-reduce the transposed collection; keep independent columns.
  RatMatrix basis;
  RatMatrix reduced;
  for (auto& col : cols) {
    std::vector<Rat> v = col;
    for (const auto& r : reduced) {
      size_t lead = 0;
      while (lead < r.size() && r[lead].is_zero()) ++lead;
      if (lead < r.size() && !v[lead].is_zero()) {
        const Rat f = v[lead] / r[lead];
        for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - f * r[j];
      }
    }
    if (std::any_of(v.begin(), v.end(), [](const Rat& x) { return !x.is_zero(); })) {
      reduced.push_back(v);
      basis.push_back(col);
    }
  }
  // P = B (B^T B)^{-1} B^T with B the dim x r basis matrix.
  const size_t r = basis.size();
  RatMatrix B(static_cast<size_t>(dim), std::vector<Rat>(r));
  for (size_t c = 0; c < r; ++c)
    for (int i = 0; i < dim; ++i) B[static_cast<size_t>(i)][c] = basis[c][static_cast<size_t>(i)];
  const RatMatrix Bt = rat_transpose(B);
  RatMatrix G = rat_mul(Bt, B);
  // invert G by Gauss-Jordan
  RatMatrix inv = rat_identity(static_cast<int>(r));
  for (size_t c = 0; c < r; ++c) {
    size_t piv = c;
    while (piv < r && G[piv][c].is_zero()) ++piv;
    if (piv == r) throw Error(Err::RangeError, "gram of basis is singular");
    std::swap(G[c], G[piv]);
    std::swap(inv[c], inv[piv]);
    const Rat d = G[c][c];
    for (size_t j = 0; j < r; ++j) {
      G[c][j] = G[c][j] / d;
      inv[c][j] = inv[c][j] / d;
    }
    for (size_t i = 0; i < r; ++i) {
      if (i == c || G[i][c].is_zero()) continue;
      const Rat f = G[i][c];
      for (size_t j = 0; j < r; ++j) {
        G[i][j] = G[i][j] - f * G[c][j];
        inv[i][j] = inv[i][j] - f * inv[c][j];
      }
    }
  }
  return rat_mul(rat_mul(B, inv), Bt);
}

RatMatrix projection_P(const Category& cat, const Partition& p, int N) {
  if (!is_projective(p)) throw Error(Err::NotProjective, "projection needs a projective partition");
  if (cat.member(p) != Membership::Yes)
    throw Error(Err::NonMemberPartition, p.to_text() + " is not a member");
  const std::string w = p.upper_word();
  const RatMatrix Tp = sm_to_rational(t_norm(p, N));
  std::vector<ScaledMatrix> dominee_maps;
  for (const auto& q : cat.projective_members(w)) {
    if (q == p) continue;
    if (!dominates(p, q)) continue;
    dominee_maps.push_back(t_ring(q, N));
  }
  RatMatrix P = Tp;
  if (!dominee_maps.empty()) P = rat_add(Tp, span_projection(dominee_maps), -1);
  // exact structural checks
  assert(rat_is_zero(rat_add(rat_mul(P, P), P, -1)));
  assert(rat_is_zero(rat_add(P, rat_transpose(P), -1)));
  return P;
}

CountingReport verify_counting(const Category& cat, const std::string& word) {
  CountingReport out;
  out.lhs = static_cast<long long>(cat.members_with_colors(word, word).size());
  const auto projs = cat.projective_members(word);
  const auto classes = equivalence_classes(cat, projs);
  out.rhs = 0;
  for (const auto& cls : classes) {
    out.class_sizes.push_back(static_cast<long long>(cls.size()));
    out.rhs += static_cast<long long>(cls.size()) * static_cast<long long>(cls.size());
  }
  std::sort(out.class_sizes.begin(), out.class_sizes.end());
  out.ok = out.lhs == out.rhs;
  return out;
}

DirectSumReport verify_direct_sum(const Category& cat, const std::string& word, int N) {
  DirectSumReport out;
  const auto projs = cat.projective_members(word);
  const auto classes = equivalence_classes(cat, projs);
  out.space_dim = ipow(N, static_cast<int>(word.size()));
  out.rank_sum = 0;
  out.classes_ok = true;
  for (const auto& cls : classes) {
    long long class_rank_sum = 0;
    RatMatrix sum;
    for (size_t idx : cls) {
      const RatMatrix P = projection_P(cat, projs[idx], N);
      const Rat tr = rat_trace(P);
      assert(tr.den == 1);
      class_rank_sum += tr.num;
      sum = sum.empty() ? P : rat_add(sum, P, 1);
    }
    out.rank_sum += class_rank_sum;
    if (rat_rank(sum) != class_rank_sum) out.classes_ok = false;
  }
  out.total_ok = out.rank_sum == out.space_dim;
  return out;
}

}  // namespace ncpart
