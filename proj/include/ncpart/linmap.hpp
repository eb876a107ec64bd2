#pragma once

#include <vector>

#include "ncpart/category.hpp"
#include "ncpart/partition.hpp"

namespace ncpart {

/// Exact rational with overflow-checked 64-bit components.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d);

  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;
  Rat operator-() const { return {-num, den}; }
  bool operator==(const Rat&) const = default;
  bool is_zero() const { return num == 0; }
};

using RatMatrix = std::vector<std::vector<Rat>>;

RatMatrix rat_identity(int n);
RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix rat_add(const RatMatrix& a, const RatMatrix& b, long long sign = 1);
RatMatrix rat_transpose(const RatMatrix& a);
int rat_rank(RatMatrix a);
Rat rat_trace(const RatMatrix& a);
bool rat_is_zero(const RatMatrix& a);

/// An integer matrix scaled by a half-integer power of the dimension base:
/// value = N^(twice_exponent/2) * entries. Rows are indexed by lower
/// multi-indices, columns by upper multi-indices, both row-major with the
/// first tensor factor most significant.
struct ScaledMatrix {
  int rows = 1;
  int cols = 1;
  int n_base = 1;
  int twice_exponent = 0;
  std::vector<long long> entries;  // row-major

  long long at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }
  long long& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
};

constexpr long long kEntryBudget = 10'000'000;

/// The 0/1 matrix of the partition map: entry (j, i) is 1 exactly when every
/// block of p carries a constant index across i (upper) and j (lower).
/// Colors play no role.
ScaledMatrix t_ring(const Partition& p, int N);

/// The normalized map: t_ring with twice_exponent = -beta(p).
ScaledMatrix t_norm(const Partition& p, int N);

ScaledMatrix sm_mul(const ScaledMatrix& a, const ScaledMatrix& b);
ScaledMatrix sm_kron(const ScaledMatrix& a, const ScaledMatrix& b);
ScaledMatrix sm_adjoint(const ScaledMatrix& a);
bool sm_equal(const ScaledMatrix& a, const ScaledMatrix& b);
ScaledMatrix sm_scale(ScaledMatrix a, int twice_exponent_delta);
RatMatrix sm_to_rational(const ScaledMatrix& a);

struct FunctorialityReport {
  bool adjoint_ok = false;
  bool tensor_ok = false;
  bool tensor_checked = false;  // false when the Kronecker size exceeds budget
  bool compose_ok = false;
  int twice_gamma = 0;
  int loops = 0;
};

/// Exact checks of the three structure rules on a composable pair: the
/// reflection rule, the tensor rule, and the composition rule
/// T_p T_q = N^(-gamma) T_pq with gamma = (beta(p)+beta(q)-beta(pq))/2 - rl.
/// The tensor rule is skipped (tensor_checked = false) when the Kronecker
/// product would exceed tensor_entry_budget entries.
FunctorialityReport verify_functoriality(const Partition& p, const Partition& q, int N,
                                         long long tensor_entry_budget = 70000);

struct GramResult {
  std::vector<std::vector<long long>> gram;  // entries N^(components of the glued diagram)
  int rank = 0;       // certified lower bound (exact for full rank)
  bool full_rank = false;
};

/// Gram matrix of the unnormalized maps under the trace pairing; all
/// partitions must share the same shape. Rank is certified by modular
/// elimination at two 62-bit primes.
GramResult gram_rank(const std::vector<Partition>& ps, int N);

/// Exact integer-matrix rank over the rationals (Bareiss), for small inputs.
int exact_rank(std::vector<std::vector<long long>> m);

/// The orthogonal projection T_p minus the join of T_q over all strict
/// dominees q of p inside the category. Exact rational output.
RatMatrix projection_P(const Category& cat, const Partition& p, int N);

/// Projection onto the joint column span of the given 0/1 maps.
RatMatrix span_projection(const std::vector<ScaledMatrix>& mats);

struct CountingReport {
  long long lhs = 0;  // |C(w,w)|
  long long rhs = 0;  // sum of squared class sizes over Proj(w)
  bool ok = false;
  std::vector<long long> class_sizes;
};

CountingReport verify_counting(const Category& cat, const std::string& word);

struct DirectSumReport {
  long long rank_sum = 0;
  long long space_dim = 0;
  bool total_ok = false;
  bool classes_ok = false;  // ranges within one class are in direct sum
};

DirectSumReport verify_direct_sum(const Category& cat, const std::string& word, int N);

}  // namespace ncpart
