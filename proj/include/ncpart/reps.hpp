#pragma once

#include <vector>

#include "ncpart/category.hpp"
#include "ncpart/fusion.hpp"
#include "ncpart/partition.hpp"

namespace ncpart {

/// Dilated Chebyshev value mu_{2t}(sqrt(N)): integer recursion
/// u_0 = 1, u_1 = N-1, u_{t+1} = (N-2) u_t - u_{t-1}.
long long chebyshev_dim(int t, int N);

/// Noncrossing projective partitions with the coloring of p, strictly
/// dominated by p and outside the category.
std::vector<Partition> r_set(const Category& cat, const Partition& p);

/// mu_{2t(p)}(sqrt(N)) plus the same value over the exclusion set.
long long dim_general(const Category& cat, const Partition& p, int N);

/// Through-block counts of the permutation-side decomposition of the
/// character: {t(p)} joined with {t(q) : q in r_set(p)}; sorted.
std::vector<int> character_pushforward(const Category& cat, const Partition& p);

int rep_length(const Partition& p);
/// Adjusted length: 0 only on the class of the empty partition; nontrivial
/// through-free classes get length 1.
int rep_length_prime(const Category& cat, const Partition& p);

/// Proper iff both the one-block label set and the group of through-free
/// classes are finite (evidence-horizon aware).
Tri is_proper(const Category& cat);

struct BallCount {
  long long count = 0;
  long long lower = 0;
  long long upper = 0;
  int classes_deduped = 0;
};

/// Number of equivalence classes at length k, counted through canonical
/// words of labels interleaved with group elements, deduplicated by the
/// equivalence oracle; with the combinatorial bounds |G| s^k and s^k |G|^(k+1).
BallCount ball_count(const Category& cat, int k);

}  // namespace ncpart
