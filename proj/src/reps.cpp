#include "ncpart/reps.hpp"

#include <algorithm>

#include "ncpart/projective.hpp"

namespace ncpart {

long long chebyshev_dim(int t, int N) {
  if (t < 0) throw Error(Err::RangeError, "negative length");
  long long a = 1, b = N - 1;
  if (t == 0) return a;
  for (int i = 1; i < t; ++i) {
    const long long c = (N - 2) * b - a;
    a = b;
    b = c;
  }
  return b;
}

std::vector<Partition> r_set(const Category& cat, const Partition& p) {
  if (!is_projective(p)) throw Error(Err::NotProjective, "r_set needs a projective partition");
  if (cat.member(p) != Membership::Yes)
    throw Error(Err::NonMemberPartition, p.to_text() + " is not a member");
  std::vector<Partition> out;
  const std::string w = p.upper_word();
  for (const auto& q : enumerate_partitions(w, w, true, 2 * static_cast<int>(w.size()))) {
    if (q == p || !is_projective(q)) continue;
    if (cat.member(q) != Membership::NoWithinBound) continue;
    if (dominates(p, q)) out.push_back(q);
  }
  return out;
}

long long dim_general(const Category& cat, const Partition& p, int N) {
  long long d = chebyshev_dim(stats(p).through, N);
  for (const auto& q : r_set(cat, p)) d += chebyshev_dim(stats(q).through, N);
  return d;
}

std::vector<int> character_pushforward(const Category& cat, const Partition& p) {
  std::vector<int> out{stats(p).through};
  for (const auto& q : r_set(cat, p)) out.push_back(stats(q).through);
  std::sort(out.begin(), out.end());
  return out;
}

int rep_length(const Partition& p) {
  if (!is_projective(p)) throw Error(Err::NotProjective, "length is defined on projective partitions");
  return stats(p).through;
}

int rep_length_prime(const Category& cat, const Partition& p) {
  const int l = rep_length(p);
  if (l >= 1) return l;
  return equivalent_to_empty(cat, p) == Membership::Yes ? 0 : 1;
}

Tri is_proper(const Category& cat) {
  const SClass S = compute_S(cat);
  const bool s_finite = S.kind != SKind::Zs || S.s >= 1;
  if (!s_finite && S.infinite_certified) return Tri::No;
  const GClass G = compute_G(cat);
  const bool g_finite = G.order >= 1;
  if (s_finite && g_finite) return Tri::Yes;
  return Tri::Unknown;
}

BallCount ball_count(const Category& cat, int k) {
  BallCount out;
  const auto sys = fusion_system(cat);
  const SClass& S = sys.s_class();
  if (S.kind == SKind::Zs && S.s == 0)
    throw Error(Err::HorizonTooSmall, "label set has no finite certification");
  const auto alphabet = sys.alphabet(cat.bound());
  const long long s_size = static_cast<long long>(alphabet.size());
  const GClass G = compute_G(cat);
  if (G.order == 0) throw Error(Err::HorizonTooSmall, "group of through-free classes uncertified");
  std::vector<Partition> g_reps;
  g_reps.push_back(empty_partition());
  for (long j = 1; j < G.order; ++j) {
    Partition b = empty_partition();
    for (long i = 0; i < j; ++i) b = tensor(b, beta_partition(static_cast<int>(G.generator_index)));
    g_reps.push_back(b);
  }

  // All interleavings g_0 a_1 g_1 ... a_k g_k as partitions.
  std::vector<Partition> words;
  std::function<void(int, const Partition&)> build = [&](int placed, const Partition& acc) {
    if (placed == k) {
      for (const auto& g : g_reps) words.push_back(tensor(acc, g));
      return;
    }
    for (const auto& g : g_reps) {
      const Partition with_g = tensor(acc, g);
      for (const auto& a : alphabet) build(placed + 1, tensor(with_g, sys.representative(a)));
    }
  };
  // leading group element folded into the recursion's first step
  build(0, empty_partition());

  std::vector<Partition> classes;
  for (const auto& wpart : words) {
    bool fresh = true;
    for (const auto& c : classes) {
      if (stats(c).through != stats(wpart).through) continue;
      if (equivalent(cat, c, wpart) == Membership::Yes) {
        fresh = false;
        break;
      }
    }
    if (fresh) classes.push_back(wpart);
  }
  out.classes_deduped = static_cast<int>(words.size() - classes.size());
  out.count = static_cast<long long>(classes.size());
  long long sk = 1;
  for (int i = 0; i < k; ++i) sk *= s_size;
  out.lower = G.order * sk;
  out.upper = sk;
  for (int i = 0; i < k + 1; ++i) out.upper *= G.order;
  return out;
}

}  // namespace ncpart
