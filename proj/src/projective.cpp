#include "ncpart/projective.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace ncpart {

bool is_projective(const Partition& p) {
  if (p.upper_len() != p.lower_len()) return false;
  if (p.upper_word() != p.lower_word()) return false;
  if (adjoint(p) != p) return false;
  return compose(p, p).partition == p;
}

std::optional<std::string> why_not_building(const Partition& p) {
  const int k = p.upper_len();
  const int l = p.lower_len();
  std::vector<int> low_block;
  for (int j = 0; j < l; ++j) {
    if (p.color(k + j) != Color::White) return "lower point " + std::to_string(j) + " not white";
    low_block.push_back(p.block_id(k + j));
  }
  for (int a = 0; a < l; ++a)
    for (int b = a + 1; b < l; ++b)
      if (low_block[static_cast<size_t>(a)] == low_block[static_cast<size_t>(b)])
        return "lower points " + std::to_string(a) + "," + std::to_string(b) + " share a block";
  std::vector<int> min_up(static_cast<size_t>(l), -1);
  for (int j = 0; j < l; ++j) {
    for (int i = 0; i < k; ++i) {
      if (p.block_id(i) == low_block[static_cast<size_t>(j)]) {
        min_up[static_cast<size_t>(j)] = i;
        break;
      }
    }
    if (min_up[static_cast<size_t>(j)] == -1)
      return "lower point " + std::to_string(j) + " has no upper neighbour";
  }
  for (int j = 0; j + 1 < l; ++j)
    if (min_up[static_cast<size_t>(j)] >= min_up[static_cast<size_t>(j + 1)])
      return "minimal upper neighbours not increasing at lower point " + std::to_string(j);
  return std::nullopt;
}

ThroughBlockDecomposition through_block_decomposition(const Partition& p) {
  if (!is_noncrossing(p)) throw Error(Err::NotNoncrossing, "through-block decomposition needs a noncrossing partition");
  const int k = p.upper_len();
  const int l = p.lower_len();
  const int nb = p.block_count();
  std::vector<int> min_up(static_cast<size_t>(nb), -1), min_low(static_cast<size_t>(nb), -1);
  for (int i = k + l - 1; i >= 0; --i) {
    const int b = p.block_id(i);
    if (p.is_upper_point(i))
      min_up[static_cast<size_t>(b)] = i;
    else
      min_low[static_cast<size_t>(b)] = i - k;
  }
  std::vector<int> through;  // block ids, ordered by minimal upper point
  for (int b = 0; b < nb; ++b)
    if (min_up[static_cast<size_t>(b)] >= 0 && min_low[static_cast<size_t>(b)] >= 0) through.push_back(b);
  std::sort(through.begin(), through.end(),
            [&](int a, int b) { return min_up[static_cast<size_t>(a)] < min_up[static_cast<size_t>(b)]; });
  const int t = static_cast<int>(through.size());
  // For noncrossing partitions the two orders coincide.
  assert(std::is_sorted(through.begin(), through.end(), [&](int a, int b) {
    return min_low[static_cast<size_t>(a)] < min_low[static_cast<size_t>(b)];
  }));
  std::vector<int> through_index(static_cast<size_t>(nb), -1);
  for (int i = 0; i < t; ++i) through_index[static_cast<size_t>(through[static_cast<size_t>(i)])] = i;

  // p_u on (k, t): upper blocks of p, through-traces picking up one white
  // lower point each.
  {
    std::string up = p.upper_word();
    std::string low(static_cast<size_t>(t), 'w');
    std::vector<int> assign(static_cast<size_t>(k + t), -1);
    for (int i = 0; i < k; ++i) assign[static_cast<size_t>(i)] = p.block_id(i);
    for (int i = 0; i < t; ++i) assign[static_cast<size_t>(k + i)] = through[static_cast<size_t>(i)];
    std::vector<Color> colors;
    for (char c : up) colors.push_back(color_from_char(c));
    for (int i = 0; i < t; ++i) colors.push_back(Color::White);
    Partition pu = Partition::from_assignment(k, t, colors, assign);

    std::string lowword = p.lower_word();
    std::vector<int> assign_l(static_cast<size_t>(l + t), -1);
    for (int j = 0; j < l; ++j) assign_l[static_cast<size_t>(j)] = p.block_id(k + j);
    for (int i = 0; i < t; ++i) assign_l[static_cast<size_t>(l + i)] = through[static_cast<size_t>(i)];
    std::vector<Color> colors_l;
    for (char c : lowword) colors_l.push_back(color_from_char(c));
    for (int i = 0; i < t; ++i) colors_l.push_back(Color::White);
    Partition pl = Partition::from_assignment(l, t, colors_l, assign_l);

    return {pl, pu, t};
  }
}

Partition r_partition(const Partition& p, const Partition& q) {
  auto dp = through_block_decomposition(p);
  auto dq = through_block_decomposition(q);
  if (dp.through != dq.through)
    throw Error(Err::ThroughBlockMismatch, "t(p) = " + std::to_string(dp.through) +
                                               " differs from t(q) = " + std::to_string(dq.through));
  return compose(adjoint(dq.upper), dp.upper).partition;
}

Membership equivalent(const Category& cat, const Partition& p, const Partition& q) {
  if (!is_projective(p) || !is_projective(q))
    throw Error(Err::NotProjective, "equivalence is defined on projective partitions");
  auto dp = through_block_decomposition(p);
  auto dq = through_block_decomposition(q);
  if (dp.through != dq.through) return Membership::NoWithinBound;
  return cat.member(compose(adjoint(dq.upper), dp.upper).partition);
}

Membership equivalent_to_empty(const Category& cat, const Partition& p) {
  return equivalent(cat, p, empty_partition());
}

bool dominates(const Partition& p, const Partition& q) {
  if (p.upper_word() != q.upper_word() || p.lower_word() != q.lower_word())
    throw Error(Err::ColorMismatch, "domination needs equal colorings");
  if (!is_projective(p) || !is_projective(q))
    throw Error(Err::NotProjective, "domination is defined on projective partitions");
  return compose(p, q).partition == q && compose(q, p).partition == q;
}

namespace {

Partition identity_row(const std::string& word) {
  Partition out = empty_partition();
  for (char c : word) {
    const Color col = color_from_char(c);
    out = tensor(out, identity_strand(col, col));
  }
  return out;
}

}  // namespace

Partition cap(const Partition& p, CapRow row, int start, const Partition& b) {
  if (b.lower_len() != 0) throw Error(Err::RangeError, "capping partition must be one-line (m,0)");
  const int m = b.upper_len();
  if (row == CapRow::Symmetric) {
    if (!is_projective(p)) throw Error(Err::NotProjective, "symmetric capping needs a projective partition");
    return cap(cap(p, CapRow::Lower, start, b), CapRow::Upper, start, b);
  }
  const int rowlen = row == CapRow::Lower ? p.lower_len() : p.upper_len();
  if (start < 0 || start + m > rowlen)
    throw Error(Err::RangeError, "cap range " + std::to_string(start) + ".." +
                                     std::to_string(start + m - 1) + " outside row of length " +
                                     std::to_string(rowlen));
  const std::string word = row == CapRow::Lower ? p.lower_word() : p.upper_word();
  for (int i = 0; i < m; ++i) {
    if (color_from_char(word[static_cast<size_t>(start + i)]) != b.color(i))
      throw Error(Err::ColorMismatch, "capped point " + std::to_string(start + i) + " differs from block color");
  }
  const std::string left = word.substr(0, static_cast<size_t>(start));
  const std::string right = word.substr(static_cast<size_t>(start + m));
  if (row == CapRow::Lower) {
    Partition capper = tensor(tensor(identity_row(left), b), identity_row(right));
    return compose(capper, p).partition;
  }
  Partition capper = tensor(tensor(identity_row(left), adjoint(b)), identity_row(right));
  return compose(p, capper).partition;
}

namespace {

Partition restrict_points(const Partition& p, int up_from, int up_to, int low_from, int low_to) {
  std::string up, low;
  std::vector<int> assign;
  for (int i = up_from; i < up_to; ++i) {
    up += color_char(p.color(i));
    assign.push_back(p.block_id(i));
  }
  for (int j = low_from; j < low_to; ++j) {
    low += color_char(p.color(p.upper_len() + j));
    assign.push_back(p.block_id(p.upper_len() + j));
  }
  std::vector<Color> colors;
  for (char c : up + low) colors.push_back(color_from_char(c));
  return Partition::from_assignment(static_cast<int>(up.size()), static_cast<int>(low.size()),
                                    colors, assign);
}

}  // namespace

Factorization factorize(const Partition& p) {
  if (!is_projective(p)) throw Error(Err::NotProjective, "factorize needs a projective partition");
  if (!is_noncrossing(p)) throw Error(Err::NotNoncrossing, "factorize needs a noncrossing partition");
  const int k = p.upper_len();
  Factorization out;
  if (k == 0) {
    out.parts.push_back(empty_partition());
    return out;
  }
  std::vector<int> min_pos(static_cast<size_t>(p.block_count()), -1);
  std::vector<int> max_pos(static_cast<size_t>(p.block_count()), -1);
  auto col_of = [&](int point) { return p.is_upper_point(point) ? point : point - k; };
  for (int i = 0; i < p.total_points(); ++i) {
    const int c = col_of(i);
    const int b = p.block_id(i);
    if (min_pos[static_cast<size_t>(b)] == -1 || c < min_pos[static_cast<size_t>(b)])
      min_pos[static_cast<size_t>(b)] = c;
    if (c > max_pos[static_cast<size_t>(b)]) max_pos[static_cast<size_t>(b)] = c;
  }
  std::vector<int> cuts{0};
  for (int c = 1; c < k; ++c) {
    bool valid = true;
    for (int b = 0; b < p.block_count() && valid; ++b)
      if (min_pos[static_cast<size_t>(b)] < c && max_pos[static_cast<size_t>(b)] >= c) valid = false;
    if (valid) cuts.push_back(c);
  }
  cuts.push_back(k);

  std::vector<Partition> factors;
  for (size_t i = 0; i + 1 < cuts.size(); ++i)
    factors.push_back(restrict_points(p, cuts[i], cuts[i + 1], cuts[i], cuts[i + 1]));

  // Group consecutive through-free factors into the B slots.
  Partition current_b = empty_partition();
  for (const auto& f : factors) {
    const int t = stats(f).through;
    assert(t <= 1);
    if (t == 0) {
      current_b = tensor(current_b, f);
    } else {
      out.parts.push_back(current_b);
      out.parts.push_back(f);
      current_b = empty_partition();
      ++out.through;
    }
  }
  out.parts.push_back(current_b);
  return out;
}

std::vector<Partition> extract_fillers(const Partition& p) {
  const int k = p.upper_len();
  const auto st = stats(p);
  int frame = -1;
  if (st.through == 1) {
    for (int b = 0; b < p.block_count() && frame == -1; ++b) {
      bool up = false, low = false;
      for (int i = 0; i < p.total_points(); ++i)
        if (p.block_id(i) == b) (p.is_upper_point(i) ? up : low) = true;
      if (up && low) frame = b;
    }
  } else {
    frame = p.block_id(0);
  }
  std::vector<int> frame_points;
  for (int i = 0; i < k; ++i)
    if (p.block_id(i) == frame) frame_points.push_back(i);
  std::vector<Partition> fillers;
  int prev = -1;
  auto emit_gap = [&](int from, int to) {
    if (to - from <= 0) return;
    fillers.push_back(restrict_points(p, from, to, 0, 0));
  };
  for (int f : frame_points) {
    emit_gap(prev + 1, f);
    prev = f;
  }
  emit_gap(prev + 1, k);
  return fillers;
}

namespace {

std::string reduce_color_word(std::string w) {
  auto uniform = [](const std::string& s) {
    return std::all_of(s.begin(), s.end(), [&](char c) { return c == s[0]; });
  };
  while (w.size() > 2 && !uniform(w)) {
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] != w[i + 1]) {
        w.erase(i, 2);
        break;
      }
    }
  }
  return w;
}

Partition one_block_projective(const std::string& word) {
  std::vector<int> all(2 * word.size());
  std::iota(all.begin(), all.end(), 0);
  return Partition::make(word, word, {all});
}

}  // namespace

ElementaryForm to_elementary(const Category& cat, const Partition& A) {
  if (!is_projective(A)) throw Error(Err::NotProjective, "to_elementary needs a projective partition");
  if (stats(A).through != 1) throw Error(Err::NotThroughOne, "to_elementary needs t(A) = 1");

  Partition b_part = empty_partition();
  for (const auto& f : extract_fillers(A)) b_part = tensor(b_part, compose(adjoint(f), f).partition);

  int frame = -1;
  for (int b = 0; b < A.block_count() && frame == -1; ++b) {
    bool up = false, low = false;
    for (int i = 0; i < A.total_points(); ++i)
      if (A.block_id(i) == b) (A.is_upper_point(i) ? up : low) = true;
    if (up && low) frame = b;
  }
  std::string word;
  for (int i = 0; i < A.upper_len(); ++i)
    if (A.block_id(i) == frame) word += color_char(A.color(i));
  const std::string reduced = reduce_color_word(word);
  Partition ahat = one_block_projective(reduced);

  std::vector<std::pair<Partition, Partition>> candidates;
  candidates.emplace_back(b_part, ahat);
  if (!b_part.empty()) candidates.emplace_back(empty_partition(), ahat);
  if (reduced.size() == 2 && reduced[0] != reduced[1]) {
    const std::string flipped{reduced[1], reduced[0]};
    Partition other = one_block_projective(flipped);
    candidates.emplace_back(b_part, other);
    if (!b_part.empty()) candidates.emplace_back(empty_partition(), other);
  }
  ElementaryForm best{candidates[0].first, candidates[0].second, Membership::NoWithinBound};
  bool have_unknown = false;
  for (const auto& [bp, el] : candidates) {
    const Membership m = equivalent(cat, A, tensor(bp, el));
    if (m == Membership::Yes) return {bp, el, m};
    if (m == Membership::Unknown && !have_unknown) {
      best = {bp, el, m};
      have_unknown = true;
    }
  }
  return best;
}

WitnessReport find_blockstability_witness(const Category& cat, int scan_points) {
  WitnessReport out;
  const auto rep = is_block_stable(cat, scan_points);
  out.block_stable = rep.verdict;
  if (rep.verdict != Tri::No) return out;
  for (int m = 1; 2 * m <= cat.bound(); ++m) {
    std::string word(static_cast<size_t>(m), 'w');
    for (int mask = 0; mask < (1 << m); ++mask) {
      for (int i = 0; i < m; ++i) word[static_cast<size_t>(i)] = (mask >> i & 1) ? 'b' : 'w';
      for (const auto& b : enumerate_partitions(word, "", true, m)) {
        if (cat.member(b) != Membership::NoWithinBound) continue;
        if (cat.member(compose(adjoint(b), b).partition) == Membership::Yes) {
          out.witness = b;
          return out;
        }
      }
    }
  }
  return out;
}

std::vector<std::vector<size_t>> equivalence_classes(const Category& cat,
                                                     const std::vector<Partition>& projectives) {
  const size_t n = projectives.size();
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), size_t{0});
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<int> t(n);
  for (size_t i = 0; i < n; ++i) t[i] = stats(projectives[i]).through;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (t[i] != t[j] || find(i) == find(j)) continue;
      if (equivalent(cat, projectives[i], projectives[j]) == Membership::Yes) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<size_t>> classes;
  std::vector<int> class_of(n, -1);
  for (size_t i = 0; i < n; ++i) {
    const size_t r = find(i);
    if (class_of[r] == -1) {
      class_of[r] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<size_t>(class_of[r])].push_back(i);
  }
  return classes;
}

}  // namespace ncpart
