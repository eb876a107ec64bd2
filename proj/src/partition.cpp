#include "ncpart/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ncpart {

namespace {

const char* err_name(Err e) {
  switch (e) {
    case Err::OverlappingBlocks: return "OverlappingBlocks";
    case Err::UncoveredPoint: return "UncoveredPoint";
    case Err::BadIndex: return "BadIndex";
    case Err::SizeMismatch: return "SizeMismatch";
    case Err::ColorMismatch: return "ColorMismatch";
    case Err::EmptyRow: return "EmptyRow";
    case Err::BoundExceeded: return "BoundExceeded";
    case Err::NotNoncrossing: return "NotNoncrossing";
    case Err::ThroughBlockMismatch: return "ThroughBlockMismatch";
    case Err::NotProjective: return "NotProjective";
    case Err::NotThroughOne: return "NotThroughOne";
    case Err::NotBuilding: return "NotBuilding";
    case Err::RangeError: return "RangeError";
    case Err::DimensionBudgetExceeded: return "DimensionBudgetExceeded";
    case Err::NonMemberPartition: return "NonMemberPartition";
    case Err::UnsupportedFamily: return "UnsupportedFamily";
    case Err::HorizonTooSmall: return "HorizonTooSmall";
    case Err::ParseError: return "ParseError";
  }
  return "Error";
}

constexpr int kMaxPoints = 64;

struct UnionFind {
  int parent[kMaxPoints];
  explicit UnionFind(int n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Error::Error(Err code, const std::string& msg)
    : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

Color color_from_char(char c) {
  if (c == 'w' || c == 'o') return Color::White;
  if (c == 'b' || c == 'x') return Color::Black;
  throw Error(Err::ParseError, std::string("bad color character '") + c + "'");
}

Partition Partition::make(std::string_view upper_colors, std::string_view lower_colors,
                          const std::vector<std::vector<int>>& blocks) {
  const int k = static_cast<int>(upper_colors.size());
  const int l = static_cast<int>(lower_colors.size());
  const int n = k + l;
  if (n > kMaxPoints) throw Error(Err::BoundExceeded, "more than 32 points");
  std::uint32_t bits = 0;
  for (int i = 0; i < k; ++i)
    if (color_from_char(upper_colors[static_cast<size_t>(i)]) == Color::Black) bits |= 1u << i;
  for (int j = 0; j < l; ++j)
    if (color_from_char(lower_colors[static_cast<size_t>(j)]) == Color::Black) bits |= 1u << (k + j);

  int assign[kMaxPoints];
  for (int i = 0; i < n; ++i) assign[i] = -1;
  int label = 0;
  for (const auto& blk : blocks) {
    for (int idx : blk) {
      if (idx < 0 || idx >= n)
        throw Error(Err::BadIndex, "point " + std::to_string(idx) + " outside 0.." + std::to_string(n - 1));
      if (assign[idx] != -1)
        throw Error(Err::OverlappingBlocks, "point " + std::to_string(idx) + " listed twice");
      assign[idx] = label;
    }
    ++label;
  }
  for (int i = 0; i < n; ++i) {
    if (assign[i] == -1)
      throw Error(Err::UncoveredPoint, "point " + std::to_string(i) + " not covered");
  }
  return from_raw(k, l, bits, assign);
}

Partition Partition::from_assignment(int upper_len, int lower_len, const std::vector<Color>& colors,
                                     const std::vector<int>& block_of_point) {
  const int n = upper_len + lower_len;
  if (n > kMaxPoints) throw Error(Err::BoundExceeded, "more than 32 points");
  std::uint32_t bits = 0;
  for (int i = 0; i < n; ++i)
    if (colors[static_cast<size_t>(i)] == Color::Black) bits |= 1u << i;
  return from_raw(upper_len, lower_len, bits, block_of_point.data());
}

Partition Partition::from_raw(int upper_len, int lower_len, std::uint32_t colorbits,
                              const int* block_of_point) {
  Partition p;
  p.upper_ = static_cast<std::uint8_t>(upper_len);
  p.lower_ = static_cast<std::uint8_t>(lower_len);
  p.colorbits_ = colorbits;
  const int n = upper_len + lower_len;
  int relabel[kMaxPoints];
  int used = 0;
  for (int i = 0; i < n; ++i) {
    const int raw = block_of_point[i];
    int id = -1;
    for (int j = 0; j < used; ++j) {
      if (relabel[j] == raw) {
        id = j;
        break;
      }
    }
    if (id == -1) {
      id = used;
      relabel[used++] = raw;
    }
    p.block_[static_cast<size_t>(i)] = static_cast<std::uint8_t>(id);
  }
  p.nblocks_ = static_cast<std::uint8_t>(used);
  return p;
}

std::vector<Color> Partition::colors() const {
  std::vector<Color> out(static_cast<size_t>(total_points()));
  for (int i = 0; i < total_points(); ++i) out[static_cast<size_t>(i)] = color(i);
  return out;
}

std::string Partition::upper_word() const {
  std::string s;
  for (int i = 0; i < upper_; ++i) s += color_char(color(i));
  return s;
}

std::string Partition::lower_word() const {
  std::string s;
  for (int i = 0; i < lower_; ++i) s += color_char(color(upper_ + i));
  return s;
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<size_t>(nblocks_));
  for (int i = 0; i < total_points(); ++i) out[block_[static_cast<size_t>(i)]].push_back(i);
  return out;
}

bool Partition::operator<(const Partition& o) const {
  if (total_points() != o.total_points()) return total_points() < o.total_points();
  if (upper_ != o.upper_) return upper_ < o.upper_;
  if (colorbits_ != o.colorbits_) return colorbits_ < o.colorbits_;
  return block_ < o.block_;
}

std::string Partition::to_text() const {
  std::ostringstream os;
  os << static_cast<int>(upper_) << ',' << static_cast<int>(lower_) << '|';
  for (int i = 0; i < total_points(); ++i) os << color_char(color(i));
  os << '|';
  auto bl = blocks();
  for (size_t b = 0; b < bl.size(); ++b) {
    if (b) os << ';';
    for (size_t i = 0; i < bl[b].size(); ++i) {
      if (i) os << ' ';
      os << bl[b][i];
    }
  }
  return os.str();
}

Partition Partition::parse_text(std::string_view text) {
  const auto bar1 = text.find('|');
  if (bar1 == std::string_view::npos) throw Error(Err::ParseError, "missing '|' in partition text");
  const auto bar2 = text.find('|', bar1 + 1);
  if (bar2 == std::string_view::npos) throw Error(Err::ParseError, "missing second '|'");
  const std::string head(text.substr(0, bar1));
  const auto comma = head.find(',');
  if (comma == std::string::npos) throw Error(Err::ParseError, "missing ',' in shape");
  int k = 0, l = 0;
  try {
    k = std::stoi(head.substr(0, comma));
    l = std::stoi(head.substr(comma + 1));
  } catch (const std::exception&) {
    throw Error(Err::ParseError, "bad shape '" + head + "'");
  }
  if (k < 0 || l < 0) throw Error(Err::ParseError, "negative row length");
  std::string colors(text.substr(bar1 + 1, bar2 - bar1 - 1));
  if (static_cast<int>(colors.size()) != k + l)
    throw Error(Err::ParseError, "color string length does not match shape");
  std::vector<std::vector<int>> blocks;
  std::string rest(text.substr(bar2 + 1));
  if (!rest.empty() || k + l == 0) {
    std::stringstream ss(rest);
    std::string blk;
    while (std::getline(ss, blk, ';')) {
      std::vector<int> idx;
      std::stringstream bs(blk);
      int v;
      while (bs >> v) idx.push_back(v);
      if (!idx.empty()) blocks.push_back(std::move(idx));
    }
  }
  return make(colors.substr(0, static_cast<size_t>(k)), colors.substr(static_cast<size_t>(k)), blocks);
}

size_t Partition::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix((static_cast<std::uint64_t>(upper_) << 40) | (static_cast<std::uint64_t>(lower_) << 32) |
      colorbits_);
  const int n = total_points();
  for (int i = 0; i < n; i += 8) {
    std::uint64_t v = 0;
    for (int j = i; j < std::min(n, i + 8); ++j) v = (v << 8) | block_[static_cast<size_t>(j)];
    mix(v);
  }
  return static_cast<size_t>(h);
}

PartitionStats stats(const Partition& p) {
  PartitionStats st;
  st.blocks = p.block_count();
  std::vector<std::uint8_t> has_up(static_cast<size_t>(st.blocks), 0);
  std::vector<std::uint8_t> has_low(static_cast<size_t>(st.blocks), 0);
  for (int i = 0; i < p.total_points(); ++i) {
    if (p.is_upper_point(i))
      has_up[static_cast<size_t>(p.block_id(i))] = 1;
    else
      has_low[static_cast<size_t>(p.block_id(i))] = 1;
  }
  for (int b = 0; b < st.blocks; ++b)
    if (has_up[static_cast<size_t>(b)] && has_low[static_cast<size_t>(b)]) ++st.through;
  st.beta = st.blocks - st.through;
  return st;
}

Partition tensor(const Partition& p, const Partition& q) {
  const int k = p.upper_len() + q.upper_len();
  const int l = p.lower_len() + q.lower_len();
  if (k + l > Partition::kMaxPoints) throw Error(Err::BoundExceeded, "tensor exceeds 32 points");
  std::uint32_t bits = 0;
  int assign[Partition::kMaxPoints];
  const int off = p.block_count();
  auto put = [&](int pos, Color c, int blk) {
    if (c == Color::Black) bits |= 1u << pos;
    assign[pos] = blk;
  };
  for (int i = 0; i < p.upper_len(); ++i) put(i, p.color(i), p.block_id(i));
  for (int j = 0; j < q.upper_len(); ++j) put(p.upper_len() + j, q.color(j), off + q.block_id(j));
  for (int i = 0; i < p.lower_len(); ++i)
    put(k + i, p.color(p.upper_len() + i), p.block_id(p.upper_len() + i));
  for (int j = 0; j < q.lower_len(); ++j)
    put(k + p.lower_len() + j, q.color(q.upper_len() + j), off + q.block_id(q.upper_len() + j));
  return Partition::from_raw(k, l, bits, assign);
}

Composed compose(const Partition& q, const Partition& p) {
  const int k = p.upper_len();
  const int l = p.lower_len();
  const int m = q.lower_len();
  if (q.upper_len() != l)
    throw Error(Err::SizeMismatch, "lower row of top factor has " + std::to_string(l) +
                                       " points, upper row of bottom factor has " +
                                       std::to_string(q.upper_len()));
  for (int j = 0; j < l; ++j) {
    if (p.color(k + j) != q.color(j))
      throw Error(Err::ColorMismatch, "interface point " + std::to_string(j) + " differs");
  }
  if (k + l + m >= kMaxPoints) throw Error(Err::RangeError, "composition too large");
  if (k + m > Partition::kMaxPoints) throw Error(Err::BoundExceeded, "composite exceeds 32 points");
  // Points 0..k-1 upper, k..k+l-1 middle, k+l..k+l+m-1 lower.
  UnionFind uf(k + l + m);
  int rep_p[kMaxPoints], rep_q[kMaxPoints];
  for (int b = 0; b < p.block_count(); ++b) rep_p[b] = -1;
  for (int i = 0; i < k + l; ++i) {
    int& r = rep_p[p.block_id(i)];
    if (r == -1)
      r = i;
    else
      uf.unite(i, r);
  }
  for (int b = 0; b < q.block_count(); ++b) rep_q[b] = -1;
  for (int i = 0; i < l + m; ++i) {
    const int pt = k + i;  // q's upper row sits on the middle points
    int& r = rep_q[q.block_id(i)];
    if (r == -1)
      r = pt;
    else
      uf.unite(pt, r);
  }
  std::uint8_t touches_outer[kMaxPoints] = {0};
  for (int i = 0; i < k; ++i) touches_outer[uf.find(i)] = 1;
  for (int i = k + l; i < k + l + m; ++i) touches_outer[uf.find(i)] = 1;
  int loops = 0;
  for (int i = k; i < k + l; ++i)
    if (uf.find(i) == i && !touches_outer[i]) ++loops;

  std::uint32_t bits = 0;
  int assign[Partition::kMaxPoints];
  for (int i = 0; i < k; ++i) {
    if (p.color(i) == Color::Black) bits |= 1u << i;
    assign[i] = uf.find(i);
  }
  for (int j = 0; j < m; ++j) {
    if (q.color(l + j) == Color::Black) bits |= 1u << (k + j);
    assign[k + j] = uf.find(k + l + j);
  }
  return {Partition::from_raw(k, m, bits, assign), loops};
}

Partition adjoint(const Partition& p) {
  const int k = p.upper_len();
  const int l = p.lower_len();
  std::uint32_t bits = 0;
  int assign[Partition::kMaxPoints];
  for (int j = 0; j < l; ++j) {
    if (p.color(k + j) == Color::Black) bits |= 1u << j;
    assign[j] = p.block_id(k + j);
  }
  for (int i = 0; i < k; ++i) {
    if (p.color(i) == Color::Black) bits |= 1u << (l + i);
    assign[l + i] = p.block_id(i);
  }
  return Partition::from_raw(l, k, bits, assign);
}

Partition rotate(const Partition& p, Corner corner) {
  const int k = p.upper_len();
  const int l = p.lower_len();
  const bool from_upper = corner == Corner::UpperLeftToLower || corner == Corner::UpperRightToLower;
  if (from_upper && k == 0) throw Error(Err::EmptyRow, "upper row is empty");
  if (!from_upper && l == 0) throw Error(Err::EmptyRow, "lower row is empty");

  const int nk = from_upper ? k - 1 : k + 1;
  const int nl = from_upper ? l + 1 : l - 1;
  const int n = k + l;
  std::uint32_t bits = 0;
  int assign[Partition::kMaxPoints];
  // dest[i] = new flat position of old point i
  int dest[Partition::kMaxPoints];
  switch (corner) {
    case Corner::UpperLeftToLower:
      dest[0] = nk;  // leftmost new lower point
      for (int i = 1; i < k; ++i) dest[i] = i - 1;
      for (int j = 0; j < l; ++j) dest[k + j] = nk + 1 + j;
      break;
    case Corner::UpperRightToLower:
      dest[k - 1] = nk + nl - 1;  // rightmost new lower point
      for (int i = 0; i < k - 1; ++i) dest[i] = i;
      for (int j = 0; j < l; ++j) dest[k + j] = nk + j;
      break;
    case Corner::LowerLeftToUpper:
      dest[k] = 0;
      for (int i = 0; i < k; ++i) dest[i] = i + 1;
      for (int j = 1; j < l; ++j) dest[k + j] = nk + j - 1;
      break;
    case Corner::LowerRightToUpper:
      dest[k + l - 1] = nk - 1;  // rightmost new upper point
      for (int i = 0; i < k; ++i) dest[i] = i;
      for (int j = 0; j < l - 1; ++j) dest[k + j] = nk + j;
      break;
  }
  const int moved = from_upper ? (corner == Corner::UpperLeftToLower ? 0 : k - 1)
                               : (corner == Corner::LowerLeftToUpper ? k : k + l - 1);
  for (int i = 0; i < n; ++i) {
    Color c = p.color(i);
    if (i == moved) c = flip(c);
    if (c == Color::Black) bits |= 1u << dest[i];
    assign[dest[i]] = p.block_id(i);
  }
  return Partition::from_raw(nk, nl, bits, assign);
}

Partition rotate_clockwise(const Partition& p) {
  if (p.total_points() == 0) return p;
  if (p.upper_len() > 0) return rotate(rotate(p, Corner::UpperLeftToLower), Corner::LowerRightToUpper);
  return rotate(rotate(p, Corner::LowerRightToUpper), Corner::UpperLeftToLower);
}

Partition to_upper_row(const Partition& p) {
  Partition r = p;
  while (r.lower_len() > 0) r = rotate(r, Corner::LowerRightToUpper);
  return r;
}

Partition reverse(const Partition& p) {
  const int k = p.upper_len();
  const int l = p.lower_len();
  const int n = k + l;
  (void)n;
  std::uint32_t bits = 0;
  int assign[Partition::kMaxPoints];
  // old lower j -> new upper l-1-j ; old upper i -> new lower k-1-i
  for (int j = 0; j < l; ++j) {
    if (flip(p.color(k + j)) == Color::Black) bits |= 1u << (l - 1 - j);
    assign[l - 1 - j] = p.block_id(k + j);
  }
  for (int i = 0; i < k; ++i) {
    if (flip(p.color(i)) == Color::Black) bits |= 1u << (l + k - 1 - i);
    assign[l + k - 1 - i] = p.block_id(i);
  }
  return Partition::from_raw(l, k, bits, assign);
}

bool is_noncrossing(const Partition& p) {
  const int k = p.upper_len();
  const int l = p.lower_len();
  const int n = k + l;
  if (p.block_count() <= 1) return true;
  // Boundary order: upper left->right, then lower right->left.
  std::vector<int> label(static_cast<size_t>(n));
  for (int i = 0; i < k; ++i) label[static_cast<size_t>(i)] = p.block_id(i);
  for (int j = 0; j < l; ++j) label[static_cast<size_t>(k + j)] = p.block_id(k + l - 1 - j);
  const int nb = p.block_count();
  for (int a = 0; a < nb; ++a) {
    for (int b = a + 1; b < nb; ++b) {
      int changes = -1;
      int last = -1;
      for (int i = 0; i < n; ++i) {
        const int lab = label[static_cast<size_t>(i)];
        if (lab != a && lab != b) continue;
        if (lab != last) {
          ++changes;
          last = lab;
        }
      }
      if (changes >= 3) return false;
    }
  }
  return true;
}

std::vector<Partition> blocks_of(const Partition& p) {
  std::vector<Partition> out;
  for (const auto& blk : p.blocks()) {
    std::string up, low;
    for (int i : blk) {
      if (p.is_upper_point(i))
        up += color_char(p.color(i));
      else
        low += color_char(p.color(i));
    }
    std::vector<int> all(blk.size());
    std::iota(all.begin(), all.end(), 0);
    out.push_back(Partition::make(up, low, {all}));
  }
  return out;
}

namespace {

// Noncrossing set partitions of n linearly ordered points, generated with a
// stack of joinable blocks: joining a block closes everything opened after it.
void enumerate_nc_rec(int n, int i, std::vector<int>& assign, std::vector<int>& stack, int& next_id,
                      const std::function<void(const std::vector<int>&)>& emit) {
  if (i == n) {
    emit(assign);
    return;
  }
  for (int d = static_cast<int>(stack.size()) - 1; d >= 0; --d) {
    std::vector<int> popped(stack.begin() + d + 1, stack.end());
    stack.resize(static_cast<size_t>(d + 1));
    assign[static_cast<size_t>(i)] = stack[static_cast<size_t>(d)];
    enumerate_nc_rec(n, i + 1, assign, stack, next_id, emit);
    stack.insert(stack.end(), popped.begin(), popped.end());
  }
  stack.push_back(next_id);
  assign[static_cast<size_t>(i)] = next_id;
  ++next_id;
  enumerate_nc_rec(n, i + 1, assign, stack, next_id, emit);
  --next_id;
  stack.pop_back();
}

void enumerate_all_rec(int n, int i, int max_used, std::vector<int>& assign,
                       const std::function<void(const std::vector<int>&)>& emit) {
  if (i == n) {
    emit(assign);
    return;
  }
  for (int b = 0; b <= max_used + 1; ++b) {
    assign[static_cast<size_t>(i)] = b;
    enumerate_all_rec(n, i + 1, std::max(max_used, b), assign, emit);
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(std::string_view upper_colors,
                                            std::string_view lower_colors, bool noncrossing_only,
                                            int max_points) {
  const int k = static_cast<int>(upper_colors.size());
  const int l = static_cast<int>(lower_colors.size());
  const int n = k + l;
  if (n > max_points)
    throw Error(Err::BoundExceeded, std::to_string(n) + " points exceeds enumeration bound " +
                                        std::to_string(max_points));
  std::uint32_t bits = 0;
  for (int i = 0; i < k; ++i)
    if (color_from_char(upper_colors[static_cast<size_t>(i)]) == Color::Black) bits |= 1u << i;
  for (int j = 0; j < l; ++j)
    if (color_from_char(lower_colors[static_cast<size_t>(j)]) == Color::Black) bits |= 1u << (k + j);

  std::vector<Partition> out;
  if (n == 0) {
    out.push_back(empty_partition());
    return out;
  }
  if (noncrossing_only) {
    // Enumerate in boundary order, then map back to flat indexing.
    std::vector<int> bnd_to_flat(static_cast<size_t>(n));
    for (int i = 0; i < k; ++i) bnd_to_flat[static_cast<size_t>(i)] = i;
    for (int j = 0; j < l; ++j) bnd_to_flat[static_cast<size_t>(k + j)] = k + l - 1 - j;
    std::vector<int> assign(static_cast<size_t>(n));
    std::vector<int> stack;
    int next_id = 0;
    enumerate_nc_rec(n, 0, assign, stack, next_id, [&](const std::vector<int>& a) {
      int flat[Partition::kMaxPoints];
      for (int i = 0; i < n; ++i) flat[bnd_to_flat[static_cast<size_t>(i)]] = a[static_cast<size_t>(i)];
      out.push_back(Partition::from_raw(k, l, bits, flat));
    });
  } else {
    std::vector<int> assign(static_cast<size_t>(n));
    enumerate_all_rec(n, 0, -1, assign, [&](const std::vector<int>& a) {
      out.push_back(Partition::from_raw(k, l, bits, a.data()));
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string render_ascii(const Partition& p) {
  auto point_glyph = [&](int i) { return p.color(i) == Color::White ? "o" : "*"; };
  auto id_glyph = [&](int i) {
    const int b = p.block_id(i);
    return std::string(1, b < 10 ? static_cast<char>('0' + b) : static_cast<char>('a' + b - 10));
  };
  std::ostringstream os;
  os << '(' << p.upper_len() << ',' << p.lower_len() << ")\n";
  for (int i = 0; i < p.upper_len(); ++i) os << point_glyph(i) << ' ';
  os << '\n';
  for (int i = 0; i < p.upper_len(); ++i) os << id_glyph(i) << ' ';
  os << '\n';
  for (int j = 0; j < p.lower_len(); ++j) os << id_glyph(p.upper_len() + j) << ' ';
  os << '\n';
  for (int j = 0; j < p.lower_len(); ++j) os << point_glyph(p.upper_len() + j) << ' ';
  os << '\n';
  return os.str();
}

Partition empty_partition() { return Partition::make("", "", {}); }

Partition white_identity() { return Partition::make("w", "w", {{0, 1}}); }

Partition black_identity() { return Partition::make("b", "b", {{0, 1}}); }

Partition identity_strand(Color up, Color low) {
  std::string u(1, color_char(up)), l(1, color_char(low));
  return Partition::make(u, l, {{0, 1}});
}

Partition pi(int k) {
  if (k == 0) throw Error(Err::RangeError, "pi(0) is ambiguous; use pi_zero_plus/minus");
  const int m = k > 0 ? k : -k;
  const std::string word(static_cast<size_t>(m), k > 0 ? 'w' : 'b');
  std::vector<int> all(static_cast<size_t>(2 * m));
  std::iota(all.begin(), all.end(), 0);
  return Partition::make(word, word, {all});
}

Partition pi_zero_plus() { return Partition::make("wb", "wb", {{0, 1, 2, 3}}); }

Partition pi_zero_minus() { return Partition::make("bw", "bw", {{0, 1, 2, 3}}); }

Partition theta(int s) {
  if (s == 0) return empty_partition();
  const int m = s > 0 ? s : -s;
  const std::string word(static_cast<size_t>(m), s > 0 ? 'w' : 'b');
  std::vector<int> all(static_cast<size_t>(m));
  std::iota(all.begin(), all.end(), 0);
  return Partition::make(word, "", {all});
}

Partition beta_partition(int k) {
  if (k == 0) return empty_partition();
  const int m = k > 0 ? k : -k;
  const std::string word(static_cast<size_t>(m), k > 0 ? 'w' : 'b');
  std::vector<int> up(static_cast<size_t>(m)), low(static_cast<size_t>(m));
  std::iota(up.begin(), up.end(), 0);
  std::iota(low.begin(), low.end(), m);
  return Partition::make(word, word, {up, low});
}

Partition h_square(int k) {
  if (k < 1) throw Error(Err::RangeError, "h_square needs k >= 1");
  const int n = 2 * k;
  const std::string word(static_cast<size_t>(n), 'w');
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < k; ++i) blocks.push_back({i, n - 1 - i});
  for (int i = 0; i < k; ++i) blocks.push_back({n + i, 2 * n - 1 - i});
  return Partition::make(word, word, blocks);
}

Partition h_boxvert(int k) {
  if (k < 1) throw Error(Err::RangeError, "h_boxvert needs k >= 1");
  const int n = 2 * k;
  const std::string word(static_cast<size_t>(n), 'w');
  std::vector<std::vector<int>> blocks;
  blocks.push_back({0, n - 1, n, 2 * n - 1});
  for (int i = 1; i < k; ++i) blocks.push_back({i, n - 1 - i});
  for (int i = 1; i < k; ++i) blocks.push_back({n + i, 2 * n - 1 - i});
  return Partition::make(word, word, blocks);
}

Partition crossing_swap() { return Partition::make("ww", "ww", {{0, 3}, {1, 2}}); }

}  // namespace ncpart
