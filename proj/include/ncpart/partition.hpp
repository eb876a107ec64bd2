#pragma once

#include <cstdint>
#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncpart {

enum class Color : std::uint8_t { White = 0, Black = 1 };

inline Color flip(Color c) { return c == Color::White ? Color::Black : Color::White; }
inline char color_char(Color c) { return c == Color::White ? 'w' : 'b'; }
Color color_from_char(char c);

enum class Err {
  OverlappingBlocks,
  UncoveredPoint,
  BadIndex,
  SizeMismatch,
  ColorMismatch,
  EmptyRow,
  BoundExceeded,
  NotNoncrossing,
  ThroughBlockMismatch,
  NotProjective,
  NotThroughOne,
  NotBuilding,
  RangeError,
  DimensionBudgetExceeded,
  NonMemberPartition,
  UnsupportedFamily,
  HorizonTooSmall,
  ParseError,
};

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& msg);
  Err code() const { return code_; }

private:
  Err code_;
};

/// A two-colored (k,l) partition. Points are indexed 0..k+l-1, upper row
/// left to right, then lower row left to right. Blocks are stored as one
/// label per point; labels are renumbered by first occurrence, so equal
/// partitions have bitwise-equal fields (canonical form). Capacity is 32
/// points, enough for every bounded computation here; the type is flat and
/// trivially copyable.
class Partition {
public:
  static constexpr int kMaxPoints = 32;

  Partition() { block_.fill(0); }

  static Partition make(std::string_view upper_colors, std::string_view lower_colors,
                        const std::vector<std::vector<int>>& blocks);
  // Canonicalizes an arbitrary point -> block-label assignment.
  static Partition from_assignment(int upper_len, int lower_len, const std::vector<Color>& colors,
                                   const std::vector<int>& block_of_point);
  static Partition from_raw(int upper_len, int lower_len, std::uint32_t colorbits,
                            const int* block_of_point);

  int upper_len() const { return upper_; }
  int lower_len() const { return lower_; }
  int total_points() const { return upper_ + lower_; }
  bool empty() const { return total_points() == 0; }
  bool is_upper_point(int i) const { return i < upper_; }

  Color color(int i) const { return (colorbits_ >> i & 1u) ? Color::Black : Color::White; }
  std::vector<Color> colors() const;
  std::string upper_word() const;
  std::string lower_word() const;

  int block_count() const { return nblocks_; }
  int block_id(int point) const { return block_[static_cast<size_t>(point)]; }
  std::vector<std::vector<int>> blocks() const;

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const;

  std::string to_text() const;  // "k,l|COLORS|b0;b1;..."
  static Partition parse_text(std::string_view text);

  size_t hash() const;

private:
  std::uint8_t upper_ = 0;
  std::uint8_t lower_ = 0;
  std::uint8_t nblocks_ = 0;
  std::uint32_t colorbits_ = 0;  // bit i set = point i is black
  std::array<std::uint8_t, kMaxPoints> block_;
};

struct PartitionHash {
  size_t operator()(const Partition& p) const { return p.hash(); }
};

struct PartitionStats {
  int blocks = 0;
  int through = 0;
  int beta = 0;
};

PartitionStats stats(const Partition& p);

Partition tensor(const Partition& p, const Partition& q);

struct Composed {
  Partition partition;
  int loops = 0;
};

/// Vertical concatenation q∘p: p sits on top (its upper row is the
/// result's upper row), q continues below. Requires lower_len(p) ==
/// upper_len(q) and matching interface colors.
Composed compose(const Partition& q, const Partition& p);

Partition adjoint(const Partition& p);

enum class Corner {
  UpperLeftToLower,
  UpperRightToLower,
  LowerLeftToUpper,
  LowerRightToUpper,
};

Partition rotate(const Partition& p, Corner corner);

/// One shape-preserving clockwise step of the boundary cycle; total_points()
/// many steps return the original partition.
Partition rotate_clockwise(const Partition& p);

/// All points moved to the upper row (boundary order preserved).
Partition to_upper_row(const Partition& p);

/// The bar operation: all upper points rotated down, all lower points
/// rotated up. Swaps rows in reversed order and flips every color.
Partition reverse(const Partition& p);

bool is_noncrossing(const Partition& p);

/// Each block extracted as a standalone partition, keeping row membership
/// and colors; ordered by block id.
std::vector<Partition> blocks_of(const Partition& p);

/// All partitions with the given row colorings, canonically ordered.
std::vector<Partition> enumerate_partitions(std::string_view upper_colors,
                                            std::string_view lower_colors, bool noncrossing_only,
                                            int max_points = 8);

std::string render_ascii(const Partition& p);

// Named partitions.
Partition empty_partition();
Partition white_identity();
Partition black_identity();
Partition identity_strand(Color up, Color low);
/// One-block (|k|,|k|) partition, all white for k>0, all black for k<0.
Partition pi(int k);
Partition pi_zero_plus();
Partition pi_zero_minus();
/// One-block (s,0) partition, all points white (all black for s<0).
Partition theta(int s);
/// theta(k)* theta(k): two stacked one-row blocks. beta_partition(0) is empty.
Partition beta_partition(int k);
/// Nested all-white row pairings in NC(2k,2k): point i joins point 2k-1-i
/// within each row.
Partition h_square(int k);
/// h_square(k) with the two outermost arcs merged into one block.
Partition h_boxvert(int k);
/// The (2,2) crossing swap, all white.
Partition crossing_swap();

}  // namespace ncpart
