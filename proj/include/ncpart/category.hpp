#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ncpart/partition.hpp"

namespace ncpart {

enum class Tri { Yes, No, Unknown };

enum class FamilyKind { AllNC, Pairs, Unitary, Cs, Cinf, C0plus, AllP };

/// Closed-form families: AllNC (every noncrossing partition), Pairs (blocks
/// of size two, any colors), Unitary (color-matched pairs), Cs(s) / Cinf
/// (per-block, per-row white-minus-black counts congruent mod s / equal),
/// AllP (everything), C0plus (generated by pi_zero_plus; no closed form,
/// resolved by bounded closure).
struct FamilyTag {
  FamilyKind kind = FamilyKind::AllNC;
  int s = 0;

  static FamilyTag parse(std::string_view text);
  std::string to_string() const;
  bool operator==(const FamilyTag&) const = default;
};

/// Exact membership by the family's combinatorial characterization.
/// Throws UnsupportedFamily for C0plus.
bool oracle_member(const FamilyTag& tag, const Partition& p);

/// True when every block of a member is itself a member, as a property of
/// the family's defining predicate.
bool oracle_is_hereditary(const FamilyTag& tag);

std::vector<Partition> family_generators(const FamilyTag& tag);

struct CategorySpec {
  std::vector<Partition> generators;
  int bound = 8;
  std::optional<FamilyTag> oracle;
};

enum class Membership { Yes, NoWithinBound, Unknown };

using PartitionSet = std::unordered_set<Partition, PartitionHash>;

/// A category of partitions, backed either by a closed-form family oracle
/// or by the bounded saturation of a generator set. Immutable once built.
class Category {
public:
  /// Least fixpoint of the five category operations plus both identities,
  /// restricted to partitions with at most spec.bound points.
  static Category closure(CategorySpec spec, int hard_cap = 10);
  static Category from_family(const FamilyTag& tag, int bound);
  /// Wraps an already-saturated member set (cache loads).
  static Category from_table(CategorySpec spec, PartitionSet members);

  const CategorySpec& spec() const { return spec_; }
  int bound() const { return spec_.bound; }
  bool oracle_backed() const { return spec_.oracle.has_value() && !table_.has_value(); }
  const std::optional<FamilyTag>& oracle() const { return spec_.oracle; }

  Membership member(const Partition& p) const;

  std::vector<Partition> members_upto(int max_points) const;
  std::vector<Partition> members_with_colors(std::string_view upper, std::string_view lower) const;
  /// Projective noncrossing members with upper and lower coloring `word`.
  std::vector<Partition> projective_members(std::string_view word) const;

  const PartitionSet* table() const { return table_ ? &*table_ : nullptr; }
  size_t table_size() const { return table_ ? table_->size() : 0; }

  std::string describe() const;

private:
  CategorySpec spec_;
  std::optional<PartitionSet> table_;
};

struct BlockStabilityReport {
  Tri verdict = Tri::Unknown;
  bool scan_clean = false;
  int scanned_points = 0;
  std::optional<Partition> bad_member;
  std::optional<Partition> bad_block;
};

/// Scans members (up to scan_points, default min(bound, 6)) for a block
/// outside the category. Verdict Yes needs a hereditary oracle; a clean scan
/// without one stays Unknown.
BlockStabilityReport is_block_stable(const Category& cat, int scan_points = -1);

// Closure table cache (JSON file per spec+bound).
std::string cache_file_name(const CategorySpec& spec);
bool save_table(const Category& cat, const std::string& path);
std::optional<Category> load_table(const CategorySpec& spec, const std::string& path);

}  // namespace ncpart
