#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncpart/category.hpp"
#include "ncpart/projective.hpp"

namespace ncpart {

/// A label names an equivalence class of one-block projective partitions:
/// integer k for the all-white (k > 0) / all-black (k < 0) blocks, and the
/// two mixed (2,2) marks. In the cyclic regime integer labels are reduced
/// and the marks collapse to 0.
struct Label {
  enum class Tag { Int, ZeroPlus, ZeroMinus };
  Tag tag = Tag::Int;
  long k = 0;

  static Label integer(long v) { return {Tag::Int, v}; }
  static Label zero_plus() { return {Tag::ZeroPlus, 0}; }
  static Label zero_minus() { return {Tag::ZeroMinus, 0}; }

  bool operator==(const Label&) const = default;
  bool operator<(const Label& o) const {
    if (tag != o.tag) return tag < o.tag;
    return k < o.k;
  }
  std::string to_string() const;
  static Label parse(std::string_view text);
};

enum class IClass { Zstar, PlusMinusOne };

enum class SKind { One, PlusMinus, Zs, CalS };

struct SClass {
  SKind kind = SKind::One;
  long s = 0;               // Zs only; 0 means no cyclic witness within bound
  bool unknown_tail = false;
  bool infinite_certified = false;  // family predicate rules out every theta witness
  int certified_bound = 0;
  bool oracle_exact = false;

  std::string to_string() const;
};

IClass compute_I(const Category& cat);
SClass compute_S(const Category& cat);

/// Label arithmetic for a fixed S-classification: canonical forms,
/// conjugation, the partial fusion, and one partition representative per
/// label (fixed once per category).
class FusionSystem {
public:
  FusionSystem(const Category& cat, SClass cls);

  const SClass& s_class() const { return cls_; }
  Label canonical(Label x) const;
  Label conjugate(Label x) const;
  std::optional<Label> fuse(Label x, Label y) const;
  Partition representative(Label x) const;
  /// All labels whose representatives have at most max_points points
  /// (the full alphabet for the finite kinds).
  std::vector<Label> alphabet(int max_points = 32) const;

private:
  SClass cls_;
};

FusionSystem fusion_system(const Category& cat);

using FusionWord = std::vector<Label>;
using WordMultiset = std::map<FusionWord, long long>;

std::string word_to_string(const FusionWord& w);
FusionWord conjugate_word(const FusionSystem& sys, const FusionWord& w);

/// The free fusion semiring product on words: sum over all splittings
/// w = az, w' = conj(z) b of ab plus the junction fusion a*b.
WordMultiset word_tensor(const FusionSystem& sys, const FusionWord& w, const FusionWord& wp);
WordMultiset element_tensor(const FusionSystem& sys, const WordMultiset& a, const WordMultiset& b);

Partition phi(const FusionSystem& sys, const FusionWord& w);

enum class SummandKind { Tensor, Square, Boxvert };

struct TensorSummand {
  SummandKind kind = SummandKind::Tensor;
  int k = 0;
  Partition partition;
  Membership present = Membership::Unknown;
};

/// Decomposition data for a product of the representations attached to two
/// projective partitions: the plain tensor term plus the strand-collapsing
/// terms for each depth k, flagged by membership.
std::vector<TensorSummand> rep_tensor(const Category& cat, const Partition& p, const Partition& q);

struct FreenessReport {
  Tri free = Tri::Unknown;
  bool no_witness = false;
  bool block_stable = false;
  bool phi_respects_tensor = false;
  bool no_nontrivial_onedim = false;
  std::optional<Partition> witness;
  int scan_points = 0;
  int checked_word_pairs = 0;
  int skipped_word_pairs = 0;
};

/// Freeness of the fusion semiring, with the four equivalent conditions
/// checked independently at desk scale.
FreenessReport is_free(const Category& cat, int scan_points = -1, int word_points = 6);

struct JClass {
  IClass i = IClass::PlusMinusOne;
  bool is_nZ = false;        // J = nZ (when the one-block index set is all of Z*)
  long n = 0;                // 0 encodes J = {0}
  std::vector<long> elements;  // explicit J in the {-1,1} regime
  std::string to_string() const;
};

struct GClass {
  long order = 1;            // 1 = trivial, 0 = no finiteness witness within bound
  bool unknown_tail = false;
  long generator_index = 0;  // n with beta_n generating; 0 when trivial
  std::string generator;     // printable form
  std::string to_string() const;
};

JClass compute_J(const Category& cat);
GClass compute_G(const Category& cat);
Tri is_G_finite(const Category& cat);

struct PhiInjectivityReport {
  bool injective_within_horizon = true;
  int pairs_checked = 0;
  int pairs_skipped = 0;
  std::optional<std::pair<FusionWord, FusionWord>> violation;
};

PhiInjectivityReport phi_injectivity_check(const Category& cat, int length_bound);

struct SubringCaseReport {
  int case_id = 0;  // 1..4; 0 = evidence does not fit any case
  std::string description;
  bool beta1_member = false;
  bool beta2_member = false;
  bool theta2_member = false;
  bool one_equiv_minus_one = false;
  std::string s_class;
  std::string j_class;
  std::string g_class;
};

SubringCaseReport subring_case_report(const Category& cat);

struct RingGenerationReport {
  bool all_reached = false;
  int classes_at_or_below_t = 0;
  int reached = 0;
  int skipped_products = 0;
  std::optional<Partition> unreached_representative;
};

/// Replays the inductive generation of the representation ring: every
/// equivalence class with t <= t_bound must appear among iterated
/// rep_tensor summands of label words and through-free classes.
RingGenerationReport ring_generation_verify(const Category& cat, int t_bound, int scan_points = -1);

}  // namespace ncpart
