#pragma once

#include <optional>

#include "ncpart/category.hpp"
#include "ncpart/partition.hpp"

namespace ncpart {

/// p equals its own square and its own reflection.
bool is_projective(const Partition& p);

/// Building partitions: all lower points white, in pairwise distinct blocks,
/// each connected upward, with strictly increasing minimal upper neighbours.
std::optional<std::string> why_not_building(const Partition& p);
inline bool is_building(const Partition& p) { return !why_not_building(p).has_value(); }

struct ThroughBlockDecomposition {
  Partition lower;  // p_l
  Partition upper;  // p_u
  int through = 0;
};

/// The unique pair of building partitions with p = adjoint(p_l) * p_u.
ThroughBlockDecomposition through_block_decomposition(const Partition& p);

/// The equivalence witness adjoint(q_u) * p_u; requires t(p) == t(q).
Partition r_partition(const Partition& p, const Partition& q);

/// p ~ q iff the witness r_partition(p, q) is a member.
Membership equivalent(const Category& cat, const Partition& p, const Partition& q);
Membership equivalent_to_empty(const Category& cat, const Partition& p);

/// pq = qp = q, loop counts unconstrained. Requires equal colorings.
bool dominates(const Partition& p, const Partition& q);

enum class CapRow { Upper, Lower, Symmetric };

/// Collapses the points start..start+m-1 of the chosen row with the one-line
/// block partition b (an (m,0) partition whose colors match the capped
/// points). Symmetric capping acts on both rows and needs p projective.
Partition cap(const Partition& p, CapRow row, int start, const Partition& b);

/// Maximal tensor splitting of a noncrossing projective partition, grouped
/// as [B_0, A_1, B_1, ..., A_t, B_t] with t(A_i) = 1 and t(B_i) = 0 (the
/// B_i may be empty partitions). parts.size() == 2*through + 1.
struct Factorization {
  std::vector<Partition> parts;
  int through = 0;
};
Factorization factorize(const Partition& p);

/// Sub-partitions sitting in the gaps of the frame block (the through-block
/// when t(p) == 1, else the block of the first upper point), restricted to
/// the upper row; outer gaps included. Empty gaps are omitted.
std::vector<Partition> extract_fillers(const Partition& p);

struct ElementaryForm {
  Partition through_free;   // B, a tensor product of b*b factors
  Partition elementary;     // one-block projective with the reduced color word
  Membership verified;      // equivalent(cat, A, B (x) elementary)
};

/// Splits a t=1 projective member into a through-free part and an
/// elementary (one-block) part, verified through the equivalence oracle.
ElementaryForm to_elementary(const Category& cat, const Partition& A);

struct WitnessReport {
  Tri block_stable = Tri::Unknown;
  std::optional<Partition> witness;  // one-line b with b*b in C but b not in C
};

WitnessReport find_blockstability_witness(const Category& cat, int scan_points = -1);

/// Groups projective partitions into equivalence classes (indices into the
/// input); only Yes answers from the membership oracle merge classes.
std::vector<std::vector<size_t>> equivalence_classes(const Category& cat,
                                                     const std::vector<Partition>& projectives);

}  // namespace ncpart
