#pragma once

// Reference constructions used to check the in-place path. None of these are
// space-bounded.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace assoc::harness {

using Key = std::int64_t;

/// Comparison counting: rank_i = 1 + #{j : k_j < k_i} + #{j < i : k_j = k_i}.
/// O(n^2). Throws KeyOutOfRange for keys outside [1, n].
std::vector<Key> counting_ranks_oracle(std::span<const Key> keys);

struct PlacedReference {
  std::vector<Key> kp;    // keys after one copy of each value v is homed at v
  std::vector<Key> pi_p;  // ranks of kp, minimum rank of each value negated
};

/// Builds kp and pi_p from keys and any rank permutation consistent with them.
/// The record of each value's minimum rank is tagged and walked to the slot
/// equal to its key; displaced untagged records fill the vacated slots.
/// Throws std::invalid_argument when ranks is not a permutation consistent
/// with the key order.
PlacedReference build_pi_p_reference(std::span<const Key> keys, std::span<const Key> ranks);

/// The key each slot of a rank permutation stands for: p itself for a
/// negative slot, otherwise the index of the negative entry whose rank block
/// contains the slot's rank.
std::vector<Key> implied_keys(std::span<const Key> pi_p);

/// Sorted copy via the standard library.
std::vector<Key> reference_sort(std::span<const Key> keys);

/// True iff `after` is non-decreasing and a rearrangement of `before`.
bool verify_sorted_and_multiset(std::span<const Key> before, std::span<const Key> after);

}  // namespace assoc::harness
