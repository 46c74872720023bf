#pragma once

// End-to-end in-place sort of keys in [1, n]: build the rank permutation,
// permute it associatively, then read the sorted keys back off the result.

#include <concepts>
#include <cstdint>
#include <span>
#include <vector>

#include "assoc/assoc_core.hpp"
#include "assoc/errors.hpp"
#include "assoc/key_buffer.hpp"
#include "assoc/key_pipeline.hpp"
#include "assoc/probe.hpp"

namespace assoc {

/// A run of equal keys in sorted order, ranks inclusive.
struct Block {
  std::int64_t key_value = 0;
  std::int64_t first_rank = 0;
  std::int64_t last_rank = 0;

  std::int64_t length() const noexcept { return last_rank - first_rank + 1; }
  friend bool operator==(const Block&, const Block&) = default;
};

/// Throws MalformedPermutedRanks unless slot 1 is negative and every positive
/// entry equals its index.
template <std::signed_integral Int>
void check_permuted_ranks(std::span<const Int> buf) {
  if (buf.empty()) return;
  if (buf[0] >= 0) throw MalformedPermutedRanks("permuted ranks: slot 1 is not an inverse");
  for (std::size_t i = 0; i < buf.size(); ++i) {
    if (buf[i] > 0 && static_cast<std::size_t>(buf[i]) != i + 1) {
      throw MalformedPermutedRanks("permuted ranks: positive entry " + std::to_string(buf[i]) + " at index " +
                                   std::to_string(i + 1));
    }
  }
}

/// Streams one Block per negative entry, in rank order. A negative entry -k
/// at index r opens the block of key k; it runs until the next negative entry.
template <std::signed_integral Int, class Sink>
void for_each_block(std::span<const Int> buf, Sink&& sink) {
  const auto n = static_cast<std::int64_t>(buf.size());
  std::int64_t key = 0;
  std::int64_t first = 0;
  for (std::int64_t r = 1; r <= n; ++r) {
    const Int v = buf[static_cast<std::size_t>(r - 1)];
    if (v < 0) {
      if (key != 0) sink(Block{key, first, r - 1});
      key = -static_cast<std::int64_t>(v);
      first = r;
    }
  }
  if (key != 0) sink(Block{key, first, n});
}

template <std::signed_integral Int>
std::vector<Block> decode_blocks(std::span<const Int> buf) {
  check_permuted_ranks(buf);
  std::vector<Block> blocks;
  for_each_block(buf, [&](const Block& b) { blocks.push_back(b); });
  return blocks;
}

/// Overwrites each slot with |last negative seen|.
template <std::signed_integral Int, class Probe>
void restore_sorted_keys(std::span<Int> buf, Probe& probe) {
  Slots<PlainLane<Int>, Probe> s(PlainLane<Int>(buf), probe);
  // n, i, key, v
  AuxScope<Probe> aux(probe, 4);
  const Index n = s.size();
  Int key = 0;
  for (Index i = 1; i <= n; ++i) {
    const Int v = s[i];
    if (v < 0) key = static_cast<Int>(-v);
    s.set(i, key);
  }
}

template <std::signed_integral Int>
SortStats restore_sorted_keys_checked(std::span<Int> buf) {
  check_permuted_ranks(std::span<const Int>(buf));
  CountingProbe probe;
  restore_sorted_keys(buf, probe);
  return probe.stats();
}

/// Sorts keys in [1, n] in place with a constant number of scratch words.
/// Not stable. Keys outside [1, n] give an unspecified result.
template <std::signed_integral Int, class Probe>
void assoc_permuting_sort(std::span<Int> buf, Probe& probe) {
  if (buf.size() < 2) return;
  keys_to_rank_permutation(buf, probe, /*fused=*/true);
  assoc_permute_in_place(buf, probe);
  restore_sorted_keys(buf, probe);
}

template <std::signed_integral Int>
SortStats assoc_permuting_sort(std::span<Int> buf) {
  CountingProbe probe;
  assoc_permuting_sort(buf, probe);
  return probe.stats();
}

/// Range-checks in a pre-pass, then sorts with internal invariant checks on.
template <std::signed_integral Int>
SortStats assoc_permuting_sort_checked(std::span<Int> buf) {
  check_key_range(std::span<const Int>(buf));
  CheckedProbe probe;
  assoc_permuting_sort(buf, probe);
  return probe.stats();
}

/// Stops after the rank permutation, which alone determines the placed keys.
template <std::signed_integral Int>
SortStats rank_permutation(std::span<Int> buf) {
  return keys_to_rank_permutation_checked(buf, /*fused=*/false);
}

// KeyBuffer forms.

template <std::signed_integral Int>
SortStats assoc_permute_in_place(KeyBuffer<Int>& buf) {
  buf.expect(Phase::RankPerm);
  const SortStats stats = assoc_permute_checked(buf.span());
  buf.set_phase(Phase::PermutedRanks);
  return stats;
}

template <std::signed_integral Int>
SortStats restore_sorted_keys(KeyBuffer<Int>& buf) {
  buf.expect(Phase::PermutedRanks);
  const SortStats stats = restore_sorted_keys_checked(buf.span());
  buf.set_phase(Phase::SortedKeys);
  return stats;
}

template <std::signed_integral Int>
std::vector<Block> decode_blocks(const KeyBuffer<Int>& buf) {
  buf.expect(Phase::PermutedRanks);
  return decode_blocks(buf.span());
}

template <std::signed_integral Int>
SortStats assoc_permuting_sort(KeyBuffer<Int>& buf) {
  buf.expect(Phase::RawKeys);
  const SortStats stats = assoc_permuting_sort_checked(buf.span());
  buf.set_phase(Phase::SortedKeys);
  return stats;
}

template <std::signed_integral Int>
SortStats rank_permutation(KeyBuffer<Int>& buf) {
  return keys_to_rank_permutation(buf, false);
}

}  // namespace assoc
