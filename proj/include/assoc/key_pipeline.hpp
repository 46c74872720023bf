#pragma once

// Turns keys in [1, n] into the sign-tagged rank permutation in place.
//
//   place_distinct       one copy of each present value v is moved to slot v
//   mark_representatives those copies become -1
//   count_duplicates     each remaining key v decrements slot v
//   prefix_sum_negatives representatives hold -(last rank of their value)
//   assign_ranks         duplicates take ranks, representatives end at -(first rank)
//
// Duplicates are never targeted by a counter update: every key value present
// has its representative in its home slot, and only representatives are negative.

#include <concepts>
#include <cstdint>
#include <span>
#include <string>

#include "assoc/errors.hpp"
#include "assoc/key_buffer.hpp"
#include "assoc/lane.hpp"
#include "assoc/probe.hpp"

namespace assoc {

enum class ScanOrder { Descending, Ascending };

/// Throws KeyOutOfRange for the first entry outside [1, n].
template <std::signed_integral Int>
void check_key_range(std::span<const Int> keys) {
  const auto n = static_cast<std::int64_t>(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const auto v = static_cast<std::int64_t>(keys[i]);
    if (v < 1 || v > n) throw KeyOutOfRange(static_cast<Index>(i + 1), v, 1, n);
  }
}

namespace detail {

template <class Probe>
void require(bool ok, const char* what) {
  if constexpr (Probe::kChecked) {
    if (!ok) throw InvariantViolation(what);
  }
}

}  // namespace detail

/// For i = 1..n: while slot i holds v != i and slot v does not yet hold v,
/// swap slots i and v. Each swap homes one value for good, so there are at
/// most n swaps. Slot i is only read by its own chain, so it is written once
/// when the chain ends.
template <Lane L, class Probe>
void place_distinct_lane(L lane, Probe& probe) {
  Slots<L, Probe> s(lane, probe);
  // n, i, v, w, moved
  AuxScope<Probe> aux(probe, 5);
  const Index n = s.size();
  for (Index i = 1; i <= n; ++i) {
    auto here = s.load(i);
    auto v = s.value_of(here);
    bool moved = false;
    while (v != i) {
      const auto there = s.load(v);
      const auto w = s.value_of(there);
      if (w == v) break;
      s.store(v, here, v);
      here = there;
      v = w;
      moved = true;
    }
    if (moved) s.store(i, here, v);
  }
}

template <Lane L, class Probe>
void mark_representatives_lane(L lane, Probe& probe) {
  Slots<L, Probe> s(lane, probe);
  AuxScope<Probe> aux(probe, 2);
  const Index n = s.size();
  for (Index i = 1; i <= n; ++i) {
    if (s[i] == i) s.set(i, -1);
  }
}

template <Lane L, class Probe>
void count_duplicates_lane(L lane, Probe& probe) {
  Slots<L, Probe> s(lane, probe);
  AuxScope<Probe> aux(probe, 4);
  const Index n = s.size();
  for (Index i = 1; i <= n; ++i) {
    const auto v = s[i];
    if (v > 0) {
      const auto c = s[v];
      detail::require<Probe>(c < 0, "count_duplicates: counter slot is not a representative");
      s.set(v, c - 1);
    }
  }
}

/// Running sum over negative entries only, starting from zero.
template <Lane L, class Probe>
void prefix_sum_negatives_lane(L lane, Probe& probe) {
  using V = typename L::value_type;
  Slots<L, Probe> s(lane, probe);
  AuxScope<Probe> aux(probe, 4);
  const Index n = s.size();
  V sum = 0;
  for (Index i = 1; i <= n; ++i) {
    const V v = s[i];
    if (v < 0) {
      sum += v;
      s.set(i, sum);
    }
  }
}

template <Lane L, class Probe>
void assign_ranks_lane(L lane, Probe& probe, ScanOrder order = ScanOrder::Descending) {
  Slots<L, Probe> s(lane, probe);
  // n, i, v, c
  AuxScope<Probe> aux(probe, 4);
  const Index n = s.size();
  const auto visit = [&](Index i) {
    const auto v = s[i];
    if (v > 0) {
      const auto c = s[v] + 1;
      detail::require<Probe>(c < 0, "assign_ranks: counter slot is not a representative");
      s.set(v, c);
      s.set(i, 1 - c);
    }
  };
  if (order == ScanOrder::Descending) {
    for (Index i = n; i >= 1; --i) visit(i);
  } else {
    for (Index i = 1; i <= n; ++i) visit(i);
  }
}

/// place_distinct, mark_representatives and count_duplicates in one pass.
///
/// Swap decisions are the unfused ones, with "slot v holds v" read as "slot v
/// is negative": a value is marked the moment it lands home. A slot below i
/// that still holds a positive key was counted when it was scanned, so a key
/// swapped out of such a slot is not counted again.
template <Lane L, class Probe>
void place_mark_count_fused_lane(L lane, Probe& probe) {
  Slots<L, Probe> s(lane, probe);
  // n, i, v, w, moved
  AuxScope<Probe> aux(probe, 5);
  const Index n = s.size();
  for (Index i = 1; i <= n; ++i) {
    auto here = s.load(i);
    auto v = s.value_of(here);
    if (v < 0) continue;
    bool moved = false;
    for (;;) {
      if (v == i) {
        s.store(i, here, -1);
        moved = false;
        break;
      }
      const auto there = s.load(v);
      const auto w = s.value_of(there);
      if (w < 0) {
        s.store(v, there, w - 1);
        break;
      }
      if (w == v) {
        s.store(v, there, -2);
        break;
      }
      s.store(v, here, -1);
      moved = true;
      const bool counted = v < i;
      here = there;
      v = w;
      if (counted) break;
    }
    if (moved) s.store(i, here, v);
  }
}

/// Full transformation from keys to the rank permutation. With `fused` the
/// first three steps share a single pass; the result is bit-identical.
template <Lane L, class Probe>
void keys_to_rank_permutation_lane(L lane, Probe& probe, bool fused = false) {
  if (fused) {
    place_mark_count_fused_lane(lane, probe);
  } else {
    place_distinct_lane(lane, probe);
    mark_representatives_lane(lane, probe);
    count_duplicates_lane(lane, probe);
  }
  prefix_sum_negatives_lane(lane, probe);
  assign_ranks_lane(lane, probe);
}

// Span entry points. These assume keys are in range; the *_checked forms
// validate first.

template <std::signed_integral Int, class Probe>
void place_distinct(std::span<Int> buf, Probe& probe) {
  place_distinct_lane(PlainLane<Int>(buf), probe);
}
template <std::signed_integral Int, class Probe>
void mark_representatives(std::span<Int> buf, Probe& probe) {
  mark_representatives_lane(PlainLane<Int>(buf), probe);
}
template <std::signed_integral Int, class Probe>
void count_duplicates(std::span<Int> buf, Probe& probe) {
  count_duplicates_lane(PlainLane<Int>(buf), probe);
}
template <std::signed_integral Int, class Probe>
void prefix_sum_negatives(std::span<Int> buf, Probe& probe) {
  prefix_sum_negatives_lane(PlainLane<Int>(buf), probe);
}
template <std::signed_integral Int, class Probe>
void assign_ranks(std::span<Int> buf, Probe& probe, ScanOrder order = ScanOrder::Descending) {
  assign_ranks_lane(PlainLane<Int>(buf), probe, order);
}
template <std::signed_integral Int, class Probe>
void keys_to_rank_permutation(std::span<Int> buf, Probe& probe, bool fused = false) {
  keys_to_rank_permutation_lane(PlainLane<Int>(buf), probe, fused);
}

template <std::signed_integral Int>
SortStats keys_to_rank_permutation(std::span<Int> buf, bool fused = false) {
  CountingProbe probe;
  keys_to_rank_permutation(buf, probe, fused);
  return probe.stats();
}

template <std::signed_integral Int>
SortStats keys_to_rank_permutation_checked(std::span<Int> buf, bool fused = false) {
  check_key_range(std::span<const Int>(buf));
  CheckedProbe probe;
  keys_to_rank_permutation(buf, probe, fused);
  return probe.stats();
}

// Phase-tracked KeyBuffer forms. Each asserts the incoming phase and advances it.

template <std::signed_integral Int>
void place_distinct(KeyBuffer<Int>& buf) {
  buf.expect(Phase::RawKeys);
  check_key_range(std::span<const Int>(buf.span()));
  CheckedProbe probe;
  place_distinct(buf.span(), probe);
  buf.set_phase(Phase::PlacedKeys);
}

template <std::signed_integral Int>
void mark_representatives(KeyBuffer<Int>& buf) {
  buf.expect(Phase::PlacedKeys);
  CheckedProbe probe;
  mark_representatives(buf.span(), probe);
  buf.set_phase(Phase::Marked);
}

template <std::signed_integral Int>
void count_duplicates(KeyBuffer<Int>& buf) {
  buf.expect(Phase::Marked);
  CheckedProbe probe;
  count_duplicates(buf.span(), probe);
  buf.set_phase(Phase::Counted);
}

template <std::signed_integral Int>
void prefix_sum_negatives(KeyBuffer<Int>& buf) {
  buf.expect(Phase::Counted);
  CheckedProbe probe;
  prefix_sum_negatives(buf.span(), probe);
  buf.set_phase(Phase::Lambda);
}

template <std::signed_integral Int>
void assign_ranks(KeyBuffer<Int>& buf) {
  buf.expect(Phase::Lambda);
  CheckedProbe probe;
  assign_ranks(buf.span(), probe);
  buf.set_phase(Phase::RankPerm);
}

template <std::signed_integral Int>
SortStats keys_to_rank_permutation(KeyBuffer<Int>& buf, bool fused = false) {
  buf.expect(Phase::RawKeys);
  const SortStats stats = keys_to_rank_permutation_checked(buf.span(), fused);
  buf.set_phase(Phase::RankPerm);
  return stats;
}

}  // namespace assoc
