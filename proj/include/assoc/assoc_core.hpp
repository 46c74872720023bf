#pragma once

// Permutation primitives: the associative in-place permute for sign-tagged
// rank permutations, plus in-place inversion and cycle-leader application.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "assoc/errors.hpp"
#include "assoc/lane.hpp"
#include "assoc/probe.hpp"

namespace assoc {

/// Result of validate_assoc_permutable.
struct Validity {
  enum class Kind { Valid, NotPermutation, NegativesOutOfOrder };

  Kind kind = Kind::Valid;
  std::size_t neg_count = 0;  // meaningful only when valid

  explicit operator bool() const noexcept { return kind == Kind::Valid; }
  friend bool operator==(const Validity&, const Validity&) = default;

  static Validity valid(std::size_t neg_count) noexcept { return {Kind::Valid, neg_count}; }
  static Validity not_permutation() noexcept { return {Kind::NotPermutation, 0}; }
  static Validity out_of_order() noexcept { return {Kind::NegativesOutOfOrder, 0}; }
};

inline std::string to_string(Validity::Kind kind) {
  switch (kind) {
    case Validity::Kind::Valid: return "Valid";
    case Validity::Kind::NotPermutation: return "NotPermutation";
    case Validity::Kind::NegativesOutOfOrder: return "NegativesOutOfOrder";
  }
  return "?";
}

namespace detail {

template <std::signed_integral Int>
constexpr Int magnitude(Int v) noexcept {
  return v < 0 ? static_cast<Int>(-v) : v;
}

}  // namespace detail

/// Streaming O(1)-space check of the ordering clause alone: scanning left to
/// right, the magnitudes of negative entries strictly increase.
template <std::signed_integral Int>
bool negatives_ordered(std::span<const Int> buf) noexcept {
  Int last = 0;
  for (const Int v : buf) {
    if (v < 0) {
      if (-v <= last) return false;
      last = static_cast<Int>(-v);
    }
  }
  return true;
}

/// Full check: magnitudes form a permutation of 1..n, and negatives are
/// ordered. Uses n bits of scratch; this is a harness-side check.
template <std::signed_integral Int>
Validity validate_assoc_permutable(std::span<const Int> buf) {
  const std::size_t n = buf.size();
  std::vector<bool> seen(n + 1, false);
  std::size_t negatives = 0;
  for (const Int v : buf) {
    if (v == 0) return Validity::not_permutation();
    const auto m = static_cast<std::size_t>(detail::magnitude(v));
    if (m > n || seen[m]) return Validity::not_permutation();
    seen[m] = true;
    negatives += v < 0;
  }
  if (!negatives_ordered(buf)) return Validity::out_of_order();
  return Validity::valid(negatives);
}

template <std::signed_integral Int>
Validity validate_assoc_permutable(std::span<Int> buf) {
  return validate_assoc_permutable(std::span<const Int>(buf));
}

/// A buffer known to pass validate_assoc_permutable.
template <std::signed_integral Int>
class AssocPerm {
 public:
  /// Throws NotAssocPermutable naming the failed clause.
  static AssocPerm validate(std::span<Int> buf) {
    const Validity v = validate_assoc_permutable(buf);
    if (!v) throw NotAssocPermutable("not associatively permutable: " + to_string(v.kind));
    return AssocPerm(buf, v.neg_count);
  }

  static std::optional<AssocPerm> try_validate(std::span<Int> buf) {
    const Validity v = validate_assoc_permutable(buf);
    if (!v) return std::nullopt;
    return AssocPerm(buf, v.neg_count);
  }

  std::span<Int> buffer() const noexcept { return buf_; }
  std::size_t neg_count() const noexcept { return neg_count_; }

 private:
  AssocPerm(std::span<Int> buf, std::size_t neg_count) noexcept : buf_(buf), neg_count_(neg_count) {}

  std::span<Int> buf_;
  std::size_t neg_count_;
};

/// Associative in-place permute over any lane.
///
/// Every positive entry v moves to slot v unchanged. Every negative entry -v at
/// slot i is inverted: slot v receives -i. Cycles of i -> |value| are walked
/// once each, led by a positive entry that is not already home. Valid inputs
/// have no all-negative cycle of length >= 2, so every cycle gets a leader.
template <Lane L, class Probe>
void assoc_permute_lane(L lane, Probe& probe) {
  using V = typename L::value_type;
  Slots<L, Probe> s(lane, probe);
  // n, lead, pos, carried, value, dest, displaced
  AuxScope<Probe> aux(probe, 7);
  const Index n = s.size();
  for (Index lead = 1; lead <= n; ++lead) {
    auto carried = s.load(lead);
    V value = s.value_of(carried);
    if (value <= 0 || value == lead) continue;
    probe.cycle();
    Index pos = lead;
    for (;;) {
      const Index dest = value > 0 ? static_cast<Index>(value) : -static_cast<Index>(value);
      const V out = value > 0 ? value : static_cast<V>(-pos);
      if (dest == lead) {
        s.store(dest, carried, out);
        break;
      }
      const auto displaced = s.load(dest);
      s.store(dest, carried, out);
      carried = displaced;
      value = s.value_of(carried);
      pos = dest;
    }
  }
}

/// Fast path: preconditions assumed. Result is unspecified (but memory-safe
/// only for arrays whose magnitudes lie in 1..n) when the input is invalid.
template <std::signed_integral Int, class Probe>
void assoc_permute_in_place(std::span<Int> buf, Probe& probe) {
  assoc_permute_lane(PlainLane<Int>(buf), probe);
}

template <std::signed_integral Int>
SortStats assoc_permute_in_place(std::span<Int> buf) {
  CountingProbe probe;
  assoc_permute_in_place(buf, probe);
  return probe.stats();
}

template <std::signed_integral Int>
SortStats assoc_permute_in_place(const AssocPerm<Int>& perm) {
  return assoc_permute_in_place(perm.buffer());
}

/// Validates first; throws NotAssocPermutable and leaves the buffer untouched on failure.
template <std::signed_integral Int>
SortStats assoc_permute_checked(std::span<Int> buf) {
  return assoc_permute_in_place(AssocPerm<Int>::validate(buf));
}

/// True iff buf holds each of 1..n exactly once.
template <std::signed_integral Int>
bool is_permutation_of_1_to_n(std::span<const Int> buf) {
  const std::size_t n = buf.size();
  std::vector<bool> seen(n + 1, false);
  for (const Int v : buf) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

/// Replaces a permutation of 1..n by its inverse. The sign bit of each slot
/// marks it as already inverted; signs are cleared in a final pass.
template <std::signed_integral Int, class Probe>
void invert_permutation_in_place(std::span<Int> buf, Probe& probe) {
  Slots<PlainLane<Int>, Probe> s(PlainLane<Int>(buf), probe);
  // n, start, prev, cur, next
  AuxScope<Probe> aux(probe, 5);
  const Index n = s.size();
  for (Index start = 1; start <= n; ++start) {
    Int cur = s[start];
    if (cur < 0) continue;
    probe.cycle();
    Index prev = start;
    while (cur != start) {
      const Int next = s[cur];
      s.set(cur, static_cast<Int>(-prev));
      prev = cur;
      cur = next;
    }
    s.set(start, static_cast<Int>(-prev));
  }
  for (Index p = 1; p <= n; ++p) s.set(p, static_cast<Int>(-s[p]));
}

template <std::signed_integral Int>
SortStats invert_permutation_in_place(std::span<Int> buf) {
  CountingProbe probe;
  invert_permutation_in_place(buf, probe);
  return probe.stats();
}

template <std::signed_integral Int>
SortStats invert_permutation_checked(std::span<Int> buf) {
  if (!is_permutation_of_1_to_n(std::span<const Int>(buf))) throw NotAPermutation("invert: not a permutation of 1..n");
  return invert_permutation_in_place(buf);
}

/// Cycle-leader application: data[perm[i]] <- data[i]. Entries of perm are
/// negated while their cycle is walked and restored before returning, so perm
/// is bit-identical afterwards.
template <class T, std::signed_integral Int, class Probe>
void apply_permutation_in_place(std::span<T> data, std::span<Int> perm, Probe& probe) {
  Slots<PlainLane<Int>, Probe> p(PlainLane<Int>(perm), probe);
  // n, start, cur, dest, carried
  AuxScope<Probe> aux(probe, 5);
  const Index n = p.size();
  for (Index start = 1; start <= n; ++start) {
    if (p[start] < 0) continue;
    probe.cycle();
    probe.read();
    T carried = data[static_cast<std::size_t>(start - 1)];
    Index cur = start;
    for (;;) {
      const Int dest = p[cur];
      p.set(cur, static_cast<Int>(-dest));
      T& slot = data[static_cast<std::size_t>(dest - 1)];
      probe.read();
      probe.write();
      if (dest == start) {
        slot = std::move(carried);
        break;
      }
      std::swap(slot, carried);
      cur = dest;
    }
  }
  for (Index q = 1; q <= n; ++q) p.set(q, static_cast<Int>(-p[q]));
}

template <class T, std::signed_integral Int>
SortStats apply_permutation_in_place(std::span<T> data, std::span<Int> perm) {
  CountingProbe probe;
  apply_permutation_in_place(data, perm, probe);
  return probe.stats();
}

template <class T, std::signed_integral Int>
SortStats apply_permutation_checked(std::span<T> data, std::span<Int> perm) {
  if (data.size() != perm.size()) throw std::invalid_argument("apply: data and perm lengths differ");
  if (!is_permutation_of_1_to_n(std::span<const Int>(perm))) throw NotAPermutation("apply: not a permutation of 1..n");
  return apply_permutation_in_place(data, perm);
}

}  // namespace assoc
