#pragma once

// Unstable in-place MSD radix sort for keys in [1, 2^key_bits], one digit
// level at a time, each level sorted by the associative permuting machinery.
//
// For a bucket of m keys, each word is split into a working field (the digit,
// later its rank) in the high bits and key - 1 in the low bits. The key
// pipeline and the associative permute run on the field while whole words
// move, so keys travel with their ranks. Digits are at most
// min(digit_bits, floor(log2 m)) bits wide, which keeps every digit's home
// slot inside the bucket.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include "assoc/assoc_core.hpp"
#include "assoc/errors.hpp"
#include "assoc/key_pipeline.hpp"
#include "assoc/lane.hpp"
#include "assoc/probe.hpp"

namespace assoc {

struct RadixConfig {
  int key_bits = 1;    // keys in [1, 2^key_bits]
  int digit_bits = 1;  // ceil(log2 n), at least 1
  int word_bits = 64;

  /// Digit width from the original input length.
  static RadixConfig for_input(std::size_t n, int key_bits) {
    const int d = n <= 2 ? 1 : static_cast<int>(std::bit_width(n - 1));
    return RadixConfig{key_bits, d, 64};
  }

  constexpr int digit_count() const noexcept { return (key_bits + digit_bits - 1) / digit_bits; }

  void validate() const {
    if (word_bits != 64) throw std::invalid_argument("RadixConfig: only 64-bit words are supported");
    if (key_bits < 1 || key_bits > word_bits - 1) {
      throw std::invalid_argument("RadixConfig: key_bits must be in [1, " + std::to_string(word_bits - 1) + "]");
    }
    if (digit_bits < 1 || digit_bits > word_bits - 1) throw std::invalid_argument("RadixConfig: digit_bits out of range");
  }
};

/// Digit `level` of `key` (level 0 most significant), mapped to
/// [1, 2^digit_bits]. Digits are aligned to the low end, so when digit_bits
/// does not divide key_bits the top digit is the narrow one.
constexpr std::int64_t digit_of(std::int64_t key, int level, const RadixConfig& cfg) noexcept {
  const int shift = (cfg.digit_count() - 1 - level) * cfg.digit_bits;
  const std::uint64_t mask = (std::uint64_t{1} << cfg.digit_bits) - 1;
  return 1 + static_cast<std::int64_t>((static_cast<std::uint64_t>(key - 1) >> shift) & mask);
}

namespace detail {

inline constexpr std::size_t kRadixSmallBucket = 16;

template <class Probe>
void insertion_sort(std::span<std::int64_t> keys, Probe& probe) {
  AuxScope<Probe> aux(probe, 4);
  for (std::size_t i = 1; i < keys.size(); ++i) {
    probe.read();
    const std::int64_t x = keys[i];
    std::size_t j = i;
    while (j > 0) {
      probe.read();
      if (keys[j - 1] <= x) break;
      keys[j] = keys[j - 1];
      probe.write();
      --j;
    }
    keys[j] = x;
    probe.write();
  }
}

/// Sorts a bucket whose keys agree on all bits of key - 1 at or above `low_bits`.
template <class Probe>
void radix_bucket(std::span<std::int64_t> keys, int low_bits, const RadixConfig& cfg, Probe& probe) {
  const std::size_t m = keys.size();
  if (m < 2 || low_bits == 0) return;
  if (m < kRadixSmallBucket) {
    insertion_sort(keys, probe);
    return;
  }
  // width, shift, mask, run start, cursor, run digit
  AuxScope<Probe> aux(probe, 6);
  const int width = std::min({cfg.digit_bits, static_cast<int>(std::bit_width(m)) - 1, low_bits});
  const int shift = low_bits - width;
  const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
  const auto digit = [&](std::int64_t key) {
    return 1 + static_cast<std::int64_t>((static_cast<std::uint64_t>(key - 1) >> shift) & mask);
  };

  const PackedLane lane(keys, cfg.key_bits);
  for (std::int64_t& w : keys) {
    w = lane.pack(digit(w), w - 1);
  }
  probe.read(m);
  probe.write(m);

  keys_to_rank_permutation_lane(lane, probe, /*fused=*/true);
  assoc_permute_lane(lane, probe);

  for (std::int64_t& w : keys) {
    w = static_cast<std::int64_t>(lane.payload(w)) + 1;
  }
  probe.read(m);
  probe.write(m);

  if (shift == 0) return;
  std::size_t start = 0;
  std::int64_t run_digit = digit(keys[0]);
  probe.read(m);
  for (std::size_t i = 1; i <= m; ++i) {
    const bool boundary = i == m || digit(keys[i]) != run_digit;
    if (!boundary) continue;
    radix_bucket(keys.subspan(start, i - start), shift, cfg, probe);
    if (i < m) {
      start = i;
      run_digit = digit(keys[i]);
    }
  }
}

}  // namespace detail

/// Throws std::invalid_argument when a bucket's rank field cannot share a word
/// with the key payload.
inline void check_radix_packing(std::size_t n, const RadixConfig& cfg) {
  if (cfg.key_bits + static_cast<int>(std::bit_width(n)) > cfg.word_bits - 1) {
    throw std::invalid_argument("radix: key_bits " + std::to_string(cfg.key_bits) + " leaves no room for ranks of " +
                                std::to_string(n) + " keys in a " + std::to_string(cfg.word_bits) + "-bit word");
  }
}

/// Fast path; keys assumed in range.
template <class Probe>
void msd_radix_assoc_sort(std::span<std::int64_t> keys, const RadixConfig& cfg, Probe& probe) {
  detail::radix_bucket(keys, cfg.key_bits, cfg, probe);
}

/// Validates the configuration and key range, then sorts.
inline SortStats msd_radix_assoc_sort(std::span<std::int64_t> keys, const RadixConfig& cfg) {
  cfg.validate();
  check_radix_packing(keys.size(), cfg);
  const std::uint64_t limit = std::uint64_t{1} << cfg.key_bits;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const std::int64_t v = keys[i];
    if (v < 1 || static_cast<std::uint64_t>(v - 1) >= limit) {
      throw KeyOutOfRange(static_cast<Index>(i + 1), v, 1, static_cast<std::int64_t>(limit));
    }
  }
  CountingProbe probe;
  msd_radix_assoc_sort(keys, cfg, probe);
  return probe.stats();
}

inline SortStats msd_radix_assoc_sort(std::span<std::int64_t> keys, int key_bits) {
  return msd_radix_assoc_sort(keys, RadixConfig::for_input(keys.size(), key_bits));
}

}  // namespace assoc
