#include "assoc/radix.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "alloc_counter.hpp"
#include "assoc/sorter.hpp"
#include "test_util.hpp"

namespace assoc {
namespace {

using test::Key;
using Vec = std::vector<Key>;

Vec radix_sorted(Vec v, int key_bits) {
  msd_radix_assoc_sort(std::span<Key>(v), key_bits);
  return v;
}

Vec std_sorted(Vec v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(DigitOf, Examples) {
  const RadixConfig cfg{4, 2, 64};
  EXPECT_EQ(digit_of(16, 0, cfg), 4);
  EXPECT_EQ(digit_of(9, 1, cfg), 1);
  for (int level = 0; level < 2; ++level) EXPECT_EQ(digit_of(1, level, cfg), 1);
  EXPECT_EQ(digit_of(1, 0, RadixConfig{20, 7, 64}), 1);
}

TEST(DigitOf, LexicographicOrderMatchesNumericOrder) {
  constexpr int kKeyBits = 12;
  for (int digit_bits = 1; digit_bits <= kKeyBits; ++digit_bits) {
    const RadixConfig cfg{kKeyBits, digit_bits, 64};
    const auto tuple = [&](Key k) {
      std::vector<std::int64_t> t;
      for (int l = 0; l < cfg.digit_count(); ++l) t.push_back(digit_of(k, l, cfg));
      return t;
    };
    auto prev = tuple(1);
    for (Key k = 2; k <= (Key{1} << kKeyBits); ++k) {
      auto cur = tuple(k);
      ASSERT_LT(prev, cur) << "digit_bits=" << digit_bits << " key=" << k;
      for (const auto d : cur) ASSERT_TRUE(d >= 1 && d <= (std::int64_t{1} << digit_bits));
      prev = std::move(cur);
    }
  }
}

TEST(RadixConfig, DigitWidthFromInputLength) {
  EXPECT_EQ(RadixConfig::for_input(0, 8).digit_bits, 1);
  EXPECT_EQ(RadixConfig::for_input(2, 8).digit_bits, 1);
  EXPECT_EQ(RadixConfig::for_input(4, 8).digit_bits, 2);
  EXPECT_EQ(RadixConfig::for_input(5, 8).digit_bits, 3);
  EXPECT_EQ(RadixConfig::for_input(1 << 20, 20).digit_bits, 20);
  EXPECT_EQ((RadixConfig{20, 7, 64}.digit_count()), 3);
}

TEST(MsdRadixAssocSort, Examples) {
  EXPECT_EQ(radix_sorted({9, 1, 16, 9}, 4), (Vec{1, 9, 9, 16}));
  EXPECT_EQ(radix_sorted({3, 1, 3, 2, 1}, 3), (Vec{1, 1, 2, 3, 3}));
  EXPECT_EQ(radix_sorted({12345}, 20), Vec{12345});
  EXPECT_EQ(radix_sorted({}, 5), Vec{});
}

TEST(MsdRadixAssocSort, ExhaustiveTinyInputs) {
  for (int key_bits = 1; key_bits <= 6; ++key_bits) {
    const Key hi = Key{1} << key_bits;
    for (std::size_t n = 1; n <= 3; ++n) {
      Vec keys(n, 1);
      for (;;) {
        ASSERT_EQ(radix_sorted(keys, key_bits), std_sorted(keys));
        std::size_t i = n;
        while (i > 0 && keys[i - 1] == hi) keys[--i] = 1;
        if (i == 0) break;
        ++keys[i - 1];
      }
    }
  }
}

TEST(MsdRadixAssocSort, RandomAgainstStdSort) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 4096;
    const int key_bits = 1 + static_cast<int>(rng() % 20);
    const Vec keys = test::random_keys(n, Key{1} << key_bits, rng);
    ASSERT_EQ(radix_sorted(keys, key_bits), std_sorted(keys)) << "n=" << n << " key_bits=" << key_bits;
  }
}

TEST(MsdRadixAssocSort, SkewedAndClusteredKeys) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 16 + rng() % 2000;
    const int key_bits = 8 + static_cast<int>(rng() % 30);
    // few clusters sharing high bits, so buckets recurse several levels
    Vec keys(n);
    const Key base = 1 + static_cast<Key>(rng() % ((Key{1} << key_bits) - 64));
    for (Key& k : keys) k = base + static_cast<Key>(rng() % 4) * 16 + static_cast<Key>(rng() % 3);
    ASSERT_EQ(radix_sorted(keys, key_bits), std_sorted(keys));
  }
}

TEST(MsdRadixAssocSort, MatchesAssocSortWhenKeysFitOneDigit) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 16 + rng() % 3000;
    const int key_bits = static_cast<int>(std::bit_width(n)) - 1;  // 2^key_bits <= n
    Vec keys = test::random_keys(n, Key{1} << key_bits, rng);
    Vec by_assoc = keys;
    assoc_permuting_sort_checked(std::span<Key>(by_assoc));
    EXPECT_EQ(radix_sorted(keys, key_bits), by_assoc);
  }
}

TEST(MsdRadixAssocSort, Errors) {
  Vec keys{1, 17};
  EXPECT_THROW(msd_radix_assoc_sort(std::span<Key>(keys), 4), KeyOutOfRange);
  Vec zero{0, 1};
  EXPECT_THROW(msd_radix_assoc_sort(std::span<Key>(zero), 4), KeyOutOfRange);
  Vec ok{1, 2};
  EXPECT_THROW(msd_radix_assoc_sort(std::span<Key>(ok), RadixConfig{0, 1, 64}), std::invalid_argument);
  EXPECT_THROW(msd_radix_assoc_sort(std::span<Key>(ok), RadixConfig{62, 1, 64}), std::invalid_argument);
}

TEST(MsdRadixAssocSort, WideKeysAndNoAllocation) {
  std::mt19937_64 rng(34);
  const std::size_t n = 50000;
  Vec keys = test::random_keys(n, Key{1} << 40, rng);
  const Vec expected = std_sorted(keys);
  const RadixConfig cfg = RadixConfig::for_input(n, 40);
  CountingProbe probe;
  const test::AllocationWindow window;
  msd_radix_assoc_sort(std::span<Key>(keys), cfg, probe);
  EXPECT_EQ(window.count(), 0u);
  EXPECT_EQ(keys, expected);
  // per level: a constant frame plus the in-place pipeline
  EXPECT_LE(probe.stats().peak_aux_words, 8u * static_cast<std::uint64_t>(cfg.digit_count() + 1));
}

}  // namespace
}  // namespace assoc
