#include "assoc/key_pipeline.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "alloc_counter.hpp"
#include "assoc/assoc_core.hpp"
#include "assoc/harness/oracle.hpp"
#include "test_util.hpp"

namespace assoc {
namespace {

using test::Key;
using Vec = std::vector<Key>;

template <class Step>
Vec run(Vec v, Step step) {
  CheckedProbe probe;
  step(std::span<Key>(v), probe);
  return v;
}

Vec placed(Vec v) { return run(std::move(v), [](auto s, auto& p) { place_distinct(s, p); }); }
Vec marked(Vec v) { return run(std::move(v), [](auto s, auto& p) { mark_representatives(s, p); }); }
Vec counted(Vec v) { return run(std::move(v), [](auto s, auto& p) { count_duplicates(s, p); }); }
Vec prefixed(Vec v) { return run(std::move(v), [](auto s, auto& p) { prefix_sum_negatives(s, p); }); }
Vec ranked(Vec v, ScanOrder order = ScanOrder::Descending) {
  return run(std::move(v), [order](auto s, auto& p) { assign_ranks(s, p, order); });
}
Vec rank_perm(Vec v, bool fused = false) {
  keys_to_rank_permutation_checked(std::span<Key>(v), fused);
  return v;
}

// Post-clauses of place_distinct, checked against the original keys.
void expect_placed(const Vec& keys, const Vec& kp) {
  ASSERT_EQ(kp.size(), keys.size());
  std::multiset<Key> a(keys.begin(), keys.end()), b(kp.begin(), kp.end());
  EXPECT_EQ(a, b);
  const std::set<Key> present(keys.begin(), keys.end());
  for (const Key v : present) EXPECT_EQ(kp[static_cast<std::size_t>(v) - 1], v);
  for (std::size_t p = 1; p <= kp.size(); ++p) {
    if (kp[p - 1] != static_cast<Key>(p)) EXPECT_EQ(present.count(static_cast<Key>(p)), 0u);
  }
}

TEST(PlaceDistinct, Examples) {
  EXPECT_EQ(placed({3, 1, 3, 2, 1}), (Vec{1, 2, 3, 3, 1}));
  EXPECT_EQ(placed({1, 2, 3}), (Vec{1, 2, 3}));
  EXPECT_EQ(placed({2, 2, 2}), (Vec{2, 2, 2}));
  expect_placed({3, 1, 3, 2, 1}, placed({3, 1, 3, 2, 1}));
}

TEST(PlaceDistinct, ExhaustivePostClauses) {
  for (std::size_t n = 0; n <= 6; ++n) {
    test::for_each_key_array(n, [](std::span<const Key> k) {
      const Vec keys(k.begin(), k.end());
      expect_placed(keys, placed(keys));
    });
  }
}

TEST(PlaceDistinct, AtMostNSwaps) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 3000;
    Vec keys = test::random_keys(n, static_cast<Key>(n), rng);
    CountingProbe probe;
    place_distinct(std::span<Key>(keys), probe);
    // one read of each slot, one read per probe of a home, two writes per swap
    EXPECT_LE(probe.stats().writes, 2 * n);
    EXPECT_LE(probe.stats().reads, 3 * n);
  }
}

TEST(MarkRepresentatives, Examples) {
  EXPECT_EQ(marked({1, 2, 3, 3, 1}), (Vec{-1, -1, -1, 3, 1}));
  EXPECT_EQ(marked({1}), Vec{-1});
  EXPECT_EQ(marked({1, 2}), (Vec{-1, -1}));
}

TEST(CountDuplicates, Examples) {
  EXPECT_EQ(counted({-1, -1, -1, 3, 1}), (Vec{-2, -1, -2, 3, 1}));
  EXPECT_EQ(counted({-1}), Vec{-1});
  EXPECT_EQ(counted({-1, 1, 1}), (Vec{-3, 1, 1}));
}

TEST(CountDuplicates, CheckedProbeCatchesCounterOnDuplicateSlot) {
  // slot 2 holds a duplicate, not a representative
  Vec bad{-1, 3, 2};
  CheckedProbe probe;
  EXPECT_THROW(count_duplicates(std::span<Key>(bad), probe), InvariantViolation);
}

TEST(PrefixSumNegatives, Examples) {
  EXPECT_EQ(prefixed({-2, -1, -2, 3, 1}), (Vec{-2, -3, -5, 3, 1}));
  EXPECT_EQ(prefixed({-1, -1, -1}), (Vec{-1, -2, -3}));
  EXPECT_EQ(prefixed({-3, 1, 1}), (Vec{-3, 1, 1}));
}

TEST(AssignRanks, Examples) {
  EXPECT_EQ(ranked({-2, -3, -5, 3, 1}), (Vec{-1, -3, -4, 5, 2}));
  EXPECT_EQ(ranked({-1, -2, -3}), (Vec{-1, -2, -3}));
  EXPECT_EQ(ranked({-3, 1, 1}), (Vec{-1, 2, 3}));
}

TEST(KeysToRankPermutation, Examples) {
  for (const bool fused : {false, true}) {
    EXPECT_EQ(rank_perm({3, 1, 3, 2, 1}, fused), (Vec{-1, -3, -4, 5, 2}));
    EXPECT_EQ(rank_perm({2, 3, 1}, fused), (Vec{-1, -2, -3}));
    EXPECT_EQ(rank_perm({1, 1, 1}, fused), (Vec{-1, 2, 3}));
    EXPECT_EQ(rank_perm({}, fused), Vec{});
    EXPECT_EQ(rank_perm({1}, fused), Vec{-1});
  }
}

TEST(KeysToRankPermutation, RejectsOutOfRangeKeys) {
  Vec keys{1, 4, 2};
  try {
    keys_to_rank_permutation_checked(std::span<Key>(keys));
    FAIL() << "expected KeyOutOfRange";
  } catch (const KeyOutOfRange& e) {
    EXPECT_EQ(e.index(), 2);
    EXPECT_EQ(e.value(), 4);
  }
  Vec zero{0};
  EXPECT_THROW(keys_to_rank_permutation_checked(std::span<Key>(zero)), KeyOutOfRange);
}

// The rank permutation must agree with comparison counting, the reference
// construction and the placed keys on every small input.
TEST(KeysToRankPermutation, ExhaustiveStructure) {
  for (std::size_t n = 1; n <= 6; ++n) {
    test::for_each_key_array(n, [n](std::span<const Key> k) {
      const Vec keys(k.begin(), k.end());
      const Vec kp = placed(keys);
      const Vec pi = rank_perm(keys);
      ASSERT_TRUE(validate_assoc_permutable(std::span<const Key>(pi)));

      const Vec ranks = harness::counting_ranks_oracle(keys);
      std::map<Key, Key> min_rank;
      for (std::size_t i = 0; i < n; ++i) {
        auto [it, inserted] = min_rank.try_emplace(keys[i], ranks[i]);
        if (!inserted) it->second = std::min(it->second, ranks[i]);
      }
      for (std::size_t p = 1; p <= n; ++p) {
        const auto it = min_rank.find(static_cast<Key>(p));
        if (it == min_rank.end()) {
          EXPECT_GT(pi[p - 1], 0);
        } else {
          EXPECT_EQ(pi[p - 1], -it->second);
        }
      }
      EXPECT_EQ(harness::implied_keys(pi), kp);

      // The reference walks only tagged records, so its duplicates may land in
      // other slots: compare negatives exactly and each side against its own kp.
      const auto ref = harness::build_pi_p_reference(keys, ranks);
      for (std::size_t p = 0; p < n; ++p) {
        if (pi[p] < 0 || ref.pi_p[p] < 0) EXPECT_EQ(pi[p], ref.pi_p[p]);
      }
      EXPECT_EQ(harness::implied_keys(ref.pi_p), ref.kp);
      EXPECT_TRUE(std::is_permutation(ref.kp.begin(), ref.kp.end(), kp.begin()));

      // Fed the pipeline's placement, the reference must imply the same keys slot for slot.
      const auto same = harness::build_pi_p_reference(kp, harness::counting_ranks_oracle(kp));
      EXPECT_EQ(same.kp, kp);
      EXPECT_EQ(harness::implied_keys(same.pi_p), harness::implied_keys(pi));
    });
  }
}

TEST(KeysToRankPermutation, FusedIsBitIdenticalExhaustive) {
  for (std::size_t n = 0; n <= 6; ++n) {
    test::for_each_key_array(n, [](std::span<const Key> k) {
      const Vec keys(k.begin(), k.end());
      ASSERT_EQ(rank_perm(keys, true), rank_perm(keys, false));
    });
  }
}

TEST(KeysToRankPermutation, FusedIsBitIdenticalRandom) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 2000;
    const Key hi = 1 + static_cast<Key>(rng() % n);  // vary the number of distinct values
    const Vec keys = test::random_keys(n, hi, rng);
    ASSERT_EQ(rank_perm(keys, true), rank_perm(keys, false));
  }
}

TEST(AssignRanks, AscendingScanGivesSameNegativesAndImpliedKeys) {
  for (std::size_t n = 1; n <= 6; ++n) {
    test::for_each_key_array(n, [](std::span<const Key> k) {
      Vec lambda(k.begin(), k.end());
      CheckedProbe probe;
      place_distinct(std::span<Key>(lambda), probe);
      mark_representatives(std::span<Key>(lambda), probe);
      count_duplicates(std::span<Key>(lambda), probe);
      prefix_sum_negatives(std::span<Key>(lambda), probe);
      const Vec down = ranked(lambda, ScanOrder::Descending);
      const Vec up = ranked(lambda, ScanOrder::Ascending);
      ASSERT_TRUE(validate_assoc_permutable(std::span<const Key>(up)));
      for (std::size_t p = 0; p < down.size(); ++p) {
        if (down[p] < 0 || up[p] < 0) EXPECT_EQ(down[p], up[p]);
      }
      EXPECT_EQ(harness::implied_keys(up), harness::implied_keys(down));
    });
  }
}

TEST(KeysToRankPermutation, BoundedScratchAndNoAllocation) {
  std::mt19937_64 rng(4);
  for (const bool fused : {false, true}) {
    Vec keys = test::random_keys(100000, 100000, rng);
    CountingProbe probe;
    const test::AllocationWindow window;
    keys_to_rank_permutation(std::span<Key>(keys), probe, fused);
    EXPECT_EQ(window.count(), 0u);
    EXPECT_LE(probe.stats().peak_aux_words, 8u);
  }
}

TEST(KeyBufferPhases, StepsAdvanceThePhaseTag) {
  KeyBuffer<Key> buf(Vec{3, 1, 3, 2, 1});
  place_distinct(buf);
  EXPECT_EQ(buf.phase(), Phase::PlacedKeys);
  EXPECT_THROW(count_duplicates(buf), std::logic_error);
  mark_representatives(buf);
  count_duplicates(buf);
  prefix_sum_negatives(buf);
  EXPECT_EQ(buf.phase(), Phase::Lambda);
  assign_ranks(buf);
  EXPECT_EQ(buf.phase(), Phase::RankPerm);
  EXPECT_EQ(buf.values(), (Vec{-1, -3, -4, 5, 2}));
}

TEST(PackedLane, CarriesPayloadThroughThePipeline) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 500;
    const Vec keys = test::random_keys(n, static_cast<Key>(n), rng);
    constexpr int kPayloadBits = 20;
    std::vector<std::int64_t> words(n);
    const PackedLane lane(words, kPayloadBits);
    for (std::size_t i = 0; i < n; ++i) words[i] = lane.pack(keys[i], static_cast<std::int64_t>(i));

    CheckedProbe probe;
    keys_to_rank_permutation_lane(lane, probe, true);
    const Vec plain = rank_perm(keys, true);
    const Vec kp = placed(keys);
    for (std::size_t p = 0; p < n; ++p) {
      EXPECT_EQ(lane.value_of(words[p]), plain[p]);
      // the payload names an input slot whose key is the placed key here
      EXPECT_EQ(keys[lane.payload(words[p])], kp[p]);
    }
  }
}

}  // namespace
}  // namespace assoc
