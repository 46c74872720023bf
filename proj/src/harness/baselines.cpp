#include "assoc/harness/baselines.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace assoc::harness {

void comparison_sort_baseline(std::span<Key> keys) { std::sort(keys.begin(), keys.end()); }

std::uint64_t lsd_radix_sort_baseline(std::span<Key> keys) {
  constexpr int kDigitBits = 8;
  constexpr std::size_t kBuckets = std::size_t{1} << kDigitBits;
  if (keys.size() < 2) return 0;

  const auto max_key = static_cast<std::uint64_t>(*std::max_element(keys.begin(), keys.end()));
  const int passes = std::max(1, (static_cast<int>(std::bit_width(max_key)) + kDigitBits - 1) / kDigitBits);

  std::vector<Key> scratch(keys.size());
  std::span<Key> from = keys;
  std::span<Key> to = scratch;
  std::array<std::size_t, kBuckets> count{};
  for (int pass = 0; pass < passes; ++pass) {
    const int shift = pass * kDigitBits;
    count.fill(0);
    for (const Key k : from) ++count[(static_cast<std::uint64_t>(k) >> shift) & (kBuckets - 1)];
    std::size_t sum = 0;
    for (std::size_t& c : count) {
      const std::size_t here = c;
      c = sum;
      sum += here;
    }
    for (const Key k : from) to[count[(static_cast<std::uint64_t>(k) >> shift) & (kBuckets - 1)]++] = k;
    std::swap(from, to);
  }
  if (from.data() != keys.data()) std::copy(from.begin(), from.end(), keys.begin());
  return keys.size() + kBuckets;
}

}  // namespace assoc::harness
