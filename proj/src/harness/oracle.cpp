#include "assoc/harness/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "assoc/errors.hpp"
#include "assoc/key_pipeline.hpp"

namespace assoc::harness {

std::vector<Key> counting_ranks_oracle(std::span<const Key> keys) {
  check_key_range(keys);
  const std::size_t n = keys.size();
  std::vector<Key> ranks(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (keys[j] < keys[i] || (j < i && keys[j] == keys[i])) ++ranks[i];
    }
  }
  return ranks;
}

PlacedReference build_pi_p_reference(std::span<const Key> keys, std::span<const Key> ranks) {
  const std::size_t n = keys.size();
  if (ranks.size() != n) throw std::invalid_argument("build_pi_p_reference: length mismatch");
  check_key_range(keys);

  // ranks must sort the keys: the key at rank r is non-decreasing in r
  std::vector<Key> key_at_rank(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Key r = ranks[i];
    if (r < 1 || static_cast<std::size_t>(r) > n || key_at_rank[static_cast<std::size_t>(r)] != 0) {
      throw std::invalid_argument("build_pi_p_reference: ranks are not a permutation of 1..n");
    }
    key_at_rank[static_cast<std::size_t>(r)] = keys[i];
  }
  for (std::size_t r = 2; r <= n; ++r) {
    if (key_at_rank[r - 1] > key_at_rank[r]) {
      throw std::invalid_argument("build_pi_p_reference: ranks inconsistent with keys");
    }
  }

  std::vector<Key> min_rank(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Key& m = min_rank[static_cast<std::size_t>(keys[i])];
    if (m == 0 || ranks[i] < m) m = ranks[i];
  }

  PlacedReference out{std::vector<Key>(keys.begin(), keys.end()), std::vector<Key>(ranks.begin(), ranks.end())};
  for (std::size_t i = 0; i < n; ++i) {
    if (out.pi_p[i] == min_rank[static_cast<std::size_t>(keys[i])]) out.pi_p[i] = -out.pi_p[i];
  }

  // a tagged record at slot i with key v != i trades places with slot v
  for (std::size_t i = 0; i < n; ++i) {
    while (out.pi_p[i] < 0 && static_cast<std::size_t>(out.kp[i]) != i + 1) {
      const auto home = static_cast<std::size_t>(out.kp[i]) - 1;
      std::swap(out.kp[i], out.kp[home]);
      std::swap(out.pi_p[i], out.pi_p[home]);
    }
  }
  return out;
}

std::vector<Key> implied_keys(std::span<const Key> pi_p) {
  const std::size_t n = pi_p.size();
  // owner[r] = slot of the negative entry whose block starts at rank r
  std::vector<Key> owner(n + 2, 0);
  for (const Key v : pi_p) {
    if (v == 0 || (v < 0 ? -v : v) > static_cast<Key>(n)) throw std::invalid_argument("implied_keys: entry out of range");
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (pi_p[p] < 0) owner[static_cast<std::size_t>(-pi_p[p])] = static_cast<Key>(p + 1);
  }
  for (std::size_t r = 2; r <= n; ++r) {
    if (owner[r] == 0) owner[r] = owner[r - 1];
  }
  std::vector<Key> keys(n);
  for (std::size_t p = 0; p < n; ++p) {
    keys[p] = pi_p[p] < 0 ? static_cast<Key>(p + 1) : owner[static_cast<std::size_t>(pi_p[p])];
  }
  return keys;
}

std::vector<Key> reference_sort(std::span<const Key> keys) {
  std::vector<Key> out(keys.begin(), keys.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool verify_sorted_and_multiset(std::span<const Key> before, std::span<const Key> after) {
  if (before.size() != after.size()) return false;
  if (!std::is_sorted(after.begin(), after.end())) return false;
  return reference_sort(before) == std::vector<Key>(after.begin(), after.end());
}

}  // namespace assoc::harness
