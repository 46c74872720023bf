#include "assoc/harness/generate.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

namespace assoc::harness {

namespace {

Key uniform_key(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<Key>(1, static_cast<Key>(n))(rng);
}

// Fisher-Yates with our own index draws, so the result depends only on the engine.
void shuffle(std::vector<Key>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace

void InputSpec::validate() const {
  if (distribution == Distribution::FewDistinct && (m < 1 || m > n)) {
    throw std::invalid_argument("few_distinct: m must be in [1, n]");
  }
}

std::string_view distribution_name(Distribution d) noexcept {
  switch (d) {
    case Distribution::Uniform: return "uniform";
    case Distribution::FewDistinct: return "few_distinct";
    case Distribution::Sorted: return "sorted";
    case Distribution::Reverse: return "reverse";
    case Distribution::AllEqual: return "all_equal";
    case Distribution::Permutation: return "permutation";
  }
  return "?";
}

Distribution parse_distribution(std::string_view text, std::size_t& m) {
  m = 0;
  for (const std::string_view prefix : {"few-distinct=", "few_distinct="}) {
    if (text.starts_with(prefix)) {
      const std::string_view digits = text.substr(prefix.size());
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || m == 0) {
        throw std::invalid_argument("bad few-distinct count in '" + std::string(text) + "'");
      }
      return Distribution::FewDistinct;
    }
  }
  if (text == "uniform") return Distribution::Uniform;
  if (text == "sorted") return Distribution::Sorted;
  if (text == "reverse") return Distribution::Reverse;
  if (text == "equal" || text == "all_equal") return Distribution::AllEqual;
  if (text == "perm" || text == "permutation") return Distribution::Permutation;
  throw std::invalid_argument("unknown distribution '" + std::string(text) + "'");
}

std::vector<Key> generate_input(const InputSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  std::vector<Key> keys(n);
  if (n == 0) return keys;
  std::mt19937_64 rng(spec.seed);

  switch (spec.distribution) {
    case Distribution::Uniform:
      for (Key& k : keys) k = uniform_key(rng, n);
      break;
    case Distribution::FewDistinct: {
      std::vector<Key> values(n);
      std::iota(values.begin(), values.end(), Key{1});
      // partial shuffle picks m distinct values
      for (std::size_t i = 0; i < spec.m; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
        std::swap(values[i], values[j]);
      }
      for (Key& k : keys) k = values[static_cast<std::size_t>(rng() % spec.m)];
      break;
    }
    case Distribution::Sorted:
      for (Key& k : keys) k = uniform_key(rng, n);
      std::sort(keys.begin(), keys.end());
      break;
    case Distribution::Reverse:
      for (Key& k : keys) k = uniform_key(rng, n);
      std::sort(keys.begin(), keys.end(), std::greater<>());
      break;
    case Distribution::AllEqual:
      std::fill(keys.begin(), keys.end(), uniform_key(rng, n));
      break;
    case Distribution::Permutation:
      std::iota(keys.begin(), keys.end(), Key{1});
      shuffle(keys, rng);
      break;
  }
  return keys;
}

}  // namespace assoc::harness
