#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "assoc/harness/oracle.hpp"

namespace assoc::harness {

enum class Distribution { Uniform, FewDistinct, Sorted, Reverse, AllEqual, Permutation };

/// Keys are always drawn from [1, n].
struct InputSpec {
  std::size_t n = 0;
  Distribution distribution = Distribution::Uniform;
  std::size_t m = 0;  // number of distinct values, FewDistinct only
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument for FewDistinct with m outside [1, n].
  void validate() const;
};

/// Canonical name as written to CSV: uniform, few_distinct, sorted, reverse,
/// all_equal, permutation.
std::string_view distribution_name(Distribution d) noexcept;

/// Parses the command-line spelling: uniform, few-distinct=M, sorted, reverse,
/// equal, perm. The canonical CSV names are accepted too. Returns the
/// distribution and, for few-distinct, M through `m`.
Distribution parse_distribution(std::string_view text, std::size_t& m);

/// Deterministic for a given spec.
std::vector<Key> generate_input(const InputSpec& spec);

}  // namespace assoc::harness
