#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "assoc/harness/oracle.hpp"

namespace assoc::harness {

/// The standard library's unstable in-place sort.
void comparison_sort_baseline(std::span<Key> keys);

/// Textbook LSD radix sort, 8-bit digits, one n-word scratch buffer.
/// Keys must be non-negative. Returns the number of scratch words used.
std::uint64_t lsd_radix_sort_baseline(std::span<Key> keys);

}  // namespace assoc::harness
