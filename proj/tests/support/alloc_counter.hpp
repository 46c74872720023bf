#pragma once

#include <cstdint>

namespace assoc::test {

/// Heap allocations made by this process so far (all threads).
std::uint64_t allocation_count() noexcept;

/// Allocations made while the guard is alive.
class AllocationWindow {
 public:
  AllocationWindow() noexcept : start_(allocation_count()) {}
  std::uint64_t count() const noexcept { return allocation_count() - start_; }

 private:
  std::uint64_t start_;
};

}  // namespace assoc::test
