#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace assoc {

/// A key fell outside the range an operation accepts. `index` is 1-based.
class KeyOutOfRange : public std::out_of_range {
 public:
  KeyOutOfRange(std::ptrdiff_t index, std::int64_t value, std::int64_t lo, std::int64_t hi)
      : std::out_of_range("key " + std::to_string(value) + " at index " + std::to_string(index) +
                          " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]"),
        index_(index),
        value_(value) {}

  std::ptrdiff_t index() const noexcept { return index_; }
  std::int64_t value() const noexcept { return value_; }

 private:
  std::ptrdiff_t index_;
  std::int64_t value_;
};

/// Input to the associative permute is not a sign-tagged permutation with ordered negatives.
class NotAssocPermutable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is not a permutation of 1..n.
class NotAPermutation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Buffer does not have the shape left behind by the associative permute.
class MalformedPermutedRanks : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal invariant was broken; only raised under CheckedProbe.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace assoc
