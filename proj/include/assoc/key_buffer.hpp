#pragma once

#include <concepts>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace assoc {

/// What the contents of a KeyBuffer currently mean.
enum class Phase : std::uint8_t {
  RawKeys,        // keys in [1, n]
  PlacedKeys,     // one copy of each present value v sits at v
  Marked,         // representatives replaced by -1
  Counted,        // representatives hold -(occurrences)
  Lambda,         // representatives hold -(last rank)
  RankPerm,       // representatives hold -(first rank), duplicates hold their rank
  PermutedRanks,  // ranks moved home, representatives inverted
  SortedKeys,
};

constexpr std::string_view phase_name(Phase phase) noexcept {
  switch (phase) {
    case Phase::RawKeys: return "RawKeys";
    case Phase::PlacedKeys: return "PlacedKeys";
    case Phase::Marked: return "Marked";
    case Phase::Counted: return "Counted";
    case Phase::Lambda: return "Lambda";
    case Phase::RankPerm: return "RankPerm";
    case Phase::PermutedRanks: return "PermutedRanks";
    case Phase::SortedKeys: return "SortedKeys";
  }
  return "?";
}

/// Owning signed-word array that every phase rewrites in place.
///
/// The phase tag is a single byte of metadata for the whole buffer; nothing is
/// stored per element. Phase-typed operations assert the expected tag and
/// advance it.
template <std::signed_integral Int>
class KeyBuffer {
 public:
  using value_type = Int;

  KeyBuffer() = default;

  explicit KeyBuffer(std::vector<Int> data, Phase phase = Phase::RawKeys) : data_(std::move(data)), phase_(phase) {
    // every value in [-n, n] must be representable
    if (data_.size() > static_cast<std::size_t>(std::numeric_limits<Int>::max())) {
      throw std::length_error("KeyBuffer: length exceeds the word's positive range");
    }
  }

  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }
  Phase phase() const noexcept { return phase_; }
  void set_phase(Phase phase) noexcept { phase_ = phase; }

  std::span<Int> span() noexcept { return data_; }
  std::span<const Int> span() const noexcept { return data_; }
  const std::vector<Int>& values() const noexcept { return data_; }

  /// 1-based element access.
  Int at(std::ptrdiff_t p) const { return data_.at(static_cast<std::size_t>(p - 1)); }

  void expect(Phase phase) const {
    if (phase_ != phase) {
      throw std::logic_error(std::string("KeyBuffer in phase ") + std::string(phase_name(phase_)) + ", expected " +
                             std::string(phase_name(phase)));
    }
  }

 private:
  std::vector<Int> data_;
  Phase phase_ = Phase::RawKeys;
};

}  // namespace assoc
