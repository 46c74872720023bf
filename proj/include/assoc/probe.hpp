#pragma once

#include <algorithm>
#include <cstdint>

namespace assoc {

/// Counters reported by the in-place operations.
///
/// `peak_aux_words` is the largest number of scratch words (indices, carried
/// values, running sums) live at once across nested operations. The buffer
/// handle itself is not counted.
struct SortStats {
  std::uint64_t reads = 0;
  std::uint64_t writes = 0;
  std::uint64_t cycles = 0;
  std::uint64_t peak_aux_words = 0;

  std::uint64_t accesses() const noexcept { return reads + writes; }

  /// Sequential composition: counters add, peaks take the max.
  SortStats& operator+=(const SortStats& other) noexcept {
    reads += other.reads;
    writes += other.writes;
    cycles += other.cycles;
    peak_aux_words = std::max(peak_aux_words, other.peak_aux_words);
    return *this;
  }

  friend bool operator==(const SortStats&, const SortStats&) = default;
};

/// Probe that records nothing. Used on timed paths.
struct NullProbe {
  static constexpr bool kChecked = false;
  void read(std::uint64_t = 1) noexcept {}
  void write(std::uint64_t = 1) noexcept {}
  void cycle() noexcept {}
  void enter(std::uint64_t) noexcept {}
  void leave(std::uint64_t) noexcept {}
  SortStats stats() const noexcept { return {}; }
};

/// Probe that counts element accesses, cycles and live scratch words.
class CountingProbe {
 public:
  static constexpr bool kChecked = false;

  void read(std::uint64_t k = 1) noexcept { stats_.reads += k; }
  void write(std::uint64_t k = 1) noexcept { stats_.writes += k; }
  void cycle() noexcept { ++stats_.cycles; }
  void enter(std::uint64_t words) noexcept {
    live_ += words;
    stats_.peak_aux_words = std::max(stats_.peak_aux_words, live_);
  }
  void leave(std::uint64_t words) noexcept { live_ -= words; }

  const SortStats& stats() const noexcept { return stats_; }

 private:
  SortStats stats_;
  std::uint64_t live_ = 0;
};

/// Counting probe that also turns on internal invariant assertions.
class CheckedProbe : public CountingProbe {
 public:
  static constexpr bool kChecked = true;
};

/// Declares `words` scratch words live for the enclosing scope.
template <class Probe>
class AuxScope {
 public:
  AuxScope(Probe& probe, std::uint64_t words) : probe_(probe), words_(words) { probe_.enter(words_); }
  ~AuxScope() { probe_.leave(words_); }
  AuxScope(const AuxScope&) = delete;
  AuxScope& operator=(const AuxScope&) = delete;

 private:
  Probe& probe_;
  std::uint64_t words_;
};

}  // namespace assoc
