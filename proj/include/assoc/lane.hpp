#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>

namespace assoc {

using Index = std::ptrdiff_t;

/// A lane exposes a signed working value per slot, addressed 1..n.
///
/// A record is whatever must travel with the value when a slot moves. For a
/// plain array the record is the value itself; a packed lane carries a key
/// payload alongside the working value.
template <class L>
concept Lane = requires(L lane, const L clane, Index p, typename L::value_type v, typename L::record_type r) {
  requires std::signed_integral<typename L::value_type>;
  { clane.size() } -> std::convertible_to<Index>;
  { clane.get(p) } -> std::same_as<typename L::value_type>;
  lane.set(p, v);
  { clane.load(p) } -> std::same_as<typename L::record_type>;
  lane.store(p, r, v);
  { clane.value_of(r) } -> std::same_as<typename L::value_type>;
};

/// Plain signed words; value and record coincide.
template <std::signed_integral Int>
class PlainLane {
 public:
  using value_type = Int;
  using record_type = Int;

  explicit PlainLane(std::span<Int> data) noexcept : data_(data) {}

  Index size() const noexcept { return static_cast<Index>(data_.size()); }
  Int get(Index p) const noexcept { return data_[static_cast<std::size_t>(p - 1)]; }
  void set(Index p, Int v) const noexcept { data_[static_cast<std::size_t>(p - 1)] = v; }
  Int load(Index p) const noexcept { return get(p); }
  void store(Index p, Int, Int v) const noexcept { set(p, v); }
  Int value_of(Int r) const noexcept { return r; }

 private:
  std::span<Int> data_;
};

/// 64-bit words holding a signed working value in the high bits and an
/// unsigned payload of `payload_bits` bits in the low bits.
///
/// The working value must satisfy |v| < 2^(63 - payload_bits).
class PackedLane {
 public:
  using value_type = std::int64_t;
  using record_type = std::int64_t;

  PackedLane(std::span<std::int64_t> words, int payload_bits) noexcept
      : words_(words), shift_(payload_bits), mask_((std::uint64_t{1} << payload_bits) - 1) {}

  Index size() const noexcept { return static_cast<Index>(words_.size()); }
  std::int64_t get(Index p) const noexcept { return value_of(word(p)); }
  void set(Index p, std::int64_t v) const noexcept { word(p) = pack(v, word(p)); }
  std::int64_t load(Index p) const noexcept { return word(p); }
  void store(Index p, std::int64_t r, std::int64_t v) const noexcept { word(p) = pack(v, r); }
  std::int64_t value_of(std::int64_t r) const noexcept { return r >> shift_; }

  std::uint64_t payload(std::int64_t w) const noexcept { return static_cast<std::uint64_t>(w) & mask_; }
  std::int64_t pack(std::int64_t v, std::int64_t carrier) const noexcept {
    return static_cast<std::int64_t>((static_cast<std::uint64_t>(v) << shift_) |
                                     (static_cast<std::uint64_t>(carrier) & mask_));
  }

 private:
  std::int64_t& word(Index p) const noexcept { return words_[static_cast<std::size_t>(p - 1)]; }

  std::span<std::int64_t> words_;
  int shift_;
  std::uint64_t mask_;
};

/// Lane access with every element read and write reported to a probe.
template <Lane L, class Probe>
class Slots {
 public:
  using value_type = typename L::value_type;
  using record_type = typename L::record_type;

  Slots(L lane, Probe& probe) noexcept : lane_(lane), probe_(probe) {}

  Index size() const noexcept { return lane_.size(); }
  value_type operator[](Index p) const noexcept {
    probe_.read();
    return lane_.get(p);
  }
  void set(Index p, value_type v) const noexcept {
    probe_.write();
    lane_.set(p, v);
  }
  record_type load(Index p) const noexcept {
    probe_.read();
    return lane_.load(p);
  }
  void store(Index p, record_type r, value_type v) const noexcept {
    probe_.write();
    lane_.store(p, r, v);
  }
  value_type value_of(record_type r) const noexcept { return lane_.value_of(r); }

  /// Exchanges whole records.
  void swap(Index p, Index q) const noexcept {
    const record_type a = load(p);
    const record_type b = load(q);
    store(p, b, value_of(b));
    store(q, a, value_of(a));
  }

  Probe& probe() const noexcept { return probe_; }

 private:
  L lane_;
  Probe& probe_;
};

}  // namespace assoc
