#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "assoc/harness/generate.hpp"
#include "assoc/probe.hpp"

namespace assoc::harness {

enum class Algorithm { Assoc, RadixAssoc, ComparisonSort, LsdRadix };

/// assoc, radix_assoc, baseline_comparison_sort, baseline_lsd_radix.
std::string_view algorithm_name(Algorithm a) noexcept;

/// Accepts the canonical names plus the short forms radix, std_sort and lsd_radix.
Algorithm parse_algorithm(std::string_view text);

/// Sorts keys drawn from [1, n]. With `counting` set the in-place algorithms
/// report element accesses; otherwise only scratch-word figures are filled.
/// The baselines are not instrumented for reads and writes.
SortStats run_algorithm(Algorithm a, std::span<Key> keys, bool counting);

struct BenchRecord {
  Algorithm algorithm = Algorithm::Assoc;
  InputSpec spec;
  std::size_t rep = 0;
  std::uint64_t wall_ns = 0;
  SortStats stats;
};

/// A sorted output failed verification; carries what is needed to reproduce it.
class VerificationFailure : public std::runtime_error {
 public:
  VerificationFailure(Algorithm algorithm, const InputSpec& spec);
  const InputSpec& spec() const noexcept { return spec_; }
  Algorithm algorithm() const noexcept { return algorithm_; }

 private:
  Algorithm algorithm_;
  InputSpec spec_;
};

/// One record per (algorithm, spec, repetition), in that nesting order. Each
/// repetition sorts a fresh copy of the generated input and is verified
/// before its time is kept. Statistics come from one extra instrumented run
/// that is not timed. Independent (algorithm, spec) pairs may run on
/// `threads` workers.
std::vector<BenchRecord> run_benchmark(std::span<const Algorithm> algorithms, std::span<const InputSpec> specs,
                                       std::size_t repetitions, unsigned threads = 1);

struct MedianRow {
  Algorithm algorithm = Algorithm::Assoc;
  InputSpec spec;
  std::uint64_t median_wall_ns = 0;
  SortStats stats;
};

/// Median wall time per (algorithm, spec), in first-seen order.
std::vector<MedianRow> medians(std::span<const BenchRecord> records);

inline constexpr std::string_view kCsvHeader =
    "algorithm,n,distribution,m,seed,rep,wall_ns,reads,writes,cycles,peak_aux_words";

void write_csv(std::ostream& out, std::span<const BenchRecord> records);

/// Human-readable median table with time ratios against the first algorithm
/// listed for each spec.
void write_median_table(std::ostream& out, std::span<const MedianRow> rows);

}  // namespace assoc::harness
