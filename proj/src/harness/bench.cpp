#include "assoc/harness/bench.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <thread>

#include "assoc/harness/baselines.hpp"
#include "assoc/radix.hpp"
#include "assoc/sorter.hpp"

namespace assoc::harness {

std::string_view algorithm_name(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::Assoc: return "assoc";
    case Algorithm::RadixAssoc: return "radix_assoc";
    case Algorithm::ComparisonSort: return "baseline_comparison_sort";
    case Algorithm::LsdRadix: return "baseline_lsd_radix";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view text) {
  if (text == "assoc") return Algorithm::Assoc;
  if (text == "radix_assoc" || text == "radix") return Algorithm::RadixAssoc;
  if (text == "baseline_comparison_sort" || text == "std_sort") return Algorithm::ComparisonSort;
  if (text == "baseline_lsd_radix" || text == "lsd_radix") return Algorithm::LsdRadix;
  throw std::invalid_argument("unknown algorithm '" + std::string(text) + "'");
}

namespace {

RadixConfig radix_config_for(std::size_t n) {
  const int key_bits = n <= 2 ? 1 : static_cast<int>(std::bit_width(n - 1));
  return RadixConfig::for_input(n, key_bits);
}

template <class Probe>
void run_in_place(Algorithm a, std::span<Key> keys, Probe& probe) {
  if (a == Algorithm::Assoc) {
    assoc_permuting_sort(keys, probe);
  } else {
    msd_radix_assoc_sort(keys, radix_config_for(keys.size()), probe);
  }
}

}  // namespace

SortStats run_algorithm(Algorithm a, std::span<Key> keys, bool counting) {
  switch (a) {
    case Algorithm::Assoc:
    case Algorithm::RadixAssoc:
      if (counting) {
        CountingProbe probe;
        run_in_place(a, keys, probe);
        return probe.stats();
      } else {
        NullProbe probe;
        run_in_place(a, keys, probe);
        return {};
      }
    case Algorithm::ComparisonSort:
      comparison_sort_baseline(keys);
      return {};
    case Algorithm::LsdRadix: {
      SortStats stats;
      stats.peak_aux_words = lsd_radix_sort_baseline(keys);
      return stats;
    }
  }
  return {};
}

VerificationFailure::VerificationFailure(Algorithm algorithm, const InputSpec& spec)
    : std::runtime_error("verification failed: " + std::string(algorithm_name(algorithm)) + " n=" +
                         std::to_string(spec.n) + " distribution=" + std::string(distribution_name(spec.distribution)) +
                         " seed=" + std::to_string(spec.seed)),
      algorithm_(algorithm),
      spec_(spec) {}

namespace {

std::vector<BenchRecord> run_task(Algorithm algorithm, const InputSpec& spec, std::size_t repetitions) {
  const std::vector<Key> input = generate_input(spec);

  std::vector<Key> work = input;
  const SortStats stats = run_algorithm(algorithm, work, /*counting=*/true);
  if (!verify_sorted_and_multiset(input, work)) throw VerificationFailure(algorithm, spec);

  std::vector<BenchRecord> records;
  for (std::size_t rep = 0; rep < repetitions; ++rep) {
    work = input;
    const auto t0 = std::chrono::steady_clock::now();
    run_algorithm(algorithm, work, /*counting=*/false);
    const auto t1 = std::chrono::steady_clock::now();
    if (!verify_sorted_and_multiset(input, work)) throw VerificationFailure(algorithm, spec);
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
    records.push_back(BenchRecord{algorithm, spec, rep, static_cast<std::uint64_t>(std::max<std::int64_t>(ns, 1)), stats});
  }
  return records;
}

}  // namespace

std::vector<BenchRecord> run_benchmark(std::span<const Algorithm> algorithms, std::span<const InputSpec> specs,
                                       std::size_t repetitions, unsigned threads) {
  struct Task {
    Algorithm algorithm;
    const InputSpec* spec;
  };
  std::vector<Task> tasks;
  for (const Algorithm a : algorithms) {
    for (const InputSpec& s : specs) {
      s.validate();
      tasks.push_back({a, &s});
    }
  }

  std::vector<std::vector<BenchRecord>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  const auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      try {
        results[t] = run_task(tasks[t].algorithm, *tasks[t].spec, repetitions);
      } catch (...) {
        const std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };

  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  std::vector<BenchRecord> records;
  for (auto& r : results) records.insert(records.end(), r.begin(), r.end());
  return records;
}

std::vector<MedianRow> medians(std::span<const BenchRecord> records) {
  std::vector<MedianRow> rows;
  std::vector<std::vector<std::uint64_t>> times;
  for (const BenchRecord& r : records) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const MedianRow& row) {
      return row.algorithm == r.algorithm && row.spec.n == r.spec.n && row.spec.distribution == r.spec.distribution &&
             row.spec.m == r.spec.m && row.spec.seed == r.spec.seed;
    });
    if (it == rows.end()) {
      rows.push_back(MedianRow{r.algorithm, r.spec, 0, r.stats});
      times.emplace_back();
      it = rows.end() - 1;
    }
    times[static_cast<std::size_t>(it - rows.begin())].push_back(r.wall_ns);
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto& t = times[i];
    std::sort(t.begin(), t.end());
    const std::size_t k = t.size();
    rows[i].median_wall_ns = k % 2 == 1 ? t[k / 2] : (t[k / 2 - 1] + t[k / 2]) / 2;
  }
  return rows;
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << kCsvHeader << '\n';
  for (const BenchRecord& r : records) {
    out << algorithm_name(r.algorithm) << ',' << r.spec.n << ',' << distribution_name(r.spec.distribution) << ','
        << r.spec.m << ',' << r.spec.seed << ',' << r.rep << ',' << r.wall_ns << ',' << r.stats.reads << ','
        << r.stats.writes << ',' << r.stats.cycles << ',' << r.stats.peak_aux_words << '\n';
  }
}

void write_median_table(std::ostream& out, std::span<const MedianRow> rows) {
  out << std::left << std::setw(26) << "algorithm" << std::setw(10) << "n" << std::setw(14) << "distribution"
      << std::right << std::setw(14) << "median_ns" << std::setw(10) << "ratio" << '\n';
  for (const MedianRow& row : rows) {
    // baseline for the ratio: first row with the same input
    const auto base = std::find_if(rows.begin(), rows.end(), [&](const MedianRow& other) {
      return other.spec.n == row.spec.n && other.spec.distribution == row.spec.distribution &&
             other.spec.m == row.spec.m && other.spec.seed == row.spec.seed;
    });
    const double ratio = static_cast<double>(row.median_wall_ns) / static_cast<double>(base->median_wall_ns);
    out << std::left << std::setw(26) << algorithm_name(row.algorithm) << std::setw(10) << row.spec.n
        << std::setw(14) << distribution_name(row.spec.distribution) << std::right << std::setw(14)
        << row.median_wall_ns << std::setw(10) << std::fixed << std::setprecision(3) << ratio << '\n';
  }
}

}  // namespace assoc::harness
