#include "cli.hpp"

#include <bit>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "assoc/harness/bench.hpp"
#include "assoc/harness/generate.hpp"
#include "assoc/harness/oracle.hpp"
#include "assoc/key_buffer.hpp"
#include "assoc/radix.hpp"
#include "assoc/sorter.hpp"
#include "key_file.hpp"

namespace assoc::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw UsageError("empty item in list '" + text + "'");
    items.push_back(item);
  }
  if (items.empty()) throw UsageError("empty list");
  return items;
}

std::size_t parse_size(const std::string& text) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw UsageError("not a count: '" + text + "'");
  }
  if (pos != text.size()) throw UsageError("not a count: '" + text + "'");
  return static_cast<std::size_t>(v);
}

harness::InputSpec parse_spec(std::size_t n, const std::string& dist, std::uint64_t seed) {
  harness::InputSpec spec;
  spec.n = n;
  spec.seed = seed;
  try {
    spec.distribution = harness::parse_distribution(dist, spec.m);
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return spec;
}

void emit_keys(const std::string& path, std::span<const Key> keys, std::ostream& out) {
  if (path.empty()) {
    write_key_file(out, keys);
  } else {
    write_key_file(path, keys);
  }
}

void print_stats(std::ostream& err, const SortStats& s) {
  err << "reads=" << s.reads << " writes=" << s.writes << " cycles=" << s.cycles
      << " peak_aux_words=" << s.peak_aux_words << '\n';
}

int ceil_log2(std::size_t n) { return n <= 2 ? 1 : static_cast<int>(std::bit_width(n - 1)); }

struct GenArgs {
  std::size_t n = 0;
  std::string dist = "uniform";
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenArgs& a, std::ostream& out) {
  const auto keys = harness::generate_input(parse_spec(a.n, a.dist, a.seed));
  emit_keys(a.out, keys, out);
  return kExitOk;
}

struct SortArgs {
  std::string in;
  std::string algo = "assoc";
  int key_bits = 0;
  std::string out;
};

int run_sort(const SortArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<Key> keys = read_key_file(a.in);
  SortStats stats;
  if (a.algo == "assoc") {
    if (a.key_bits != 0) throw UsageError("--key-bits applies to --algo radix only");
    try {
      check_key_range(std::span<const Key>(keys));
    } catch (const KeyOutOfRange& e) {
      throw KeyFileError(e.what());
    }
    stats = assoc_permuting_sort(std::span<Key>(keys));
  } else if (a.algo == "radix") {
    const int key_bits = a.key_bits != 0 ? a.key_bits : ceil_log2(keys.size());
    const RadixConfig cfg = RadixConfig::for_input(keys.size(), key_bits);
    try {
      cfg.validate();
      check_radix_packing(keys.size(), cfg);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    try {
      stats = msd_radix_assoc_sort(std::span<Key>(keys), cfg);
    } catch (const KeyOutOfRange& e) {
      throw KeyFileError(e.what());
    }
  } else {
    throw UsageError("unknown --algo '" + a.algo + "' (expected assoc or radix)");
  }
  emit_keys(a.out, keys, out);
  print_stats(err, stats);
  return kExitOk;
}

int run_verify(const std::string& in, const std::string& against, std::ostream& err) {
  const auto after = read_key_file(in);
  const auto before = read_key_file(against);
  if (harness::verify_sorted_and_multiset(before, after)) {
    err << "ok: " << after.size() << " keys sorted\n";
    return kExitOk;
  }
  err << "FAILED: " << in << " is not a sorted rearrangement of " << against << '\n';
  return kExitVerifyFailed;
}

struct BenchArgs {
  std::string n_list;
  std::string dist_list = "uniform";
  std::string algo_list = "assoc,radix_assoc,baseline_comparison_sort,baseline_lsd_radix";
  std::size_t reps = 3;
  std::uint64_t seed = 1;
  std::string csv;
  unsigned threads = 1;
};

int run_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<harness::Algorithm> algorithms;
  for (const auto& name : split_list(a.algo_list)) {
    try {
      algorithms.push_back(harness::parse_algorithm(name));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  std::vector<harness::InputSpec> specs;
  for (const auto& n : split_list(a.n_list)) {
    for (const auto& d : split_list(a.dist_list)) specs.push_back(parse_spec(parse_size(n), d, a.seed));
  }
  if (a.reps == 0) throw UsageError("--reps must be positive");

  std::vector<harness::BenchRecord> records;
  try {
    records = harness::run_benchmark(algorithms, specs, a.reps, a.threads);
  } catch (const harness::VerificationFailure& e) {
    err << e.what() << '\n';
    return kExitVerifyFailed;
  }

  if (a.csv.empty()) {
    harness::write_csv(out, records);
  } else {
    std::ofstream file(a.csv, std::ios::binary);
    if (!file) throw KeyFileError("cannot write " + a.csv);
    harness::write_csv(file, records);
  }
  harness::write_median_table(err, harness::medians(records));
  return kExitOk;
}

void print_phase(std::ostream& out, std::string_view label, const KeyBuffer<Key>& buf) {
  out << label << "  " << phase_name(buf.phase()) << ':';
  for (const Key k : buf.values()) out << ' ' << k;
  out << '\n';
}

int run_trace(const std::string& in, std::ostream& out) {
  KeyBuffer<Key> buf(read_key_file(in));
  try {
    check_key_range(std::span<const Key>(buf.span()));
  } catch (const KeyOutOfRange& e) {
    throw KeyFileError(e.what());
  }
  print_phase(out, "[0 input]                ", buf);
  place_distinct(buf);
  print_phase(out, "[1 place distinct keys]  ", buf);
  mark_representatives(buf);
  print_phase(out, "[2 mark representatives] ", buf);
  count_duplicates(buf);
  print_phase(out, "[3 count duplicates]     ", buf);
  prefix_sum_negatives(buf);
  print_phase(out, "[4 prefix-sum counts]    ", buf);
  assign_ranks(buf);
  print_phase(out, "[5 assign ranks]         ", buf);
  assoc_permute_in_place(buf);
  print_phase(out, "[6 associative permute]  ", buf);
  restore_sorted_keys(buf);
  print_phase(out, "[7 restore sorted keys]  ", buf);
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"In-place associative permuting sort for integer keys in [1, n]", "assocsort"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a key file");
  gen_cmd->add_option("--n", gen.n, "Number of keys")->required();
  gen_cmd->add_option("--dist", gen.dist, "uniform | few-distinct=M | sorted | reverse | equal | perm");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--out", gen.out, "Output key file (default: stdout)");

  SortArgs sort;
  auto* sort_cmd = app.add_subcommand("sort", "Sort a key file");
  sort_cmd->add_option("--in", sort.in, "Input key file")->required();
  sort_cmd->add_option("--algo", sort.algo, "assoc | radix");
  sort_cmd->add_option("--key-bits", sort.key_bits, "Radix only: keys lie in [1, 2^B]");
  sort_cmd->add_option("--out", sort.out, "Output key file (default: stdout)");

  std::string verify_in, verify_against;
  auto* verify_cmd = app.add_subcommand("verify", "Check that --in is a sorted rearrangement of --against");
  verify_cmd->add_option("--in", verify_in, "Sorted key file")->required();
  verify_cmd->add_option("--against", verify_against, "Original key file")->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run timed comparisons and write CSV");
  bench_cmd->add_option("--n", bench.n_list, "Comma-separated sizes")->required();
  bench_cmd->add_option("--dist", bench.dist_list, "Comma-separated distributions");
  bench_cmd->add_option("--algos", bench.algo_list, "Comma-separated algorithms");
  bench_cmd->add_option("--reps", bench.reps, "Repetitions per input");
  bench_cmd->add_option("--seed", bench.seed, "RNG seed");
  bench_cmd->add_option("--csv", bench.csv, "CSV output file (default: stdout)");
  bench_cmd->add_option("--threads", bench.threads, "Worker threads");

  std::string trace_in;
  auto* trace_cmd = app.add_subcommand("trace", "Print the buffer after every phase");
  trace_cmd->add_option("--in", trace_in, "Input key file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen, out);
    if (*sort_cmd) return run_sort(sort, out, err);
    if (*verify_cmd) return run_verify(verify_in, verify_against, err);
    if (*bench_cmd) return run_bench(bench, out, err);
    if (*trace_cmd) return run_trace(trace_in, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const KeyFileError& e) {
    err << "bad key file: " << e.what() << '\n';
    return kExitBadFile;
  }
  return kExitUsage;
}

}  // namespace assoc::cli
