#pragma once

// KeyFile: line 1 holds n, lines 2..n+1 hold one decimal key each.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "assoc/harness/oracle.hpp"

namespace assoc::cli {

using harness::Key;

class KeyFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Key> parse_key_file(std::istream& in);
std::vector<Key> read_key_file(const std::filesystem::path& path);

void write_key_file(std::ostream& out, std::span<const Key> keys);
void write_key_file(const std::filesystem::path& path, std::span<const Key> keys);

}  // namespace assoc::cli
