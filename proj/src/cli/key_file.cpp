#include "key_file.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

namespace assoc::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(std::string_view text, std::size_t line) {
  text = trim(text);
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw KeyFileError("line " + std::to_string(line) + ": expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::vector<Key> parse_key_file(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw KeyFileError("empty key file");
  const auto n = parse_number<std::size_t>(line, 1);

  std::vector<Key> keys;
  keys.reserve(n);
  std::size_t number = 1;
  while (keys.size() < n && std::getline(in, line)) {
    ++number;
    keys.push_back(parse_number<Key>(line, number));
  }
  if (keys.size() != n) {
    throw KeyFileError("expected " + std::to_string(n) + " keys, found " + std::to_string(keys.size()));
  }
  while (std::getline(in, line)) {
    ++number;
    if (!trim(line).empty()) throw KeyFileError("line " + std::to_string(number) + ": more keys than declared");
  }
  return keys;
}

std::vector<Key> read_key_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw KeyFileError("cannot open " + path.string());
  return parse_key_file(in);
}

void write_key_file(std::ostream& out, std::span<const Key> keys) {
  out << keys.size() << '\n';
  for (const Key k : keys) out << k << '\n';
}

void write_key_file(const std::filesystem::path& path, std::span<const Key> keys) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw KeyFileError("cannot write " + path.string());
  write_key_file(out, keys);
  if (!out) throw KeyFileError("write failed for " + path.string());
}

}  // namespace assoc::cli
