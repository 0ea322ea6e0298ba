#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace shotnoise {

// Shortest round-trip decimal form; byte-stable across runs.
inline std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline void write_text_file(const std::filesystem::path& path,
                            std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  return content;
}

// Versioned CSV header: a comment line carrying the schema tag and the
// config hash, then the column names.
inline std::string csv_header(std::string_view kind, std::string_view hash,
                              std::uint64_t seed, unsigned workers,
                              std::string_view columns) {
  std::string s = "# shotnoise-csv v1 kind=";
  s += kind;
  s += " config=";
  s += hash;
  s += " seed=";
  s += std::to_string(seed);
  s += " workers=";
  s += std::to_string(workers);
  s += "\n";
  s += columns;
  s += "\n";
  return s;
}

}  // namespace shotnoise
