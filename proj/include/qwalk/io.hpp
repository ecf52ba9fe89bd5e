// io.hpp
// CSV serialization of distributions, file helpers and the FNV-1a checksum
// used by run manifests. Rows are sorted by coordinates and probabilities
// are printed with 17 significant digits, so identical runs serialize to
// identical bytes.

#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwalk/analysis.hpp"

namespace qwalk {

inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string to_hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(v));
  return buf;
}

inline std::string format_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", p);
  return buf;
}

inline std::vector<std::string> coordinate_names(int dim) {
  switch (dim) {
    case 1: return {"x"};
    case 2: return {"x", "z"};
    case 3: return {"x", "y", "z"};
    default: throw std::invalid_argument("coordinate_names: bad dimension");
  }
}

inline std::string distribution_csv(const Distribution& d) {
  std::ostringstream out;
  const auto names = coordinate_names(d.dim);
  for (const auto& n : names) out << n << ',';
  out << "p\n";
  for (const auto& [pos, prob] : d.sorted_entries()) {
    for (int i = 0; i < d.dim; ++i) out << pos.c[i] << ',';
    out << format_probability(prob) << '\n';
  }
  return out.str();
}

inline Distribution parse_distribution_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("csv: empty distribution file");
  int columns = 1;
  for (char c : line) columns += (c == ',');
  Distribution d;
  d.dim = columns - 1;
  if (d.dim < 1 || d.dim > 3) throw std::runtime_error("csv: bad header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    Position pos{};
    for (int i = 0; i < d.dim; ++i) {
      if (!std::getline(row, cell, ','))
        throw std::runtime_error("csv: short row");
      pos.c[i] = static_cast<std::int32_t>(std::stol(cell));
    }
    if (!std::getline(row, cell, ','))
      throw std::runtime_error("csv: missing probability");
    d.p[pos] += std::stod(cell);
  }
  return d;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qwalk
