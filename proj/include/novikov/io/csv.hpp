#pragma once

#include <fstream>
#include <span>
#include <string>
#include <vector>

namespace novikov::io {

/// Shortest round-trip decimal form; locale-independent, reproducible.
std::string fmt(double v);

class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path);

  void header(const std::vector<std::string>& names);
  void row(std::span<const double> values);
  void raw(const std::string& line);

 private:
  std::ofstream out_;
};

} // namespace novikov::io
