#include "novikov/io/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace novikov::io {

std::string fmt(double v) {
  char buf[40];
  // %.17g round-trips doubles exactly and is locale-independent for C locale digits
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(const std::string& path) : out_(path, std::ios::binary) {
  if (!out_) throw std::runtime_error("CsvWriter: cannot open " + path);
}

void CsvWriter::header(const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out_ << ',';
    out_ << names[i];
  }
  out_ << '\n';
}

void CsvWriter::row(std::span<const double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out_ << ',';
    out_ << fmt(values[i]);
  }
  out_ << '\n';
}

void CsvWriter::raw(const std::string& line) { out_ << line; }

} // namespace novikov::io
