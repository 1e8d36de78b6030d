#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace adradar {

/// CSV writer with a mandatory header row and locale-independent formatting
/// ('.' decimal separator, %.12g), so repeated runs are byte-identical.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& columns);

  void row(const std::vector<double>& values);
  void raw_row(const std::vector<std::string>& cells);

  static std::string format(double v);

 private:
  std::ofstream out_;
  size_t columns_;
};

}  // namespace adradar
