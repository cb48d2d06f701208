#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace porism {

/// Shortest round-trip decimal representation of a double (std::to_chars),
/// so identical inputs always serialize to identical bytes.
std::string format_double(double v);

/// RFC 4180 CSV writer: CRLF line endings, fields quoted only when needed.
class CsvWriter {
public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void row(const std::vector<std::string>& fields);

private:
  std::ostream& out_;
};

}  // namespace porism
