#include "porism/io.hpp"

#include <charconv>

namespace porism {

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  bool first = true;
  for (const std::string& f : fields) {
    if (!first) out_ << ',';
    first = false;
    if (f.find_first_of(",\"\r\n") != std::string::npos) {
      out_ << '"';
      for (char ch : f) {
        if (ch == '"') out_ << '"';
        out_ << ch;
      }
      out_ << '"';
    } else {
      out_ << f;
    }
  }
  out_ << "\r\n";
}

}  // namespace porism
