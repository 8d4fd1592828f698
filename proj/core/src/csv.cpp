#include "kehl/csv.hpp"

#include <cstdio>

namespace kehl {

CsvWriter::CsvWriter(const std::string& path, const std::string& module_tag,
                     const std::vector<std::string>& columns)
    : out_(path) {
  if (!out_) throw ConfigError("cannot open for writing: " + path);
  out_ << "# " << version_string() << " " << module_tag
       << "; units: dimensionless\n";
  for (size_t i = 0; i < columns.size(); ++i)
    out_ << columns[i] << (i + 1 < columns.size() ? "," : "\n");
}

void CsvWriter::row(const std::vector<double>& values) {
  char buf[32];
  for (size_t i = 0; i < values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", values[i]);
    out_ << buf << (i + 1 < values.size() ? "," : "\n");
  }
}

}  // namespace kehl
