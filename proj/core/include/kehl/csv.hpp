#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "kehl/types.hpp"

namespace kehl {

// Deterministic CSV emitter: a "# kehl <version> <module>" comment line, a
// header row, then %.17g-formatted rows (byte-stable across runs).
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::string& module_tag,
            const std::vector<std::string>& columns);
  void row(const std::vector<double>& values);

 private:
  std::ofstream out_;
};

}  // namespace kehl
