#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include "slksched/types.hpp"

// Worked 9-job reference instance used across the suites. Its optimum is the
// order (7 8 6 3 5 1 2 4 9) with maintenance after position 1 and total cost
// 17476.37.
inline slksched::Instance reference_instance() {
  return slksched::Instance::make({62, 81, 25, 82, 26, 19, 55, 9, 91}, 0.05,
                                  4.0, 15.0, 5.0, 6.0, 10.0, 0.1);
}

// Self-deleting file for CLI tests.
struct TempFile {
  std::filesystem::path path;

  TempFile(const std::string& name, const std::string& content) {
    path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path, std::ios::binary);
    f << content;
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
  std::string str() const { return path.string(); }
};
