#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "qscov/scalar.hpp"

namespace qscov {

/// Resource limits for enumeration-heavy routines.
struct Caps {
  std::uint64_t max_group_order = 10'000;
  std::uint64_t max_matrix_entries = 1'000'000;

  /// Defaults overridden by QSCOV_MAX_GROUP_ORDER / QSCOV_MAX_MATRIX_ENTRIES when set.
  static Caps from_environment() {
    Caps caps;
    auto read = [](const char* name, std::uint64_t& dst) {
      if (const char* v = std::getenv(name)) {
        std::uint64_t parsed = std::stoull(v);
        if (parsed == 0) throw std::invalid_argument(std::string(name) + " must be positive");
        dst = parsed;
      }
    };
    read("QSCOV_MAX_GROUP_ORDER", caps.max_group_order);
    read("QSCOV_MAX_MATRIX_ENTRIES", caps.max_matrix_entries);
    return caps;
  }

  void check_matrix(std::uint64_t rows, std::uint64_t cols, const std::string& what) const {
    if (cols != 0 && rows > max_matrix_entries / cols)
      throw resource_error(what + ": matrix of " + std::to_string(rows) + "x" + std::to_string(cols) +
                           " exceeds the cap of " + std::to_string(max_matrix_entries) + " entries");
  }
};

}  // namespace qscov
