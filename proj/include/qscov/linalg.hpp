#pragma once

// Exact incremental row echelon form over a field (Rational or Cyclotomic).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qscov/scalar.hpp"

namespace qscov {

/// Maintains a reduced basis of the row space spanned so far. Rows are
/// normalized to a leading 1 at their pivot column; every stored row is
/// reduced against all earlier pivots.
template <class Field>
class RowEchelon {
 public:
  RowEchelon(std::size_t columns, Field zero) : columns_(columns), zero_(std::move(zero)) {}

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds a row; returns true when it increased the rank.
  bool insert(std::vector<Field> row) {
    if (row.size() != columns_) throw std::domain_error("RowEchelon: row length mismatch");
    for (const auto& [pivot, basis_row] : rows_) {
      if (is_zero(row[pivot])) continue;
      Field factor = row[pivot];
      for (std::size_t j = pivot; j < columns_; ++j)
        if (!is_zero(basis_row[j])) row[j] -= factor * basis_row[j];
    }
    std::optional<std::size_t> pivot;
    for (std::size_t j = 0; j < columns_; ++j)
      if (!is_zero(row[j])) {
        pivot = j;
        break;
      }
    if (!pivot) return false;
    Field inv = inverse(row[*pivot]);
    for (std::size_t j = *pivot; j < columns_; ++j)
      if (!is_zero(row[j])) row[j] *= inv;
    rows_.emplace_back(*pivot, std::move(row));
    return true;
  }

  bool full() const { return rows_.size() == columns_; }

  std::vector<Field> zero_row() const { return std::vector<Field>(columns_, zero_); }

 private:
  std::size_t columns_;
  Field zero_;
  std::vector<std::pair<std::size_t, std::vector<Field>>> rows_;
};

template <class Field>
std::size_t matrix_rank(const std::vector<std::vector<Field>>& rows, std::size_t columns, const Field& zero) {
  RowEchelon<Field> ech(columns, zero);
  for (const auto& r : rows) {
    if (ech.full()) break;
    ech.insert(r);
  }
  return ech.rank();
}

}  // namespace qscov
