#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "stabilab/common.hpp"

namespace stabilab {

// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<int, BigInt>>;
using RationalRow = std::vector<std::pair<int, Rational>>;

// Clears denominators and divides out the content; the first entry ends up
// positive.
SparseRow primitive_row(const RationalRow& row);

// Incremental fraction-free row echelon form over the integers. Each stored
// row is primitive and its first nonzero column is its pivot.
class EchelonForm {
 public:
  // Reduces `row` against the stored pivots; stores it and returns true if
  // something nonzero remains.
  bool insert(SparseRow row);
  bool insert(const RationalRow& row) { return insert(primitive_row(row)); }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseRow>& rows() const { return rows_; }

  // Back-substitutes so every pivot column is zero outside its own row.
  void reduce_fully();

  // Basis of {x : Ax = 0} over columns 0..num_columns-1. Vector i has a one
  // in free column free_columns[i] and zeros in the other free columns.
  struct Nullspace {
    std::vector<int> free_columns;
    std::vector<RationalRow> vectors;
  };
  Nullspace nullspace(int num_columns);

 private:
  std::vector<SparseRow> rows_;
  std::map<int, std::size_t> pivot_row_;
};

}  // namespace stabilab
