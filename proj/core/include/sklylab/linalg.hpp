#pragma once

// Dense exact linear algebra over Scalar: row reduction, rank, kernels and an
// incrementally maintained reduced row space.

#include <cstddef>
#include <optional>
#include <vector>

#include "sklylab/scalars.hpp"

namespace sklylab {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

/// Row reduces `m` in place to reduced echelon form; returns pivot columns.
std::vector<std::size_t> rref(Mat& m, const FieldSpec& field);

std::size_t rank(Mat m, const FieldSpec& field);

/// Basis of {x : m x = 0}; `cols` is the number of unknowns.
std::vector<Vec> kernel(Mat m, std::size_t cols, const FieldSpec& field);

/// Some solution of m x = b, or nullopt if inconsistent.
std::optional<Vec> solve(Mat m, const Vec& b, const FieldSpec& field);

/// Reduced row space kept in echelon form with unit pivots. Pivots are taken
/// at the first nonzero column of each inserted row.
class RowSpace {
 public:
  RowSpace(std::size_t dim, FieldSpec field);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const FieldSpec& field() const { return field_; }

  /// Reduces v against the stored rows (pivots cleared).
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  /// Inserts v if independent; returns whether the rank grew.
  bool insert(Vec v);

  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const Mat& rows() const { return rows_; }

 private:
  std::size_t dim_;
  FieldSpec field_;
  Mat rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace sklylab
