#pragma once

#include <cstddef>
#include <vector>

#include "superenv/rational.hpp"

namespace superenv {

using QVector = std::vector<Rational>;

/// Dense row-major matrix of rationals.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  QVector row(std::size_t i) const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  QMatrix reduced;                       // reduced row-echelon form
  std::vector<std::size_t> pivot_columns; // one per nonzero row, increasing
  std::size_t rank() const { return pivot_columns.size(); }
};

/// Reduced row-echelon form. Rows are cleared to integers and eliminated
/// fraction-free (Bareiss one-step division); the final normalization to unit
/// pivots is the only rational step.
RowEchelon rref(const QMatrix& m);

/// Null-space basis of `m`, returned as the rows of its (unique) RREF.
std::vector<QVector> kernel(const QMatrix& m);

/// Canonical basis (nonzero RREF rows) of the span of `vectors`, each of
/// length `dimension`.
std::vector<QVector> span_basis(const std::vector<QVector>& vectors, std::size_t dimension);

/// True when `v` lies in the span of `vectors`.
bool in_span(const std::vector<QVector>& vectors, const QVector& v);

} // namespace superenv
