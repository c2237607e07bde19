#include "superenv/linalg.hpp"

#include <utility>

#include "superenv/error.hpp"

namespace superenv {

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw DomainError("ragged matrix rows");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

QVector QMatrix::row(std::size_t i) const {
  return QVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

namespace {

using IntRow = std::vector<BigInt>;

IntRow clear_denominators(const QMatrix& m, std::size_t i) {
  BigInt scale = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    BigInt den = m(i, j).denominator();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
  }
  IntRow out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    out[j] = m(i, j).numerator() * (scale / m(i, j).denominator());
  }
  return out;
}

} // namespace

RowEchelon rref(const QMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<IntRow> a(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    a[i] = clear_denominators(m, i);
  }

  // Fraction-free forward elimination. After each step every entry below the
  // pivot rows is a minor of the input, so the division by the previous pivot
  // is exact.
  std::vector<std::size_t> pivots;
  BigInt previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) {
      ++p;
    }
    if (p == rows) {
      continue;
    }
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt cross = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), cross.get_mpz_t(), previous.get_mpz_t());
      }
      a[i][c] = 0;
    }
    previous = a[r][c];
    pivots.push_back(c);
    ++r;
  }

  RowEchelon out{QMatrix(rows, cols), pivots};
  QMatrix& red = out.reduced;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    Rational lead(a[i][pivots[i]]);
    for (std::size_t j = 0; j < cols; ++j) {
      if (a[i][j] != 0) {
        red(i, j) = Rational(a[i][j]) / lead;
      }
    }
  }
  for (std::size_t i = pivots.size(); i-- > 0;) {
    const std::size_t pc = pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      Rational factor = red(k, pc);
      if (factor.is_zero()) {
        continue;
      }
      for (std::size_t j = pc; j < cols; ++j) {
        if (!red(i, j).is_zero()) {
          red(k, j) -= factor * red(i, j);
        }
      }
    }
  }
  return out;
}

std::vector<QVector> kernel(const QMatrix& m) {
  RowEchelon e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t pc : e.pivot_columns) {
    is_pivot[pc] = true;
  }
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) {
      continue;
    }
    QVector v(cols);
    v[f] = Rational(1);
    for (std::size_t i = 0; i < e.rank(); ++i) {
      v[e.pivot_columns[i]] = -e.reduced(i, f);
    }
    basis.push_back(std::move(v));
  }
  return span_basis(basis, cols);
}

std::vector<QVector> span_basis(const std::vector<QVector>& vectors, std::size_t dimension) {
  if (vectors.empty()) {
    return {};
  }
  RowEchelon e = rref(QMatrix::from_rows(vectors, dimension));
  std::vector<QVector> out;
  out.reserve(e.rank());
  for (std::size_t i = 0; i < e.rank(); ++i) {
    out.push_back(e.reduced.row(i));
  }
  return out;
}

bool in_span(const std::vector<QVector>& vectors, const QVector& v) {
  auto base = span_basis(vectors, v.size());
  auto extended = vectors;
  extended.push_back(v);
  return span_basis(extended, v.size()).size() == base.size();
}

} // namespace superenv
