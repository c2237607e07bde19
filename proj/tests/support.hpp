#pragma once

// Shared test-side generators and oracles. Nothing here calls into the
// library's elimination or straightening code.

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "superenv/algebra_source.hpp"
#include "superenv/bosonization.hpp"
#include "superenv/expr.hpp"
#include "superenv/linalg.hpp"
#include "superenv/pbw.hpp"
#include "superenv/superalgebra.hpp"

namespace testing {

using namespace superenv;

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }
  bool coin() { return between(0, 1) == 1; }

  Rational rational(int bound = 4) {
    return Rational(between(-bound, bound), between(1, 3));
  }
  Rational nonzero_rational(int bound = 4) {
    Rational r;
    while (r.is_zero()) {
      r = rational(bound);
    }
    return r;
  }

private:
  std::mt19937_64 engine_;
};

inline AlgebraPtr share(LieSuperalgebra g) { return std::make_shared<const LieSuperalgebra>(std::move(g)); }

inline AlgebraPtr gl11() {
  static const AlgebraPtr g = share(build_gl(1, 1));
  return g;
}

/// Random normal-form element: up to `terms` monomials of degree <= max_degree.
inline UElement random_element(Rng& rng, const AlgebraPtr& g, unsigned max_degree, int terms = 3) {
  const auto basis = pbw_basis(*g, max_degree);
  UElement e(g);
  for (int k = rng.between(1, terms); k > 0; --k) {
    e.add_term(basis[rng.index(basis.size())], rng.nonzero_rational());
  }
  return e;
}

inline std::vector<std::size_t> random_word(Rng& rng, std::size_t dimension, std::size_t max_length) {
  std::vector<std::size_t> w(static_cast<std::size_t>(rng.between(0, static_cast<int>(max_length))));
  for (auto& i : w) {
    i = rng.index(dimension);
  }
  return w;
}

inline std::vector<std::size_t> word_of(const PbwMonomial& m) {
  std::vector<std::size_t> w;
  for (std::size_t i = 0; i < m.size(); ++i) {
    w.insert(w.end(), m[i], i);
  }
  return w;
}

// ------------------------------------------------------------ linear algebra

/// Textbook rational Gauss-Jordan; returns RREF rows (nonzero only) and pivots.
struct NaiveEchelon {
  std::vector<QVector> rows;
  std::vector<std::size_t> pivots;
};

inline NaiveEchelon naive_rref(std::vector<QVector> a, std::size_t cols) {
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) {
      ++p;
    }
    if (p == a.size()) {
      continue;
    }
    std::swap(a[p], a[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (auto& x : a[r]) {
      x = x * inv;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i != r && !a[i][c].is_zero()) {
        const Rational f = a[i][c];
        for (std::size_t j = 0; j < cols; ++j) {
          a[i][j] = a[i][j] - f * a[r][j];
        }
      }
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return {a, pivots};
}

/// Null space from the naive RREF: one vector per free column, then
/// re-echelonized so it can be compared with the library's canonical form.
inline std::vector<QVector> naive_kernel(const std::vector<QVector>& a, std::size_t cols) {
  const NaiveEchelon e = naive_rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) {
    is_pivot[p] = true;
  }
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) {
      continue;
    }
    QVector v(cols);
    v[f] = Rational(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      v[e.pivots[i]] = -e.rows[i][f];
    }
    basis.push_back(v);
  }
  return naive_rref(basis, cols).rows;
}

inline std::vector<QVector> random_matrix_rows(Rng& rng, std::size_t rows, std::size_t cols, int zero_bias) {
  std::vector<QVector> a(rows, QVector(cols));
  for (auto& row : a) {
    for (auto& x : row) {
      x = rng.between(0, zero_bias) == 0 ? rng.rational(5) : Rational(0);
    }
  }
  return a;
}

// ------------------------------------------------------------ realization oracle

/// Image of a normal-form element under the matrix realization of `g`
/// (an associative superalgebra map U(g) -> End), computed by plain matrix
/// products of generator images.
inline MatrixElement realize(const UElement& e) {
  const auto& images = e.algebra().realization();
  const MatrixElement& sample = images.at(0);
  MatrixElement out(sample.even_block(), sample.odd_block());
  for (const auto& [m, c] : e.terms()) {
    MatrixElement p = MatrixElement::identity(sample.even_block(), sample.odd_block());
    for (auto i : word_of(m)) {
      p = p * images[i];
    }
    out = out + c * p;
  }
  return out;
}

inline MatrixElement realize_word(const LieSuperalgebra& g, const std::vector<std::size_t>& w) {
  const auto& images = g.realization();
  MatrixElement p = MatrixElement::identity(images.at(0).even_block(), images.at(0).odd_block());
  for (auto i : w) {
    p = p * images[i];
  }
  return p;
}

/// Parses `source` over `g` (U mode).
inline UElement U(const AlgebraPtr& g, const std::string& source) {
  return evaluate_u(parse_expr(source, ExprContext::for_algebra(*g)), g);
}
inline HElement H(const AlgebraPtr& g, const std::string& source) {
  return evaluate(parse_expr(source, ExprContext::for_algebra(*g, true)), g);
}

} // namespace testing
