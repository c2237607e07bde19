#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superenv/linalg.hpp"
#include "superenv/poly.hpp"
#include "superenv/rational.hpp"

namespace superenv {

enum class Parity : unsigned char { Even = 0, Odd = 1 };

inline int bit(Parity p) { return static_cast<int>(p); }
inline Parity operator+(Parity a, Parity b) { return static_cast<Parity>(bit(a) ^ bit(b)); }
inline Parity parity_of(unsigned k) { return (k % 2 == 0) ? Parity::Even : Parity::Odd; }
/// (-1)^(|a||b|)
inline int koszul_sign(Parity a, Parity b) { return (bit(a) & bit(b)) ? -1 : 1; }
const char* to_string(Parity p);

struct Generator {
  std::string name;
  Parity parity = Parity::Even;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// An element of gl(m,n) as an (m+n)x(m+n) block matrix.
class MatrixElement {
public:
  MatrixElement() = default;
  MatrixElement(unsigned even_block, unsigned odd_block);
  static MatrixElement identity(unsigned even_block, unsigned odd_block);
  /// Matrix unit e_ij, 0-based indices.
  static MatrixElement unit(unsigned even_block, unsigned odd_block, unsigned i, unsigned j);

  unsigned even_block() const { return m_; }
  unsigned odd_block() const { return n_; }
  unsigned size() const { return m_ + n_; }
  Rational& at(unsigned i, unsigned j) { return entries_[i * size() + j]; }
  const Rational& at(unsigned i, unsigned j) const { return entries_[i * size() + j]; }
  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const;
  /// Parity of a homogeneous element (zero counts as even); nullopt if mixed.
  std::optional<Parity> parity() const;
  /// Restriction to the diagonal blocks (Even) or off-diagonal blocks (Odd).
  MatrixElement component(Parity p) const;

  friend MatrixElement operator+(const MatrixElement& a, const MatrixElement& b);
  friend MatrixElement operator-(const MatrixElement& a, const MatrixElement& b);
  friend MatrixElement operator*(const MatrixElement& a, const MatrixElement& b);
  friend MatrixElement operator*(const Rational& c, const MatrixElement& a);
  friend bool operator==(const MatrixElement&, const MatrixElement&) = default;

private:
  unsigned m_ = 0;
  unsigned n_ = 0;
  std::vector<Rational> entries_;
};

/// str(X) = tr(A) - tr(D).
Rational supertrace(const MatrixElement& x);

/// Bilinear extension of XY - (-1)^(|X||Y|) YX over the homogeneous components.
MatrixElement supercommutator(const MatrixElement& a, const MatrixElement& b);

using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Finite-dimensional Lie superalgebra given by an ordered, graded basis and
/// structure constants [b_i, b_j] = sum_k c(i,j,k) b_k. Construction does not
/// validate; see validate().
class LieSuperalgebra {
public:
  LieSuperalgebra() = default;
  /// `constants` is the dense n^3 table indexed (i*n + j)*n + k.
  LieSuperalgebra(std::vector<Generator> generators, std::vector<Rational> constants,
                  std::vector<MatrixElement> realization = {});

  std::size_t dimension() const { return generators_.size(); }
  std::size_t even_dimension() const;
  std::size_t odd_dimension() const;

  const std::vector<Generator>& generators() const { return generators_; }
  const Generator& generator(std::size_t i) const { return generators_[i]; }
  Parity parity(std::size_t i) const { return generators_[i].parity; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::vector<std::size_t> indices_of(Parity p) const;
  std::vector<std::string> names() const;

  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dimension() + j) * dimension() + k];
  }
  /// Nonzero terms of [b_i, b_j] in increasing k.
  const SparseVector& bracket_terms(std::size_t i, std::size_t j) const {
    return sparse_[i * dimension() + j];
  }

  /// Matrix images of the basis when the algebra was built inside gl(m,n).
  const std::vector<MatrixElement>& realization() const { return realization_; }

  friend bool operator==(const LieSuperalgebra& a, const LieSuperalgebra& b) {
    return a.generators_ == b.generators_ && a.constants_ == b.constants_;
  }

private:
  std::vector<Generator> generators_;
  std::vector<Rational> constants_;
  std::vector<SparseVector> sparse_;
  std::vector<MatrixElement> realization_;
};

struct Violation {
  enum class Kind { Grading, Antisymmetry, Jacobi };
  Kind kind;
  std::vector<std::size_t> indices;  // witnessing basis indices
  std::string description;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

const char* to_string(Violation::Kind k);

/// Checks grading compatibility, super antisymmetry, and the super Jacobi
/// identity on all basis triples.
ValidationReport validate(const LieSuperalgebra& g);

/// Throws DomainError listing the violations when `g` is not a valid table.
void require_valid(const LieSuperalgebra& g);

/// Bilinear extension of the structure constants to coordinate vectors.
QVector bracket(const LieSuperalgebra& g, const QVector& a, const QVector& b);

/// Accumulates user-supplied brackets and completes the table by super
/// antisymmetry. A second entry for the same unordered pair must agree with
/// the completion of the first.
class BracketTableBuilder {
public:
  explicit BracketTableBuilder(std::vector<Generator> generators);

  /// Records [b_i, b_j] = value (coordinate vector). Throws DomainError on a
  /// contradiction.
  void set(std::size_t i, std::size_t j, const QVector& value);
  LieSuperalgebra build() const;

private:
  std::vector<Generator> generators_;
  std::vector<Rational> constants_;
  std::vector<bool> assigned_;
};

/// Builds an algebra from linearly independent homogeneous matrices closed
/// under the supercommutator.
LieSuperalgebra from_matrices(std::vector<std::string> names, std::vector<MatrixElement> basis);

/// gl(m,n). For (1,1) the basis is x = id, y = e11, u = e12, v = e21;
/// otherwise matrix units named e<i><j> (1-based), even units first.
LieSuperalgebra build_gl(unsigned m, unsigned n);

/// Supertrace-zero subalgebra of gl(m,n). For (1,1) the basis is x, u, v;
/// otherwise h_k = e_kk -+ e_{k+1,k+1} diagonals, then even units, then odd.
LieSuperalgebra build_sl(unsigned m, unsigned n);

/// Abelian algebra with even generators a1..ap and odd generators b1..bq.
LieSuperalgebra build_abelian(unsigned even_count, unsigned odd_count);

/// Direct sum with even generators of every summand first, then odd ones,
/// each group in summand order. Colliding names get a `_<summand>` suffix.
LieSuperalgebra direct_sum(const std::vector<LieSuperalgebra>& summands);

/// D(g): determinant of the odd-odd bracket matrix ([y_i, y_j]) over S(g_0),
/// odd basis in declaration order. Purely even algebras give 1.
PolyQ dg(const LieSuperalgebra& g);

struct PiVerdict {
  bool enveloping = false;    // U(g) satisfies a polynomial identity
  bool bosonization = false;  // H(g) satisfies a polynomial identity
};

/// Both verdicts hold exactly when the even part is abelian.
PiVerdict is_pi(const LieSuperalgebra& g);

} // namespace superenv
