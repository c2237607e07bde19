#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "superenv/rational.hpp"
#include "superenv/superalgebra.hpp"

namespace superenv {

using AlgebraPtr = std::shared_ptr<const LieSuperalgebra>;

/// Ordered PBW monomial b_1^{e_1} ... b_n^{e_n}; odd exponents are 0 or 1.
class PbwMonomial {
public:
  PbwMonomial() = default;
  explicit PbwMonomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {}
  static PbwMonomial unit(std::size_t dimension) { return PbwMonomial(std::vector<unsigned>(dimension, 0)); }

  const std::vector<unsigned>& exponents() const { return exps_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  std::size_t size() const { return exps_.size(); }
  unsigned degree() const;
  bool is_unit() const { return degree() == 0; }

  PbwMonomial with_delta(std::size_t i, int delta) const;

  friend bool operator==(const PbwMonomial&, const PbwMonomial&) = default;

private:
  std::vector<unsigned> exps_;
};

Parity parity(const LieSuperalgebra& g, const PbwMonomial& m);

/// Canonical monomial order: lower total degree first; within a degree, the
/// lexicographically larger exponent vector first (x^2 before x*y before u*v
/// for the basis x, y, u, v).
struct PbwOrder {
  bool operator()(const PbwMonomial& a, const PbwMonomial& b) const;
};

/// Element of U(g) in PBW normal form. Carries a shared handle to its algebra.
class UElement {
public:
  using Terms = std::map<PbwMonomial, Rational, PbwOrder>;

  UElement() = default;
  explicit UElement(AlgebraPtr algebra);

  static UElement scalar(AlgebraPtr algebra, const Rational& c);
  static UElement generator(AlgebraPtr algebra, std::size_t index);
  static UElement monomial(AlgebraPtr algebra, PbwMonomial m, const Rational& c = Rational(1));

  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const LieSuperalgebra& algebra() const { return *algebra_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Filtration degree; -1 for zero.
  int degree() const;
  /// Parity when homogeneous (zero is even); nullopt for mixed elements.
  std::optional<Parity> parity() const;
  Rational coefficient(const PbwMonomial& m) const;

  void add_term(const PbwMonomial& m, const Rational& c);

  UElement& operator+=(const UElement& rhs);
  UElement& operator-=(const UElement& rhs);
  friend UElement operator+(UElement a, const UElement& b) { return a += b; }
  friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
  friend UElement operator-(const UElement& a);
  friend UElement operator*(const Rational& c, const UElement& a);
  friend bool operator==(const UElement& a, const UElement& b);

private:
  AlgebraPtr algebra_;
  Terms terms_;
};

/// Throws DomainError unless both elements live over the same algebra.
void require_same_algebra(const LieSuperalgebra& a, const LieSuperalgebra& b);

/// Rewrites a word in the generators to PBW normal form by repeatedly
/// replacing the leftmost descending pair b_j b_i (j > i) with
/// (-1)^(|i||j|) b_i b_j + [b_j, b_i] and odd squares b_i b_i with
/// (1/2)[b_i, b_i]. Like words are merged after every pass.
UElement straighten(const AlgebraPtr& g, std::span<const std::size_t> word);

/// Product in U(g), normal form.
UElement u_mul(const UElement& a, const UElement& b);
inline UElement operator*(const UElement& a, const UElement& b) { return u_mul(a, b); }

/// ad(u)(m) = u m - (-1)^(|u||m|) m u, applied per homogeneous component of m.
UElement ad(const UElement& u, const UElement& m);
/// ad'(u)(m) = u m - (-1)^(|u|(|m|+1)) m u, per homogeneous component of m.
UElement ad_twist(const UElement& u, const UElement& m);

UElement graded_component(const UElement& e, Parity p);

/// All PBW monomials of total degree <= d, in canonical order.
std::vector<PbwMonomial> pbw_basis(const LieSuperalgebra& g, unsigned d);

/// dim F_n U(g): number of PBW monomials of total degree <= n.
BigInt count_filtered(const LieSuperalgebra& g, unsigned n);
/// count_filtered for n = 0..n_max.
std::vector<BigInt> filtered_counts(const LieSuperalgebra& g, unsigned n_max);

struct GrowthReport {
  bool conclusive = false;
  unsigned degree = 0;
  /// Range of n on which the (degree+1)-th finite difference vanishes.
  unsigned window_begin = 0;
  unsigned window_end = 0;
  std::vector<BigInt> counts;
};

/// Least k whose (k+1)-th finite difference of `counts` vanishes on a tail
/// of at least two points reaching the end of the sequence.
GrowthReport growth_from_counts(std::vector<BigInt> counts);

/// Polynomial growth degree of dim F_n U(g) (or of H(g) when `bosonized`,
/// whose counts are doubled). Requires n_max >= dim g + 2.
GrowthReport growth_degree(const LieSuperalgebra& g, unsigned n_max, bool bosonized = false);

} // namespace superenv
