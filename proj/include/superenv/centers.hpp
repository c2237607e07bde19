#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superenv/bosonization.hpp"
#include "superenv/linalg.hpp"
#include "superenv/pbw.hpp"
#include "superenv/poly.hpp"
#include "superenv/report.hpp"

namespace superenv {

enum class Space { Center, Anticenter, HCenter };
const char* to_string(Space s);

/// Canonical basis of a degree-truncated subspace: RREF rows with respect to
/// the canonical PBW monomial order (for H, plain coordinates precede t
/// coordinates), each with unit pivot.
template <class Element>
struct BasisReport {
  Space space = Space::Center;
  unsigned degree = 0;
  std::vector<Element> basis;
  std::size_t dimension() const { return basis.size(); }
};

using UBasisReport = BasisReport<UElement>;
using HBasisReport = BasisReport<HElement>;

/// {z in F_d U(g) : z b = b z for every generator b}.
UBasisReport center_basis(const AlgebraPtr& g, unsigned d);

/// {z in F_d U(g) : ad'(b)(z) = 0 for every generator b}, solved separately
/// on each parity component.
UBasisReport anticenter_basis(const AlgebraPtr& g, unsigned d);

/// {z in F_d H(g) : z commutes with every generator and with t}.
HBasisReport hcenter_basis(const AlgebraPtr& g, unsigned d);

/// Elements of the report of the given parity (the subspaces are graded, so
/// every canonical basis vector is homogeneous).
std::vector<UElement> parity_part(const UBasisReport& r, Parity p);
std::vector<HElement> parity_part(const HBasisReport& r, Parity p);

/// Coordinates of `e` along `monomials`; throws if `e` has other terms.
QVector coordinates(const UElement& e, const std::vector<PbwMonomial>& monomials);
QVector coordinates(const HElement& e, const std::vector<PbwMonomial>& monomials);

/// True when the two families span the same subspace.
bool same_span(const std::vector<UElement>& a, const std::vector<UElement>& b);
bool same_span(const std::vector<HElement>& a, const std::vector<HElement>& b);
bool in_span(const std::vector<UElement>& family, const UElement& e);

// ------------------------------------------------ gl(1,1) anticenter formula

/// Throws DomainError unless `g` is gl(1,1) with basis x, y, u, v in that
/// order and the standard brackets.
void require_gl11(const LieSuperalgebra& g);

/// tau(x) = x, tau(y) = y - 1 on k[x,y].
PolyQ tau(const PolyQ& p);

/// x*omega - (omega + tau(omega))*u*v in U(gl(1,1)).
UElement anticenter_formula_element(const AlgebraPtr& gl11, const PolyQ& omega);

struct FormulaMembership {
  bool member = false;
  PolyQ r;          // alpha = r(x,y) + s(x,y) u v
  PolyQ s;
  PolyQ residual;   // r + tau(r) + x s
  std::optional<PolyQ> omega;  // r = x omega, s = -(omega + tau(omega))
};

/// Decides alpha in A(gl(1,1)) through r + tau(r) = -x s. Alpha must be even.
FormulaMembership anticenter_formula_member(const UElement& alpha);

// ------------------------------------------------ structural checks

/// At truncation d: A_1 = Z_1; A_0 is a Z_0-module; products of even
/// anticenter elements are central; when dim g_1 is even, A_1 = Z_1 = 0.
std::vector<IdentityCheck> check_anticenter_properties(const AlgebraPtr& g, unsigned d);

struct HCenterDecomposition {
  bool equal = false;         // hcenter = center_0 + anticenter_0 * t
  bool odd_part_zero = false;
  std::size_t hcenter_dimension = 0;
  std::size_t center_even_dimension = 0;
  std::size_t anticenter_even_dimension = 0;
};

/// Compares hcenter_basis with center_0 (+) anticenter_0 * t as subspaces of
/// F_d H(g). Requires dim g_1 even.
HCenterDecomposition check_hcenter_decomposition(const AlgebraPtr& g, unsigned d);

} // namespace superenv
