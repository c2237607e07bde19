#include "superenv/centers.hpp"

#include <map>
#include <set>
#include <utility>

#include "superenv/error.hpp"

namespace superenv {

const char* to_string(Space s) {
  switch (s) {
    case Space::Center: return "center";
    case Space::Anticenter: return "anticenter";
    case Space::HCenter: return "hcenter";
  }
  return "unknown";
}

namespace {

using MonomialIndex = std::map<PbwMonomial, std::size_t, PbwOrder>;

MonomialIndex index_monomials(const std::vector<PbwMonomial>& monomials) {
  MonomialIndex out;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    out.emplace(monomials[i], i);
  }
  return out;
}

// Kernel of the map sending column j to the list of constraint images
// images(j); every image must vanish. Rows are (constraint, monomial) pairs.
template <class ImageFn>
std::vector<QVector> joint_kernel(std::size_t columns, ImageFn images) {
  struct RowKeyLess {
    bool operator()(const std::pair<std::size_t, PbwMonomial>& a,
                    const std::pair<std::size_t, PbwMonomial>& b) const {
      if (a.first != b.first) {
        return a.first < b.first;
      }
      return PbwOrder{}(a.second, b.second);
    }
  };
  std::map<std::pair<std::size_t, PbwMonomial>, std::size_t, RowKeyLess> rows;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> entries(columns);
  for (std::size_t j = 0; j < columns; ++j) {
    std::vector<UElement> image = images(j);
    for (std::size_t c = 0; c < image.size(); ++c) {
      for (const auto& [m, coeff] : image[c].terms()) {
        auto [it, inserted] = rows.try_emplace({c, m}, rows.size());
        entries[j].emplace_back(it->second, coeff);
      }
    }
  }
  QMatrix system(rows.size(), columns);
  for (std::size_t j = 0; j < columns; ++j) {
    for (const auto& [r, coeff] : entries[j]) {
      system(r, j) = coeff;
    }
  }
  return kernel(system);
}

UElement combine(const AlgebraPtr& g, const std::vector<PbwMonomial>& monomials, const QVector& v,
                 std::size_t offset = 0) {
  UElement out(g);
  for (std::size_t j = 0; j < monomials.size(); ++j) {
    out.add_term(monomials[j], v[offset + j]);
  }
  return out;
}

std::vector<UElement> generators_of(const AlgebraPtr& g) {
  std::vector<UElement> out;
  for (std::size_t i = 0; i < g->dimension(); ++i) {
    out.push_back(UElement::generator(g, i));
  }
  return out;
}

} // namespace

UBasisReport center_basis(const AlgebraPtr& g, unsigned d) {
  const auto monomials = pbw_basis(*g, d);
  const auto gens = generators_of(g);
  auto kernel_vectors = joint_kernel(monomials.size(), [&](std::size_t j) {
    const UElement z = UElement::monomial(g, monomials[j]);
    std::vector<UElement> image;
    for (const auto& b : gens) {
      image.push_back(z * b - b * z);
    }
    return image;
  });
  UBasisReport report{Space::Center, d, {}};
  for (const auto& v : kernel_vectors) {
    report.basis.push_back(combine(g, monomials, v));
  }
  return report;
}

UBasisReport anticenter_basis(const AlgebraPtr& g, unsigned d) {
  const auto monomials = pbw_basis(*g, d);
  const auto gens = generators_of(g);
  std::vector<QVector> solutions;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    std::vector<std::size_t> columns;
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      if (parity(*g, monomials[j]) == p) {
        columns.push_back(j);
      }
    }
    auto part = joint_kernel(columns.size(), [&](std::size_t c) {
      const UElement z = UElement::monomial(g, monomials[columns[c]]);
      std::vector<UElement> image;
      for (const auto& b : gens) {
        image.push_back(ad_twist(b, z));
      }
      return image;
    });
    for (const auto& v : part) {
      QVector full(monomials.size());
      for (std::size_t c = 0; c < columns.size(); ++c) {
        full[columns[c]] = v[c];
      }
      solutions.push_back(std::move(full));
    }
  }
  UBasisReport report{Space::Anticenter, d, {}};
  for (const auto& v : span_basis(solutions, monomials.size())) {
    report.basis.push_back(combine(g, monomials, v));
  }
  return report;
}

HBasisReport hcenter_basis(const AlgebraPtr& g, unsigned d) {
  const auto monomials = pbw_basis(*g, d);
  const std::size_t n = monomials.size();
  std::vector<HElement> partners;
  for (const auto& b : generators_of(g)) {
    partners.push_back(HElement::embed(b));
  }
  partners.push_back(HElement::grouplike(g));

  auto kernel_vectors = joint_kernel(2 * n, [&](std::size_t j) {
    const UElement m = UElement::monomial(g, monomials[j % n]);
    const HElement z = j < n ? HElement::embed(m) : HElement(UElement(g), m);
    std::vector<UElement> image;
    for (const auto& b : partners) {
      HElement c = z * b - b * z;
      image.push_back(c.plain());
      image.push_back(c.t_part());
    }
    return image;
  });
  HBasisReport report{Space::HCenter, d, {}};
  for (const auto& v : kernel_vectors) {
    report.basis.emplace_back(combine(g, monomials, v), combine(g, monomials, v, n));
  }
  return report;
}

std::vector<UElement> parity_part(const UBasisReport& r, Parity p) {
  std::vector<UElement> out;
  for (const auto& e : r.basis) {
    if (e.parity() == p) {
      out.push_back(e);
    }
  }
  return out;
}

std::vector<HElement> parity_part(const HBasisReport& r, Parity p) {
  std::vector<HElement> out;
  for (const auto& e : r.basis) {
    if (h_graded_component(e, p) == e) {
      out.push_back(e);
    }
  }
  return out;
}

QVector coordinates(const UElement& e, const std::vector<PbwMonomial>& monomials) {
  const auto index = index_monomials(monomials);
  QVector out(monomials.size());
  for (const auto& [m, c] : e.terms()) {
    auto it = index.find(m);
    if (it == index.end()) {
      throw DomainError("element has a term outside the coordinate monomials");
    }
    out[it->second] = c;
  }
  return out;
}

QVector coordinates(const HElement& e, const std::vector<PbwMonomial>& monomials) {
  QVector out = coordinates(e.plain(), monomials);
  QVector tail = coordinates(e.t_part(), monomials);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

namespace {

template <class Element, class Collect>
std::vector<PbwMonomial> support_of(const std::vector<const std::vector<Element>*>& families, Collect collect) {
  std::set<PbwMonomial, PbwOrder> seen;
  for (const auto* family : families) {
    for (const auto& e : *family) {
      collect(e, seen);
    }
  }
  return {seen.begin(), seen.end()};
}

void collect_u(const UElement& e, std::set<PbwMonomial, PbwOrder>& into) {
  for (const auto& [m, c] : e.terms()) {
    into.insert(m);
  }
}

void collect_h(const HElement& e, std::set<PbwMonomial, PbwOrder>& into) {
  collect_u(e.plain(), into);
  collect_u(e.t_part(), into);
}

template <class Element>
std::vector<QVector> coordinate_rows(const std::vector<Element>& family,
                                     const std::vector<PbwMonomial>& monomials) {
  std::vector<QVector> rows;
  for (const auto& e : family) {
    rows.push_back(coordinates(e, monomials));
  }
  return rows;
}

} // namespace

bool same_span(const std::vector<UElement>& a, const std::vector<UElement>& b) {
  const auto monomials = support_of<UElement>({&a, &b}, collect_u);
  return span_basis(coordinate_rows(a, monomials), monomials.size()) ==
         span_basis(coordinate_rows(b, monomials), monomials.size());
}

bool same_span(const std::vector<HElement>& a, const std::vector<HElement>& b) {
  const auto monomials = support_of<HElement>({&a, &b}, collect_h);
  return span_basis(coordinate_rows(a, monomials), 2 * monomials.size()) ==
         span_basis(coordinate_rows(b, monomials), 2 * monomials.size());
}

bool in_span(const std::vector<UElement>& family, const UElement& e) {
  const std::vector<UElement> single{e};
  const auto monomials = support_of<UElement>({&family, &single}, collect_u);
  return in_span(coordinate_rows(family, monomials), coordinates(e, monomials));
}

// ---------------------------------------------------------------- gl(1,1)

void require_gl11(const LieSuperalgebra& g) {
  static const LieSuperalgebra reference = build_gl(1, 1);
  if (!(g == reference)) {
    throw DomainError("operation is defined for gl(1,1) with basis x, y, u, v only");
  }
}

namespace {

const std::vector<std::string>& xy_variables() {
  static const std::vector<std::string> vars{"x", "y"};
  return vars;
}

} // namespace

PolyQ tau(const PolyQ& p) {
  if (p.variables() != xy_variables()) {
    throw DomainError("tau acts on polynomials in x, y");
  }
  const PolyQ shifted = PolyQ::variable(xy_variables(), 1) - PolyQ::constant(xy_variables(), Rational(1));
  return poly_substitute(p, 1, shifted);
}

UElement anticenter_formula_element(const AlgebraPtr& gl11, const PolyQ& omega) {
  require_gl11(*gl11);
  if (omega.variables() != xy_variables()) {
    throw DomainError("omega must be a polynomial in x, y");
  }
  UElement out(gl11);
  for (const auto& [e, c] : omega.terms()) {
    out.add_term(PbwMonomial({e[0] + 1, e[1], 0, 0}), c);
  }
  const PolyQ uv_part = omega + tau(omega);
  for (const auto& [e, c] : uv_part.terms()) {
    out.add_term(PbwMonomial({e[0], e[1], 1, 1}), -c);
  }
  return out;
}

FormulaMembership anticenter_formula_member(const UElement& alpha) {
  require_gl11(alpha.algebra());
  if (alpha.parity() != Parity::Even) {
    throw DomainError("alpha must be an even element");
  }
  FormulaMembership out{false, PolyQ(xy_variables()), PolyQ(xy_variables()), PolyQ(xy_variables()), std::nullopt};
  for (const auto& [m, c] : alpha.terms()) {
    Exponents xy{m[0], m[1]};
    // even monomials of U(gl(1,1)) are x^a y^b or x^a y^b u v
    (m[2] == 0 ? out.r : out.s).add_term(xy, c);
  }
  const PolyQ x = PolyQ::variable(xy_variables(), 0);
  out.residual = out.r + tau(out.r) + x * out.s;
  out.member = out.residual.is_zero();
  if (out.member) {
    out.omega = poly_divide_exact(out.r, x);
  }
  return out;
}

// ---------------------------------------------------------------- structure

std::vector<IdentityCheck> check_anticenter_properties(const AlgebraPtr& g, unsigned d) {
  const UBasisReport center = center_basis(g, d);
  const UBasisReport anticenter = anticenter_basis(g, d);
  const auto gens = generators_of(g);
  const auto z0 = parity_part(center, Parity::Even);
  const auto z1 = parity_part(center, Parity::Odd);
  const auto a0 = parity_part(anticenter, Parity::Even);
  const auto a1 = parity_part(anticenter, Parity::Odd);
  std::vector<IdentityCheck> checks;

  checks.push_back({"A(g)_1 = Z(g)_1", same_span(a1, z1),
                    "dim A_1 = " + std::to_string(a1.size()) + ", dim Z_1 = " + std::to_string(z1.size())});

  bool module_ok = true;
  for (const auto& z : z0) {
    for (const auto& a : a0) {
      const UElement za = z * a;
      for (const auto& b : gens) {
        module_ok = module_ok && ad_twist(b, za).is_zero();
      }
    }
  }
  checks.push_back({"A(g)_0 is a Z(g)_0-module", module_ok,
                    std::to_string(z0.size() * a0.size()) + " products checked"});

  bool products_central = true;
  std::size_t in_window = 0;
  for (std::size_t i = 0; i < a0.size(); ++i) {
    for (std::size_t j = i; j < a0.size(); ++j) {
      const UElement p = a0[i] * a0[j];
      for (const auto& b : gens) {
        products_central = products_central && (p * b - b * p).is_zero();
      }
      if (p.degree() <= static_cast<int>(d)) {
        ++in_window;
        products_central = products_central && in_span(center.basis, p);
      }
    }
  }
  checks.push_back({"A(g)_0 * A(g)_0 lies in Z(g)_0", products_central,
                    std::to_string(a0.size() * (a0.size() + 1) / 2) + " products, " +
                        std::to_string(in_window) + " matched against the degree-" + std::to_string(d) +
                        " center basis"});

  if (g->odd_dimension() % 2 == 0) {
    checks.push_back({"dim g_1 even implies A(g)_1 = Z(g)_1 = 0", a1.empty() && z1.empty(),
                      "dim A_1 = " + std::to_string(a1.size()) + ", dim Z_1 = " + std::to_string(z1.size())});
  } else {
    checks.push_back({"dim g_1 even implies A(g)_1 = Z(g)_1 = 0", true, "not applicable: dim g_1 is odd"});
  }
  return checks;
}

HCenterDecomposition check_hcenter_decomposition(const AlgebraPtr& g, unsigned d) {
  if (g->odd_dimension() % 2 != 0) {
    throw DomainError("the decomposition check needs dim g_1 even");
  }
  const HBasisReport hcenter = hcenter_basis(g, d);
  const auto z0 = parity_part(center_basis(g, d), Parity::Even);
  const auto a0 = parity_part(anticenter_basis(g, d), Parity::Even);
  std::vector<HElement> expected;
  for (const auto& z : z0) {
    expected.push_back(HElement::embed(z));
  }
  for (const auto& a : a0) {
    expected.emplace_back(UElement(g), a);
  }
  HCenterDecomposition out;
  out.equal = same_span(hcenter.basis, expected);
  out.odd_part_zero = parity_part(hcenter, Parity::Odd).empty();
  out.hcenter_dimension = hcenter.dimension();
  out.center_even_dimension = z0.size();
  out.anticenter_even_dimension = a0.size();
  return out;
}

} // namespace superenv
