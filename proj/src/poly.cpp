#include "superenv/poly.hpp"

#include <numeric>
#include <utility>

#include "superenv/error.hpp"
#include "term_text.hpp"

namespace superenv {

unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = total_degree(a);
  unsigned db = total_degree(b);
  if (da != db) {
    return da > db;
  }
  return a > b;
}

PolyQ::PolyQ(std::vector<std::string> variables) : variables_(std::move(variables)) {}

PolyQ PolyQ::constant(std::vector<std::string> variables, const Rational& c) {
  PolyQ p(std::move(variables));
  p.add_term(Exponents(p.variables_.size(), 0), c);
  return p;
}

PolyQ PolyQ::variable(std::vector<std::string> variables, std::size_t index) {
  PolyQ p(std::move(variables));
  if (index >= p.variables_.size()) {
    throw DomainError("variable index out of range");
  }
  Exponents e(p.variables_.size(), 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

PolyQ PolyQ::monomial(std::vector<std::string> variables, Exponents exps, const Rational& c) {
  PolyQ p(std::move(variables));
  p.add_term(exps, c);
  return p;
}

int PolyQ::degree() const {
  if (terms_.empty()) {
    return -1;
  }
  return static_cast<int>(total_degree(terms_.begin()->first));
}

Rational PolyQ::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PolyQ::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != variables_.size()) {
    throw DomainError("exponent vector length does not match variable count");
  }
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

std::string PolyQ::str() const {
  std::vector<detail::TextTerm> parts;
  parts.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    parts.push_back({c, detail::power_product(variables_, e)});
  }
  return detail::join_terms(parts);
}

namespace {

void require_same_variables(const PolyQ& a, const PolyQ& b) {
  if (a.variables() != b.variables()) {
    throw DomainError("polynomial variable lists differ");
  }
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] + b[i];
  }
  return out;
}

} // namespace

PolyQ poly_add(const PolyQ& a, const PolyQ& b) {
  require_same_variables(a, b);
  PolyQ out = a;
  for (const auto& [e, c] : b.terms()) {
    out.add_term(e, c);
  }
  return out;
}

PolyQ poly_sub(const PolyQ& a, const PolyQ& b) {
  require_same_variables(a, b);
  PolyQ out = a;
  for (const auto& [e, c] : b.terms()) {
    out.add_term(e, -c);
  }
  return out;
}

PolyQ poly_neg(const PolyQ& a) {
  return poly_scale(a, Rational(-1));
}

PolyQ poly_scale(const PolyQ& a, const Rational& c) {
  PolyQ out(a.variables());
  for (const auto& [e, coeff] : a.terms()) {
    out.add_term(e, coeff * c);
  }
  return out;
}

PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
  require_same_variables(a, b);
  PolyQ out(a.variables());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      out.add_term(add_exponents(ea, eb), ca * cb);
    }
  }
  return out;
}

PolyQ poly_divide_exact(const PolyQ& a, const PolyQ& b) {
  require_same_variables(a, b);
  if (b.is_zero()) {
    throw DomainError("polynomial division by zero");
  }
  const auto& [lead_exp, lead_coeff] = *b.terms().begin();
  PolyQ quotient(a.variables());
  PolyQ remainder = a;
  while (!remainder.is_zero()) {
    const auto& [r_exp, r_coeff] = *remainder.terms().begin();
    Exponents shift(r_exp.size());
    for (std::size_t i = 0; i < r_exp.size(); ++i) {
      if (r_exp[i] < lead_exp[i]) {
        throw DomainError("polynomial division is not exact");
      }
      shift[i] = r_exp[i] - lead_exp[i];
    }
    PolyQ step = PolyQ::monomial(a.variables(), shift, r_coeff / lead_coeff);
    quotient = poly_add(quotient, step);
    remainder = poly_sub(remainder, poly_mul(step, b));
  }
  return quotient;
}

PolyQ poly_substitute(const PolyQ& p, std::size_t index, const PolyQ& replacement) {
  require_same_variables(p, replacement);
  if (index >= p.variables().size()) {
    throw DomainError("variable index out of range");
  }
  PolyQ out(p.variables());
  // powers[k] = replacement^k, grown on demand
  std::vector<PolyQ> powers{PolyQ::constant(p.variables(), Rational(1))};
  for (const auto& [e, c] : p.terms()) {
    while (powers.size() <= e[index]) {
      powers.push_back(poly_mul(powers.back(), replacement));
    }
    Exponents rest = e;
    rest[index] = 0;
    out = poly_add(out, poly_mul(PolyQ::monomial(p.variables(), rest, c), powers[e[index]]));
  }
  return out;
}

PolyQ poly_det(const std::vector<std::vector<PolyQ>>& rows,
               const std::vector<std::string>& variables) {
  const std::size_t n = rows.size();
  for (const auto& row : rows) {
    if (row.size() != n) {
      throw DomainError("determinant of a non-square matrix");
    }
    for (const auto& entry : row) {
      if (entry.variables() != variables) {
        throw DomainError("matrix entries use different variable lists");
      }
    }
  }
  if (n == 0) {
    return PolyQ::constant(variables, Rational(1));
  }

  auto m = rows;
  bool negate = false;
  PolyQ previous = PolyQ::constant(variables, Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) {
        ++swap_row;
      }
      if (swap_row == n) {
        return PolyQ(variables);
      }
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        PolyQ cross = poly_sub(poly_mul(m[k][k], m[i][j]), poly_mul(m[i][k], m[k][j]));
        m[i][j] = poly_divide_exact(cross, previous);
      }
      m[i][k] = PolyQ(variables);
    }
    previous = m[k][k];
  }
  PolyQ det = m[n - 1][n - 1];
  return negate ? poly_neg(det) : det;
}

} // namespace superenv
