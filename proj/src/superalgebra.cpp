#include "superenv/superalgebra.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

#include "superenv/error.hpp"

namespace superenv {

const char* to_string(Parity p) {
  return p == Parity::Even ? "even" : "odd";
}

// ---------------------------------------------------------------- matrices

MatrixElement::MatrixElement(unsigned even_block, unsigned odd_block)
    : m_(even_block), n_(odd_block), entries_((even_block + odd_block) * (even_block + odd_block)) {}

MatrixElement MatrixElement::identity(unsigned even_block, unsigned odd_block) {
  MatrixElement x(even_block, odd_block);
  for (unsigned i = 0; i < x.size(); ++i) {
    x.at(i, i) = Rational(1);
  }
  return x;
}

MatrixElement MatrixElement::unit(unsigned even_block, unsigned odd_block, unsigned i, unsigned j) {
  MatrixElement x(even_block, odd_block);
  x.at(i, j) = Rational(1);
  return x;
}

bool MatrixElement::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_zero(); });
}

namespace {

Parity cell_parity(unsigned m, unsigned i, unsigned j) {
  return ((i < m) == (j < m)) ? Parity::Even : Parity::Odd;
}

void require_same_blocks(const MatrixElement& a, const MatrixElement& b) {
  if (a.even_block() != b.even_block() || a.odd_block() != b.odd_block()) {
    throw DomainError("matrix block sizes differ");
  }
}

} // namespace

std::optional<Parity> MatrixElement::parity() const {
  bool has_even = false;
  bool has_odd = false;
  for (unsigned i = 0; i < size(); ++i) {
    for (unsigned j = 0; j < size(); ++j) {
      if (!at(i, j).is_zero()) {
        (cell_parity(m_, i, j) == Parity::Even ? has_even : has_odd) = true;
      }
    }
  }
  if (has_even && has_odd) {
    return std::nullopt;
  }
  return has_odd ? Parity::Odd : Parity::Even;
}

MatrixElement MatrixElement::component(Parity p) const {
  MatrixElement out(m_, n_);
  for (unsigned i = 0; i < size(); ++i) {
    for (unsigned j = 0; j < size(); ++j) {
      if (cell_parity(m_, i, j) == p) {
        out.at(i, j) = at(i, j);
      }
    }
  }
  return out;
}

MatrixElement operator+(const MatrixElement& a, const MatrixElement& b) {
  require_same_blocks(a, b);
  MatrixElement out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) {
    out.entries_[k] += b.entries_[k];
  }
  return out;
}

MatrixElement operator-(const MatrixElement& a, const MatrixElement& b) {
  return a + Rational(-1) * b;
}

MatrixElement operator*(const MatrixElement& a, const MatrixElement& b) {
  require_same_blocks(a, b);
  MatrixElement out(a.m_, a.n_);
  const unsigned s = a.size();
  for (unsigned i = 0; i < s; ++i) {
    for (unsigned k = 0; k < s; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) {
        continue;
      }
      for (unsigned j = 0; j < s; ++j) {
        if (!b.at(k, j).is_zero()) {
          out.at(i, j) += aik * b.at(k, j);
        }
      }
    }
  }
  return out;
}

MatrixElement operator*(const Rational& c, const MatrixElement& a) {
  MatrixElement out = a;
  for (auto& e : out.entries_) {
    e *= c;
  }
  return out;
}

Rational supertrace(const MatrixElement& x) {
  Rational out;
  for (unsigned i = 0; i < x.size(); ++i) {
    if (i < x.even_block()) {
      out += x.at(i, i);
    } else {
      out -= x.at(i, i);
    }
  }
  return out;
}

MatrixElement supercommutator(const MatrixElement& a, const MatrixElement& b) {
  require_same_blocks(a, b);
  MatrixElement out(a.even_block(), a.odd_block());
  for (Parity pa : {Parity::Even, Parity::Odd}) {
    MatrixElement ca = a.component(pa);
    if (ca.is_zero()) {
      continue;
    }
    for (Parity pb : {Parity::Even, Parity::Odd}) {
      MatrixElement cb = b.component(pb);
      if (cb.is_zero()) {
        continue;
      }
      out = out + (ca * cb) - Rational(koszul_sign(pa, pb)) * (cb * ca);
    }
  }
  return out;
}

// ---------------------------------------------------------------- algebra

LieSuperalgebra::LieSuperalgebra(std::vector<Generator> generators, std::vector<Rational> constants,
                                 std::vector<MatrixElement> realization)
    : generators_(std::move(generators)), constants_(std::move(constants)),
      realization_(std::move(realization)) {
  const std::size_t n = generators_.size();
  if (constants_.size() != n * n * n) {
    throw DomainError("structure-constant table has the wrong size");
  }
  if (!realization_.empty() && realization_.size() != n) {
    throw DomainError("matrix realization does not match the basis");
  }
  sparse_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = constant(i, j, k);
        if (!c.is_zero()) {
          sparse_[i * n + j].emplace_back(k, c);
        }
      }
    }
  }
}

std::size_t LieSuperalgebra::even_dimension() const {
  return indices_of(Parity::Even).size();
}

std::size_t LieSuperalgebra::odd_dimension() const {
  return indices_of(Parity::Odd).size();
}

std::optional<std::size_t> LieSuperalgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) {
      return i;
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> LieSuperalgebra::indices_of(Parity p) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].parity == p) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<std::string> LieSuperalgebra::names() const {
  std::vector<std::string> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) {
    out.push_back(g.name);
  }
  return out;
}

// ---------------------------------------------------------------- validation

const char* to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::Grading: return "grading";
    case Violation::Kind::Antisymmetry: return "antisymmetry";
    case Violation::Kind::Jacobi: return "jacobi";
  }
  return "unknown";
}

namespace {

using Accumulator = std::map<std::size_t, Rational>;

// acc += scale * [b_a, [b_b, b_c]]
void add_double_bracket(const LieSuperalgebra& g, std::size_t a, std::size_t b, std::size_t c,
                        int scale, Accumulator& acc) {
  for (const auto& [l, inner] : g.bracket_terms(b, c)) {
    for (const auto& [k, outer] : g.bracket_terms(a, l)) {
      acc[k] += Rational(scale) * inner * outer;
    }
  }
}

} // namespace

ValidationReport validate(const LieSuperalgebra& g) {
  ValidationReport report;
  const std::size_t n = g.dimension();
  const auto& gens = g.generators();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : g.bracket_terms(i, j)) {
        if (g.parity(k) != g.parity(i) + g.parity(j)) {
          report.violations.push_back(
              {Violation::Kind::Grading, {i, j, k},
               "[" + gens[i].name + "," + gens[j].name + "] has a component along " + gens[k].name +
                   " of the wrong parity"});
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const int s = koszul_sign(g.parity(i), g.parity(j));
      for (std::size_t k = 0; k < n; ++k) {
        if (g.constant(j, i, k) != Rational(-s) * g.constant(i, j, k)) {
          report.violations.push_back(
              {Violation::Kind::Antisymmetry, {i, j},
               "[" + gens[j].name + "," + gens[i].name + "] != " + (s > 0 ? "-" : "") + "[" +
                   gens[i].name + "," + gens[j].name + "]"});
          break;
        }
      }
    }
  }

  std::set<std::array<std::size_t, 3>> jacobi_failures;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        Accumulator acc;
        const Parity pa = g.parity(a), pb = g.parity(b), pc = g.parity(c);
        add_double_bracket(g, a, b, c, koszul_sign(pa, pc), acc);
        add_double_bracket(g, b, c, a, koszul_sign(pb, pa), acc);
        add_double_bracket(g, c, a, b, koszul_sign(pc, pb), acc);
        bool zero = std::all_of(acc.begin(), acc.end(), [](const auto& kv) { return kv.second.is_zero(); });
        if (!zero) {
          std::array<std::size_t, 3> key{a, b, c};
          std::sort(key.begin(), key.end());
          jacobi_failures.insert(key);
        }
      }
    }
  }
  for (const auto& key : jacobi_failures) {
    report.violations.push_back({Violation::Kind::Jacobi,
                                 {key[0], key[1], key[2]},
                                 "super Jacobi identity fails on (" + gens[key[0]].name + "," +
                                     gens[key[1]].name + "," + gens[key[2]].name + ")"});
  }
  return report;
}

void require_valid(const LieSuperalgebra& g) {
  ValidationReport report = validate(g);
  if (report.ok()) {
    return;
  }
  std::ostringstream msg;
  msg << "invalid structure table:";
  for (const auto& v : report.violations) {
    msg << "\n  " << to_string(v.kind) << ": " << v.description;
  }
  throw DomainError(msg.str());
}

QVector bracket(const LieSuperalgebra& g, const QVector& a, const QVector& b) {
  const std::size_t n = g.dimension();
  if (a.size() != n || b.size() != n) {
    throw DomainError("coordinate vector length does not match the algebra dimension");
  }
  QVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) {
        continue;
      }
      Rational ab = a[i] * b[j];
      for (const auto& [k, c] : g.bracket_terms(i, j)) {
        out[k] += ab * c;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- builders

BracketTableBuilder::BracketTableBuilder(std::vector<Generator> generators)
    : generators_(std::move(generators)) {
  const std::size_t n = generators_.size();
  constants_.resize(n * n * n);
  assigned_.resize(n * n, false);
}

void BracketTableBuilder::set(std::size_t i, std::size_t j, const QVector& value) {
  const std::size_t n = generators_.size();
  if (i >= n || j >= n || value.size() != n) {
    throw DomainError("bracket entry out of range");
  }
  const int s = koszul_sign(generators_[i].parity, generators_[j].parity);
  QVector mirrored(n);
  for (std::size_t k = 0; k < n; ++k) {
    mirrored[k] = Rational(-s) * value[k];
  }
  auto assign = [&](std::size_t a, std::size_t b, const QVector& v) {
    const std::size_t base = (a * n + b) * n;
    if (assigned_[a * n + b]) {
      for (std::size_t k = 0; k < n; ++k) {
        if (constants_[base + k] != v[k]) {
          throw DomainError("contradictory entries for [" + generators_[a].name + "," +
                            generators_[b].name + "]");
        }
      }
      return;
    }
    for (std::size_t k = 0; k < n; ++k) {
      constants_[base + k] = v[k];
    }
    assigned_[a * n + b] = true;
  };
  assign(i, j, value);
  assign(j, i, mirrored);
}

LieSuperalgebra BracketTableBuilder::build() const {
  return LieSuperalgebra(generators_, constants_);
}

LieSuperalgebra from_matrices(std::vector<std::string> names, std::vector<MatrixElement> basis) {
  const std::size_t dim = basis.size();
  if (names.size() != dim) {
    throw DomainError("basis names and matrices differ in number");
  }
  if (dim == 0) {
    return LieSuperalgebra({}, {});
  }
  const unsigned m = basis.front().even_block();
  const unsigned n = basis.front().odd_block();
  const std::size_t cells = static_cast<std::size_t>(m + n) * (m + n);

  std::vector<Generator> gens;
  for (std::size_t i = 0; i < dim; ++i) {
    auto p = basis[i].parity();
    if (!p || basis[i].is_zero()) {
      throw DomainError("basis matrix " + names[i] + " is not a nonzero homogeneous element");
    }
    gens.push_back({names[i], *p});
  }

  // Row-reduce [B | I] where B has the flattened basis matrices as columns;
  // the first `dim` rows of the right block form a left inverse of B.
  QMatrix aug(cells, dim + cells);
  for (std::size_t c = 0; c < cells; ++c) {
    for (std::size_t k = 0; k < dim; ++k) {
      aug(c, k) = basis[k].entries()[c];
    }
    aug(c, dim + c) = Rational(1);
  }
  RowEchelon e = rref(aug);
  for (std::size_t k = 0; k < dim; ++k) {
    if (k >= e.rank() || e.pivot_columns[k] != k) {
      throw DomainError("basis matrices are linearly dependent");
    }
  }

  std::vector<Rational> constants(dim * dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      MatrixElement br = supercommutator(basis[i], basis[j]);
      std::vector<std::pair<std::size_t, Rational>> cells_nz;
      for (std::size_t c = 0; c < cells; ++c) {
        if (!br.entries()[c].is_zero()) {
          cells_nz.emplace_back(c, br.entries()[c]);
        }
      }
      MatrixElement rebuilt(m, n);
      for (std::size_t k = 0; k < dim; ++k) {
        Rational coord;
        for (const auto& [c, value] : cells_nz) {
          const Rational& l = e.reduced(k, dim + c);
          if (!l.is_zero()) {
            coord += l * value;
          }
        }
        if (!coord.is_zero()) {
          constants[(i * dim + j) * dim + k] = coord;
          rebuilt = rebuilt + coord * basis[k];
        }
      }
      if (!(rebuilt == br)) {
        throw DomainError("basis is not closed under the supercommutator: [" + names[i] + "," +
                          names[j] + "]");
      }
    }
  }
  return LieSuperalgebra(std::move(gens), std::move(constants), std::move(basis));
}

namespace {

std::string unit_name(unsigned size, unsigned i, unsigned j) {
  if (size <= 9) {
    return "e" + std::to_string(i + 1) + std::to_string(j + 1);
  }
  return "e" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

void require_positive_blocks(unsigned m, unsigned n) {
  if (m == 0 || n == 0) {
    throw DomainError("gl(m,n) and sl(m,n) need m, n >= 1");
  }
}

// Off-diagonal (for even) or crossing (for odd) matrix units, row-major.
void append_units(unsigned m, unsigned n, Parity p, bool skip_diagonal,
                  std::vector<std::string>& names, std::vector<MatrixElement>& basis) {
  const unsigned s = m + n;
  for (unsigned i = 0; i < s; ++i) {
    for (unsigned j = 0; j < s; ++j) {
      if (cell_parity(m, i, j) != p || (skip_diagonal && i == j)) {
        continue;
      }
      names.push_back(unit_name(s, i, j));
      basis.push_back(MatrixElement::unit(m, n, i, j));
    }
  }
}

} // namespace

LieSuperalgebra build_gl(unsigned m, unsigned n) {
  require_positive_blocks(m, n);
  if (m == 1 && n == 1) {
    MatrixElement x = MatrixElement::identity(1, 1);
    return from_matrices({"x", "y", "u", "v"},
                         {x, MatrixElement::unit(1, 1, 0, 0), MatrixElement::unit(1, 1, 0, 1),
                          MatrixElement::unit(1, 1, 1, 0)});
  }
  std::vector<std::string> names;
  std::vector<MatrixElement> basis;
  append_units(m, n, Parity::Even, false, names, basis);
  append_units(m, n, Parity::Odd, false, names, basis);
  return from_matrices(std::move(names), std::move(basis));
}

LieSuperalgebra build_sl(unsigned m, unsigned n) {
  require_positive_blocks(m, n);
  if (m == 1 && n == 1) {
    return from_matrices({"x", "u", "v"},
                         {MatrixElement::identity(1, 1), MatrixElement::unit(1, 1, 0, 1),
                          MatrixElement::unit(1, 1, 1, 0)});
  }
  const unsigned s = m + n;
  auto str_sign = [m](unsigned k) { return k < m ? 1 : -1; };
  std::vector<std::string> names;
  std::vector<MatrixElement> basis;
  for (unsigned k = 0; k + 1 < s; ++k) {
    MatrixElement h = MatrixElement::unit(m, n, k, k);
    h.at(k + 1, k + 1) = Rational(-str_sign(k) * str_sign(k + 1));
    names.push_back("h" + std::to_string(k + 1));
    basis.push_back(std::move(h));
  }
  append_units(m, n, Parity::Even, true, names, basis);
  append_units(m, n, Parity::Odd, false, names, basis);
  return from_matrices(std::move(names), std::move(basis));
}

LieSuperalgebra build_abelian(unsigned even_count, unsigned odd_count) {
  std::vector<Generator> gens;
  for (unsigned i = 0; i < even_count; ++i) {
    gens.push_back({"a" + std::to_string(i + 1), Parity::Even});
  }
  for (unsigned i = 0; i < odd_count; ++i) {
    gens.push_back({"b" + std::to_string(i + 1), Parity::Odd});
  }
  const std::size_t d = gens.size();
  return LieSuperalgebra(std::move(gens), std::vector<Rational>(d * d * d));
}

LieSuperalgebra direct_sum(const std::vector<LieSuperalgebra>& summands) {
  std::map<std::string, int> seen;
  for (const auto& g : summands) {
    for (const auto& gen : g.generators()) {
      ++seen[gen.name];
    }
  }
  const bool rename =
      std::any_of(seen.begin(), seen.end(), [](const auto& kv) { return kv.second > 1; });

  // position of (summand, local index) in the combined basis
  std::vector<std::vector<std::size_t>> where(summands.size());
  std::vector<Generator> gens;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    for (std::size_t s = 0; s < summands.size(); ++s) {
      where[s].resize(summands[s].dimension());
      for (std::size_t i = 0; i < summands[s].dimension(); ++i) {
        const Generator& gen = summands[s].generator(i);
        if (gen.parity != p) {
          continue;
        }
        where[s][i] = gens.size();
        gens.push_back({rename ? gen.name + "_" + std::to_string(s + 1) : gen.name, gen.parity});
      }
    }
  }
  const std::size_t d = gens.size();
  std::vector<Rational> constants(d * d * d);
  for (std::size_t s = 0; s < summands.size(); ++s) {
    const auto& g = summands[s];
    for (std::size_t i = 0; i < g.dimension(); ++i) {
      for (std::size_t j = 0; j < g.dimension(); ++j) {
        for (const auto& [k, c] : g.bracket_terms(i, j)) {
          constants[(where[s][i] * d + where[s][j]) * d + where[s][k]] = c;
        }
      }
    }
  }
  return LieSuperalgebra(std::move(gens), std::move(constants));
}

// ---------------------------------------------------------------- invariants

PolyQ dg(const LieSuperalgebra& g) {
  require_valid(g);
  const auto even = g.indices_of(Parity::Even);
  const auto odd = g.indices_of(Parity::Odd);
  std::vector<std::string> vars;
  std::vector<std::size_t> slot(g.dimension(), 0);
  for (std::size_t e = 0; e < even.size(); ++e) {
    vars.push_back(g.generator(even[e]).name);
    slot[even[e]] = e;
  }
  std::vector<std::vector<PolyQ>> rows(odd.size(), std::vector<PolyQ>(odd.size(), PolyQ(vars)));
  for (std::size_t i = 0; i < odd.size(); ++i) {
    for (std::size_t j = 0; j < odd.size(); ++j) {
      for (const auto& [k, c] : g.bracket_terms(odd[i], odd[j])) {
        Exponents exps(vars.size(), 0);
        exps[slot[k]] = 1;
        rows[i][j].add_term(exps, c);
      }
    }
  }
  return poly_det(rows, vars);
}

PiVerdict is_pi(const LieSuperalgebra& g) {
  bool abelian_even = true;
  for (std::size_t i : g.indices_of(Parity::Even)) {
    for (std::size_t j : g.indices_of(Parity::Even)) {
      if (!g.bracket_terms(i, j).empty()) {
        abelian_even = false;
      }
    }
  }
  return {abelian_even, abelian_even};
}

} // namespace superenv
