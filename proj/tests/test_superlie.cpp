#include <doctest.h>

#include "superenv/error.hpp"
#include "support.hpp"

using namespace superenv;
using testing::Rng;

namespace {

QVector unit_vector(std::size_t n, std::size_t i) {
  QVector v(n);
  v[i] = Rational(1);
  return v;
}

LieSuperalgebra raw_table(std::vector<Generator> gens,
                          const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, int>>& entries) {
  const std::size_t n = gens.size();
  std::vector<Rational> c(n * n * n);
  for (auto [i, j, k, v] : entries) {
    c[(i * n + j) * n + k] = Rational(v);
  }
  return LieSuperalgebra(std::move(gens), std::move(c));
}

bool has_kind(const ValidationReport& r, Violation::Kind k) {
  for (const auto& v : r.violations) {
    if (v.kind == k) {
      return true;
    }
  }
  return false;
}

MatrixElement random_matrix(Rng& rng, unsigned m, unsigned n) {
  MatrixElement a(m, n);
  for (unsigned i = 0; i < m + n; ++i) {
    for (unsigned j = 0; j < m + n; ++j) {
      a.at(i, j) = rng.rational(3);
    }
  }
  return a;
}

// Structure constants recovered from the realization must reproduce the
// supercommutator of the images.
void check_realization(const LieSuperalgebra& g) {
  const auto& r = g.realization();
  REQUIRE(r.size() == g.dimension());
  for (std::size_t i = 0; i < g.dimension(); ++i) {
    CHECK(r[i].parity() == g.parity(i));
    for (std::size_t j = 0; j < g.dimension(); ++j) {
      MatrixElement expected = supercommutator(r[i], r[j]);
      MatrixElement from_table(r[0].even_block(), r[0].odd_block());
      for (const auto& [k, c] : g.bracket_terms(i, j)) {
        from_table = from_table + c * r[k];
      }
      REQUIRE(expected == from_table);
    }
  }
}

} // namespace

TEST_CASE("gl(1,1) basis and table") {
  const LieSuperalgebra g = build_gl(1, 1);
  CHECK(g.names() == std::vector<std::string>{"x", "y", "u", "v"});
  CHECK(g.even_dimension() == 2);
  CHECK(g.odd_dimension() == 2);
  CHECK(validate(g).ok());
  const auto x = unit_vector(4, 0), y = unit_vector(4, 1), u = unit_vector(4, 2), v = unit_vector(4, 3);
  CHECK(bracket(g, y, u) == u);
  CHECK(bracket(g, x, u) == QVector(4));
  CHECK(bracket(g, x, v) == QVector(4));
  CHECK(bracket(g, u, v) == x);
  CHECK(bracket(g, y, y) == QVector(4));
  QVector minus_v(4);
  minus_v[3] = Rational(-1);
  CHECK(bracket(g, y, v) == minus_v);
  CHECK_THROWS_AS(bracket(g, x, QVector(3)), DomainError);
  check_realization(g);
  CHECK(g.realization()[0] == MatrixElement::identity(1, 1));
  CHECK(g.realization()[1] == MatrixElement::unit(1, 1, 0, 0));
}

TEST_CASE("gl(1,1) agrees with its hand-written definition file") {
  const LieSuperalgebra from_file = parse_algebra_file(R"(# gl(1,1)
generator x even
generator y even
generator u odd
generator v odd
bracket [u,v] = x
bracket [y,u] = u
bracket [y,v] = -v
)");
  CHECK(from_file == build_gl(1, 1));
}

TEST_CASE("validation reports violations as data") {
  const std::vector<Generator> xy{{"x", Parity::Even}, {"y", Parity::Even}};
  const auto bad = validate(raw_table(xy, {{0, 1, 0, 1}, {1, 0, 0, 1}}));
  REQUIRE(has_kind(bad, Violation::Kind::Antisymmetry));
  CHECK(bad.violations.front().indices == std::vector<std::size_t>{0, 1});

  const std::vector<Generator> xu{{"x", Parity::Even}, {"y", Parity::Even}, {"u", Parity::Odd}};
  CHECK(has_kind(validate(raw_table(xu, {{0, 2, 1, 1}, {2, 0, 1, -1}})), Violation::Kind::Grading));

  const std::vector<Generator> abc{{"a", Parity::Even}, {"b", Parity::Even}, {"c", Parity::Even}};
  const auto jac = validate(raw_table(abc, {{0, 1, 0, 1}, {1, 0, 0, -1}, {0, 2, 1, 1}, {2, 0, 1, -1}}));
  CHECK(has_kind(jac, Violation::Kind::Jacobi));
  CHECK_FALSE(has_kind(jac, Violation::Kind::Antisymmetry));
  CHECK_THROWS_AS(require_valid(raw_table(abc, {{0, 1, 0, 1}, {1, 0, 0, -1}, {0, 2, 1, 1}, {2, 0, 1, -1}})),
                  DomainError);

  CHECK(validate(build_abelian(2, 3)).ok());
}

TEST_CASE("builder completes by super antisymmetry and rejects contradictions") {
  BracketTableBuilder b({{"y", Parity::Even}, {"u", Parity::Odd}, {"v", Parity::Odd}});
  QVector u(3);
  u[1] = Rational(1);
  b.set(0, 1, u);
  QVector minus_u(3);
  minus_u[1] = Rational(-1);
  CHECK_NOTHROW(b.set(1, 0, minus_u));
  CHECK_THROWS_AS(b.set(1, 0, u), DomainError);
  const LieSuperalgebra g = b.build();
  CHECK(g.constant(1, 0, 1) == Rational(-1));
}

TEST_CASE("builtin gl and sl tables validate and match their realizations") {
  for (unsigned m = 1; m <= 3; ++m) {
    for (unsigned n = 1; n <= 3; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const LieSuperalgebra g = build_gl(m, n);
      CHECK(g.dimension() == (m + n) * (m + n));
      CHECK(g.odd_dimension() == 2 * m * n);
      CHECK(validate(g).ok());
      const LieSuperalgebra s = build_sl(m, n);
      CHECK(s.dimension() == (m + n) * (m + n) - 1);
      CHECK(validate(s).ok());
      for (const auto& b : s.realization()) {
        CHECK(supertrace(b).is_zero());
      }
      if (m + n <= 4) {
        check_realization(g);
        check_realization(s);
      }
    }
  }
  CHECK(build_gl(2, 1).dimension() == 9);
  CHECK(build_sl(1, 1).names() == std::vector<std::string>{"x", "u", "v"});
  CHECK(build_sl(2, 1).dimension() == 8);
}

TEST_CASE("supertrace") {
  CHECK(supertrace(MatrixElement::identity(1, 1)).is_zero());
  CHECK(supertrace(MatrixElement::unit(1, 1, 0, 0)) == Rational(1));
  CHECK(supertrace(MatrixElement::unit(1, 1, 0, 1)).is_zero());
  CHECK(supertrace(MatrixElement::identity(2, 1)) == Rational(1));
  Rng rng(10);
  for (int k = 0; k < 200; ++k) {
    const unsigned m = static_cast<unsigned>(rng.between(1, 3));
    const unsigned n = static_cast<unsigned>(rng.between(1, 3));
    CHECK(supertrace(supercommutator(random_matrix(rng, m, n), random_matrix(rng, m, n))).is_zero());
  }
}

TEST_CASE("bracket is bilinear") {
  Rng rng(11);
  const LieSuperalgebra g = build_gl(2, 1);
  auto vec = [&] {
    QVector v(g.dimension());
    for (auto& c : v) {
      c = rng.rational(3);
    }
    return v;
  };
  for (int k = 0; k < 100; ++k) {
    const QVector a = vec(), b = vec(), c = vec();
    const Rational al = rng.rational(), be = rng.rational();
    QVector lin(g.dimension());
    for (std::size_t i = 0; i < lin.size(); ++i) {
      lin[i] = al * a[i] + be * b[i];
    }
    const QVector lhs = bracket(g, lin, c);
    const QVector ac = bracket(g, a, c), bc = bracket(g, b, c);
    for (std::size_t i = 0; i < lin.size(); ++i) {
      REQUIRE(lhs[i] == al * ac[i] + be * bc[i]);
    }
  }
}

TEST_CASE("abelian and direct sums") {
  const LieSuperalgebra a = build_abelian(2, 1);
  CHECK(a.names() == std::vector<std::string>{"a1", "a2", "b1"});
  const LieSuperalgebra s = direct_sum({build_gl(1, 1), build_abelian(1, 1)});
  CHECK(s.names() == std::vector<std::string>{"x", "y", "a1", "u", "v", "b1"});
  CHECK(validate(s).ok());
  const LieSuperalgebra twice = direct_sum({build_gl(1, 1), build_gl(1, 1)});
  CHECK(twice.names() == std::vector<std::string>{"x_1", "y_1", "x_2", "y_2", "u_1", "v_1", "u_2", "v_2"});
  CHECK(validate(twice).ok());
  CHECK(parse_builtin("gl(1,1) (+) abelian(1|1)") == s);
  CHECK(parse_builtin("sl(2,1)") == build_sl(2, 1));
  CHECK_THROWS(parse_builtin("gl(0,1)"));
  CHECK_THROWS(parse_builtin("so(3)"));
  CHECK_THROWS(parse_builtin("gl(1,1) (+)"));
}

TEST_CASE("D(g)") {
  CHECK(dg(build_gl(1, 1)).str() == "-x^2");
  for (auto [m, n] : {std::pair{1u, 2u}, std::pair{2u, 1u}, std::pair{2u, 2u}}) {
    CHECK_FALSE(dg(build_gl(m, n)).is_zero());
  }
  CHECK(dg(build_abelian(1, 1)).is_zero());
  CHECK(dg(build_abelian(0, 1)).is_zero());
  CHECK(dg(build_abelian(2, 0)).str() == "1");
  // D is invariant up to sign under reordering the odd basis
  const LieSuperalgebra swapped = parse_algebra_file(
      "generator x even\ngenerator y even\ngenerator v odd\ngenerator u odd\n"
      "bracket [u,v] = x\nbracket [y,u] = u\nbracket [y,v] = -v\n");
  CHECK(dg(swapped) == dg(build_gl(1, 1)));
}

TEST_CASE("PI verdicts") {
  CHECK(is_pi(build_gl(1, 1)).enveloping);
  CHECK(is_pi(build_gl(1, 1)).bosonization);
  CHECK_FALSE(is_pi(build_gl(2, 1)).enveloping);
  CHECK_FALSE(is_pi(build_gl(2, 1)).bosonization);
  CHECK(is_pi(build_abelian(3, 2)).enveloping);
  CHECK(is_pi(build_sl(1, 1)).enveloping);
}
