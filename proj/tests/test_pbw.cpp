#include <doctest.h>

#include "superenv/error.hpp"
#include "support.hpp"

using namespace superenv;
using testing::Rng;
using testing::U;
using testing::gl11;

namespace {

UElement word(const AlgebraPtr& g, std::vector<std::size_t> w) { return straighten(g, w); }

std::vector<AlgebraPtr> small_builtins() {
  return {gl11(), testing::share(build_sl(1, 1)), testing::share(build_gl(2, 1)), testing::share(build_gl(1, 2)),
          testing::share(build_sl(2, 1)), testing::share(build_gl(2, 2)), testing::share(build_abelian(2, 2))};
}

// Binomial coefficient as a BigInt.
BigInt choose(long n, long k) {
  if (k < 0 || n < k) {
    return 0;
  }
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Sum over subsets S of the odd basis of C(n - |S| + d0, d0).
BigInt closed_form_count(const LieSuperalgebra& g, unsigned n) {
  const long d0 = static_cast<long>(g.even_dimension());
  const long d1 = static_cast<long>(g.odd_dimension());
  BigInt total = 0;
  for (long s = 0; s <= d1 && s <= static_cast<long>(n); ++s) {
    total += choose(d1, s) * choose(static_cast<long>(n) - s + d0, d0);
  }
  return total;
}

} // namespace

TEST_CASE("straightening examples in gl(1,1)") {
  const auto g = gl11();  // x=0, y=1, u=2, v=3
  CHECK(render(word(g, {3, 2})) == "x - u*v");
  CHECK(word(g, {2, 1}) == U(g, "y*u") - U(g, "u"));
  CHECK(render(word(g, {2, 2})) == "0");
  CHECK(render(word(g, {2, 3, 2})) == "x*u");
  CHECK(render(word(g, {3, 2, 3})) == "x*v");
  CHECK(render(word(g, {})) == "1");
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(word(g, {0, i}) == word(g, {i, 0}));
  }
}

TEST_CASE("straightening agrees with the matrix realization") {
  Rng rng(30);
  for (const auto& g : {gl11(), testing::share(build_gl(2, 1)), testing::share(build_gl(1, 2))}) {
    for (int k = 0; k < 300; ++k) {
      const auto w = testing::random_word(rng, g->dimension(), 6);
      REQUIRE(testing::realize(straighten(g, w)) == testing::realize_word(*g, w));
    }
  }
}

TEST_CASE("straighten and u_mul are two routes to the same normal form") {
  Rng rng(31);
  for (const auto& g : small_builtins()) {
    for (int k = 0; k < 100; ++k) {
      const auto w = testing::random_word(rng, g->dimension(), 5);
      UElement product = UElement::scalar(g, Rational(1));
      for (auto i : w) {
        product = product * UElement::generator(g, i);
      }
      REQUIRE(straighten(g, w) == product);
    }
  }
}

TEST_CASE("normal-form idempotence") {
  Rng rng(32);
  const auto g = testing::share(build_gl(2, 1));
  for (const auto& m : pbw_basis(*g, 3)) {
    const auto w = testing::word_of(m);
    REQUIRE(straighten(g, w) == UElement::monomial(g, m));
  }
  for (int k = 0; k < 100; ++k) {
    const UElement e = straighten(g, testing::random_word(rng, g->dimension(), 5));
    UElement again(g);
    for (const auto& [m, c] : e.terms()) {
      again += c * straighten(g, testing::word_of(m));
    }
    REQUIRE(again == e);
  }
}

TEST_CASE("associativity on 500 random triples") {
  Rng rng(33);
  for (const auto& g : {gl11(), testing::share(build_gl(2, 1))}) {
    for (int k = 0; k < 500; ++k) {
      const UElement a = testing::random_element(rng, g, 2);
      const UElement b = testing::random_element(rng, g, 2);
      const UElement c = testing::random_element(rng, g, 2);
      REQUIRE((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("generators supercommute to their bracket") {
  for (const auto& g : small_builtins()) {
    for (std::size_t i = 0; i < g->dimension(); ++i) {
      for (std::size_t j = 0; j < g->dimension(); ++j) {
        const UElement a = UElement::generator(g, i);
        const UElement b = UElement::generator(g, j);
        UElement image(g);
        for (const auto& [k, c] : g->bracket_terms(i, j)) {
          image += c * UElement::generator(g, k);
        }
        const int s = koszul_sign(g->parity(i), g->parity(j));
        REQUIRE(a * b - Rational(s) * (b * a) == image);
      }
    }
  }
}

TEST_CASE("grading, filtration and unit") {
  Rng rng(34);
  const auto g = testing::share(build_gl(2, 1));
  const auto basis = pbw_basis(*g, 2);
  for (int k = 0; k < 200; ++k) {
    const UElement a = UElement::monomial(g, basis[rng.index(basis.size())]);
    const UElement b = UElement::monomial(g, basis[rng.index(basis.size())]);
    const UElement ab = a * b;
    if (!ab.is_zero()) {
      REQUIRE(ab.parity() == *a.parity() + *b.parity());
    }
    REQUIRE(ab.degree() <= a.degree() + b.degree());
    REQUIRE(UElement::scalar(g, Rational(1)) * a == a);
  }
  CHECK(U(gl11(), "x + u").parity() == std::nullopt);
  CHECK(U(gl11(), "u*v").parity() == Parity::Even);
  CHECK(U(gl11(), "0").degree() == -1);
}

TEST_CASE("u_mul rejects elements of different algebras") {
  const auto other = testing::share(build_gl(1, 1));
  CHECK_NOTHROW(UElement::generator(gl11(), 0) * UElement::generator(other, 0));
  CHECK_THROWS_AS(UElement::generator(gl11(), 0) * UElement::generator(testing::share(build_sl(1, 1)), 0),
                  DomainError);
}

TEST_CASE("adjoint actions") {
  const auto g = gl11();
  CHECK(ad(U(g, "y"), U(g, "u")) == U(g, "u"));
  CHECK(ad(U(g, "u"), U(g, "v")) == U(g, "x"));
  CHECK(ad(U(g, "u*v + y"), U(g, "1")).is_zero());
  CHECK(ad_twist(U(g, "u"), U(g, "-x + 2*u*v")).is_zero());
  CHECK(ad_twist(U(g, "y"), U(g, "-x + 2*u*v")).is_zero());
  CHECK(ad_twist(U(g, "u"), U(g, "x")) == U(g, "2*x*u"));
  CHECK_THROWS_AS(ad(U(g, "x + u"), U(g, "y")), DomainError);
  CHECK_THROWS_AS(ad_twist(U(g, "x + u"), U(g, "y")), DomainError);
  // per-component in m
  CHECK(ad(U(g, "u"), U(g, "v + y")) == ad(U(g, "u"), U(g, "v")) + ad(U(g, "u"), U(g, "y")));
}

TEST_CASE("ad is a superderivation") {
  Rng rng(35);
  for (const auto& g : {gl11(), testing::share(build_gl(2, 1))}) {
    const auto basis = pbw_basis(*g, 2);
    for (int k = 0; k < 300; ++k) {
      const UElement a = UElement::monomial(g, basis[rng.index(basis.size())], rng.nonzero_rational());
      const UElement m = UElement::monomial(g, basis[rng.index(basis.size())]);
      const UElement n = testing::random_element(rng, g, 2);
      const int s = koszul_sign(*a.parity(), *m.parity());
      REQUIRE(ad(a, m * n) == ad(a, m) * n + Rational(s) * (m * ad(a, n)));
    }
  }
}

TEST_CASE("graded components") {
  const auto g = gl11();
  CHECK(graded_component(U(g, "x + u"), Parity::Even) == U(g, "x"));
  CHECK(graded_component(U(g, "u*v"), Parity::Odd).is_zero());
  CHECK(graded_component(U(g, "-x + 2*u*v"), Parity::Odd).is_zero());
  const UElement e = U(g, "x*u + y - v + 3");
  CHECK(graded_component(e, Parity::Even) + graded_component(e, Parity::Odd) == e);
}

TEST_CASE("filtered counts") {
  CHECK(count_filtered(*gl11(), 0) == 1);
  CHECK(count_filtered(*gl11(), 1) == 5);
  CHECK(count_filtered(*gl11(), 2) == 13);
  for (const auto& g : small_builtins()) {
    for (unsigned n = 0; n <= 10; ++n) {
      REQUIRE(count_filtered(*g, n) == closed_form_count(*g, n));
    }
    for (unsigned n = 0; n <= 3; ++n) {
      REQUIRE(BigInt(static_cast<unsigned long>(pbw_basis(*g, n).size())) == count_filtered(*g, n));
    }
  }
  const auto counts = filtered_counts(*gl11(), 5);
  REQUIRE(counts.size() == 6);
  CHECK(counts[5] == closed_form_count(*gl11(), 5));
}

TEST_CASE("pbw basis enumeration") {
  const auto b = pbw_basis(*gl11(), 2);
  CHECK(b.size() == 13);
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    CHECK(PbwOrder{}(b[i], b[i + 1]));
  }
  for (const auto& m : b) {
    CHECK(m[2] <= 1);
    CHECK(m[3] <= 1);
  }
}

TEST_CASE("growth degree") {
  CHECK(growth_degree(*gl11(), 12).degree == 2);
  CHECK(growth_degree(*gl11(), 12, true).degree == 2);
  CHECK(growth_degree(*gl11(), 12, true).counts[2] == 26);
  const GrowthReport r = growth_degree(build_gl(2, 1), 14);
  CHECK(r.conclusive);
  CHECK(r.degree == 5);
  CHECK(growth_degree(build_abelian(3, 0), 12).degree == 3);
  CHECK(growth_degree(build_abelian(0, 2), 12).degree == 0);
  CHECK_THROWS_AS(growth_degree(build_gl(2, 1), 10), DomainError);
  // too short to stabilize
  const GrowthReport short_run = growth_from_counts({1, 4, 9});
  CHECK_FALSE(short_run.conclusive);
  // n^2 sampled at 0..6
  const GrowthReport sq = growth_from_counts({0, 1, 4, 9, 16, 25, 36});
  CHECK(sq.conclusive);
  CHECK(sq.degree == 2);
}
