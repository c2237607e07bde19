#include "superenv/verify.hpp"

#include <exception>
#include <functional>
#include <random>
#include <sstream>

#include "superenv/algebra_source.hpp"
#include "superenv/bosonization.hpp"
#include "superenv/centers.hpp"
#include "superenv/error.hpp"
#include "superenv/expr.hpp"

namespace superenv {

namespace {

using Check = std::function<IdentityCheck()>;

// Runs `body` and turns any exception into a failed check of the same name.
IdentityCheck guarded(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
  try {
    auto [ok, detail] = body();
    return {name, ok, detail};
  } catch (const std::exception& e) {
    return {name, false, std::string("raised: ") + e.what()};
  }
}

std::pair<bool, std::string> expect_text(const std::string& got, const std::string& want) {
  return {got == want, "got `" + got + "`, expected `" + want + "`"};
}

class Calculator {
public:
  Calculator(AlgebraPtr g, bool bosonized) : g_(std::move(g)), ctx_(ExprContext::for_algebra(*g_, bosonized)) {}

  void bind(const std::string& name, const std::string& source) { ctx_.bind(name, source); }
  UElement u(const std::string& source) const { return evaluate_u(parse_expr(source, ctx_), g_); }
  HElement h(const std::string& source) const { return evaluate(parse_expr(source, ctx_), g_); }

private:
  AlgebraPtr g_;
  ExprContext ctx_;
};

std::vector<std::size_t> word_of(const PbwMonomial& m) {
  std::vector<std::size_t> word;
  for (std::size_t i = 0; i < m.size(); ++i) {
    word.insert(word.end(), m[i], i);
  }
  return word;
}

class ElementSource {
public:
  ElementSource(AlgebraPtr g, std::uint64_t seed) : g_(std::move(g)), rng_(seed), basis_(pbw_basis(*g_, 2)) {}

  Rational coefficient() {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    int n = 0;
    while (n == 0) {
      n = num(rng_);
    }
    return Rational(n, den(rng_));
  }

  PbwMonomial monomial() {
    std::uniform_int_distribution<std::size_t> pick(0, basis_.size() - 1);
    return basis_[pick(rng_)];
  }

  /// Up to three terms of degree <= 2.
  UElement element() {
    UElement out(g_);
    std::uniform_int_distribution<int> count(1, 3);
    for (int k = count(rng_); k > 0; --k) {
      out.add_term(monomial(), coefficient());
    }
    return out;
  }

  std::vector<std::size_t> word(std::size_t max_length) {
    std::uniform_int_distribution<std::size_t> len(0, max_length);
    std::uniform_int_distribution<std::size_t> gen(0, g_->dimension() - 1);
    std::vector<std::size_t> w(len(rng_));
    for (auto& i : w) {
      i = gen(rng_);
    }
    return w;
  }

  HElement h_element() { return HElement(element(), element()); }

private:
  AlgebraPtr g_;
  std::mt19937_64 rng_;
  std::vector<PbwMonomial> basis_;
};

} // namespace

std::vector<IdentityCheck> engine_property_checks(const AlgebraPtr& g, std::uint64_t seed) {
  ElementSource source(g, seed);
  std::vector<IdentityCheck> checks;

  checks.push_back(guarded("normal form is idempotent on 200 words", [&] {
    for (int k = 0; k < 200; ++k) {
      auto w = source.word(6);
      UElement e = straighten(g, w);
      UElement again(g);
      for (const auto& [m, c] : e.terms()) {
        auto mw = word_of(m);
        again += c * straighten(g, mw);
      }
      UElement product = UElement::scalar(g, Rational(1));
      for (auto i : w) {
        product = product * UElement::generator(g, i);
      }
      if (!(again == e) || !(product == e)) {
        return std::pair<bool, std::string>{false, "word of length " + std::to_string(w.size())};
      }
    }
    return std::pair<bool, std::string>{true, ""};
  }));

  checks.push_back(guarded("associativity on 500 random triples", [&] {
    for (int k = 0; k < 500; ++k) {
      UElement a = source.element();
      UElement b = source.element();
      UElement c = source.element();
      if (!((a * b) * c == a * (b * c))) {
        return std::pair<bool, std::string>{false, "(a*b)*c != a*(b*c) for a = " + render(a) + ", b = " +
                                                       render(b) + ", c = " + render(c)};
      }
    }
    return std::pair<bool, std::string>{true, ""};
  }));

  checks.push_back(guarded("ad is a superderivation on 200 samples", [&] {
    for (int k = 0; k < 200; ++k) {
      UElement a = UElement::monomial(g, source.monomial());
      UElement b = UElement::monomial(g, source.monomial());
      UElement c = source.element();
      const int s = koszul_sign(*a.parity(), *b.parity());
      UElement lhs = ad(a, b * c);
      UElement rhs = ad(a, b) * c + Rational(s) * (b * ad(a, c));
      if (!(lhs == rhs)) {
        return std::pair<bool, std::string>{false, "a = " + render(a) + ", b = " + render(b)};
      }
    }
    return std::pair<bool, std::string>{true, ""};
  }));

  checks.push_back(guarded("sigma is an involutive automorphism on 200 pairs", [&] {
    for (int k = 0; k < 200; ++k) {
      UElement a = source.element();
      UElement b = source.element();
      if (!(sigma(a * b) == sigma(a) * sigma(b)) || !(sigma(sigma(a)) == a)) {
        return std::pair<bool, std::string>{false, "a = " + render(a)};
      }
    }
    return std::pair<bool, std::string>{true, ""};
  }));

  checks.push_back(guarded("t is an involution and t*e*t = sigma(e)", [&] {
    const HElement t = HElement::grouplike(g);
    if (!(t * t == HElement::embed(UElement::scalar(g, Rational(1))))) {
      return std::pair<bool, std::string>{false, "t*t != 1"};
    }
    for (int k = 0; k < 100; ++k) {
      UElement e = source.element();
      if (!(t * HElement::embed(e) * t == HElement::embed(sigma(e)))) {
        return std::pair<bool, std::string>{false, "e = " + render(e)};
      }
    }
    return std::pair<bool, std::string>{true, ""};
  }));

  checks.push_back(guarded("render/parse round-trip on 200 elements", [&] {
    const ExprContext plain = ExprContext::for_algebra(*g);
    const ExprContext bosonized = ExprContext::for_algebra(*g, true);
    for (int k = 0; k < 100; ++k) {
      UElement e = source.element();
      if (!(evaluate_u(parse_expr(render(e), plain), g) == e)) {
        return std::pair<bool, std::string>{false, "`" + render(e) + "`"};
      }
      HElement h = source.h_element();
      if (!(evaluate(parse_expr(render(h), bosonized), g) == h)) {
        return std::pair<bool, std::string>{false, "`" + render(h) + "`"};
      }
    }
    return std::pair<bool, std::string>{true, ""};
  }));
  return checks;
}

IdentityCheck anticenter_formula_equivalence(const AlgebraPtr& gl11, unsigned d) {
  return guarded("A(gl(1,1)) in F_" + std::to_string(d) + " matches the omega formula", [&] {
    const std::vector<std::string> vars{"x", "y"};
    std::vector<UElement> formula;
    // x*omega - (omega + tau(omega))*u*v has degree deg(omega) + 2
    for (unsigned total = 0; total + 2 <= d; ++total) {
      for (unsigned a = 0; a <= total; ++a) {
        PolyQ omega = PolyQ::monomial(vars, {a, total - a}, Rational(1));
        formula.push_back(anticenter_formula_element(gl11, omega));
      }
    }
    const UBasisReport solved = anticenter_basis(gl11, d);
    const bool ok = same_span(solved.basis, formula);
    return std::pair<bool, std::string>{ok, "solver dimension " + std::to_string(solved.dimension()) +
                                                ", formula dimension " + std::to_string(formula.size())};
  });
}

std::vector<IdentityCheck> run_identity_suite(const AlgebraPtr& key, unsigned degree) {
  std::vector<IdentityCheck> checks;
  auto add = [&](const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    checks.push_back(guarded(name, body));
  };
  auto nf_is = [&](const std::string& name, const std::string& source, const std::string& want) {
    add(name, [&, source, want] { return expect_text(render(Calculator(key, false).u(source)), want); });
  };
  auto h_is = [&](const std::string& name, const std::string& source, const std::string& want) {
    add(name, [&, source, want] { return expect_text(render(Calculator(key, true).h(source)), want); });
  };

  const auto gl11 = std::make_shared<const LieSuperalgebra>(build_gl(1, 1));

  // Bracket table and realization.
  add("table satisfies grading, antisymmetry and Jacobi", [&] {
    const auto report = validate(*key);
    return std::pair<bool, std::string>{report.ok(), std::to_string(report.violations.size()) + " violations"};
  });
  add("builtin gl(1,1) reproduces the table of the key algebra", [&] {
    return std::pair<bool, std::string>{*key == *gl11, "tables differ"};
  });
  add("supertrace of the identity of gl(1,1) is 0", [&] {
    return expect_text(supertrace(MatrixElement::identity(1, 1)).str(), "0");
  });
  add("supertrace of y = e11 is 1", [&] { return expect_text(supertrace(MatrixElement::unit(1, 1, 0, 0)).str(), "1"); });
  nf_is("[y,u] = u", "y*u - u*y", "u");
  nf_is("[x,u] = 0", "x*u - u*x", "0");
  nf_is("[x,v] = 0", "x*v - v*x", "0");
  nf_is("[u,v] = uv + vu = x", "u*v + v*u", "x");
  add("U(gl(1,1)) and H(gl(1,1)) are PI", [&] {
    const PiVerdict v = is_pi(*key);
    return std::pair<bool, std::string>{v.enveloping && v.bosonization, "is_pi returned false"};
  });

  // Normal forms.
  nf_is("v*u = x - u*v", "v*u", "x - u*v");
  add("u*y = y*u - u", [&] {
    Calculator c(key, false);
    return std::pair<bool, std::string>{c.u("u*y") == c.u("y*u") - c.u("u"), "got `" + render(c.u("u*y")) + "`"};
  });
  nf_is("u*u = 0", "u*u", "0");
  nf_is("u*v*u = x*u", "u*v*u", "x*u");
  nf_is("v*u*v = x*v", "v*u*v", "x*v");
  add("x is central", [&] {
    Calculator c(key, false);
    for (const char* b : {"x", "y", "u", "v"}) {
      const std::string s(b);
      if (!(c.u("x*" + s) == c.u(s + "*x"))) {
        return std::pair<bool, std::string>{false, "x does not commute with " + s};
      }
    }
    return std::pair<bool, std::string>{true, ""};
  });

  // Actions.
  add("ad(y)(u) = u", [&] {
    Calculator c(key, false);
    return expect_text(render(ad(c.u("y"), c.u("u"))), "u");
  });
  add("ad(u)(v) = x", [&] {
    Calculator c(key, false);
    return expect_text(render(ad(c.u("u"), c.u("v"))), "x");
  });
  for (const char* b : {"u", "y"}) {
    const std::string s(b);
    add("ad'(" + s + ")(w) = 0 for w = -x + 2*u*v", [&, s] {
      Calculator c(key, false);
      return expect_text(render(ad_twist(c.u(s), c.u("-x + 2*u*v"))), "0");
    });
  }
  add("w is even", [&] {
    Calculator c(key, false);
    return expect_text(render(graded_component(c.u("-x + 2*u*v"), Parity::Odd)), "0");
  });

  // Bosonization.
  add("sigma(u) = -u", [&] {
    Calculator c(key, false);
    return expect_text(render(sigma(c.u("u"))), "-u");
  });
  add("sigma(x) = x", [&] {
    Calculator c(key, false);
    return expect_text(render(sigma(c.u("x"))), "x");
  });
  h_is("t*u*t = -u", "t*u*t", "-u");
  h_is("t*t = 1", "t*t", "1");
  add("w*t is even", [&] {
    Calculator c(key, true);
    return expect_text(render(h_graded_component(c.h("(-x + 2*u*v)*t"), Parity::Odd)), "0");
  });
  for (auto& check : central_witness_check(key)) {
    checks.push_back(std::move(check));
  }
  add("zero divisors: (x - w*t)*(x + w*t) = 0 via bound w", [&] {
    Calculator c(key, true);
    c.bind("w", "-x + 2*u*v");
    return expect_text(render(c.h("(x - w*t)*(x + w*t)")), "0");
  });
  h_is("w^2 = x^2", "(-x + 2*u*v)^2", "x^2");

  // Anticenter formula.
  auto member = [&](const std::string& name, const std::string& alpha, bool want, const std::string& omega) {
    add(name, [&, alpha, want, omega] {
      const FormulaMembership m = anticenter_formula_member(Calculator(key, false).u(alpha));
      std::string got_omega = m.omega ? m.omega->str() : "none";
      bool ok = m.member == want && got_omega == omega;
      return std::pair<bool, std::string>{ok, std::string("member = ") + (m.member ? "true" : "false") +
                                                   ", omega = " + got_omega + ", residual = " + m.residual.str()};
    });
  };
  member("x - 2*u*v is in A(gl(1,1)) with omega = 1", "x - 2*u*v", true, "1");
  member("x is not in A(gl(1,1))", "x", false, "none");
  member("x*y - (2*y - 1)*u*v is in A(gl(1,1)) with omega = y", "x*y - (2*y - 1)*u*v", true, "y");
  add("anticenter at d=3 contains x*y - (2*y - 1)*u*v", [&] {
    return std::pair<bool, std::string>{in_span(anticenter_basis(key, 3).basis, Calculator(key, false).u("x*y - (2*y - 1)*u*v")),
                                        "not in span"};
  });
  for (unsigned d : {1u, 2u, 3u, 4u}) {
    checks.push_back(anticenter_formula_equivalence(key, d));
  }

  // Centers of H and anticenter properties.
  for (unsigned d = 0; d <= 4; ++d) {
    add("Z(H) = Z_0 + A_0*t and Z(H)_1 = 0 at d=" + std::to_string(d), [&, d] {
      const HCenterDecomposition r = check_hcenter_decomposition(key, d);
      return std::pair<bool, std::string>{r.equal && r.odd_part_zero,
                                          std::to_string(r.hcenter_dimension) + " = " +
                                              std::to_string(r.center_even_dimension) + " + " +
                                              std::to_string(r.anticenter_even_dimension)};
    });
  }
  add("dim Z(H) = 5 = 4 + 1 at d=2", [&] {
    const HCenterDecomposition r = check_hcenter_decomposition(key, 2);
    return std::pair<bool, std::string>{r.hcenter_dimension == 5 && r.center_even_dimension == 4 &&
                                            r.anticenter_even_dimension == 1,
                                        std::to_string(r.hcenter_dimension) + " = " +
                                            std::to_string(r.center_even_dimension) + " + " +
                                            std::to_string(r.anticenter_even_dimension)};
  });
  for (unsigned d : {2u, 3u}) {
    for (auto& c : check_anticenter_properties(key, d)) {
      c.name = "anticenter properties at d=" + std::to_string(d) + ": " + c.name;
      checks.push_back(std::move(c));
    }
  }
  add("(x - 2*u*v)^2 = x^2 lies in the center", [&] {
    Calculator c(key, false);
    const UElement sq = c.u("(x - 2*u*v)^2");
    return std::pair<bool, std::string>{sq == c.u("x^2") && in_span(center_basis(key, 2).basis, sq),
                                        "square is `" + render(sq) + "`"};
  });

  // D(g), growth and PI.
  add("D(gl(1,1)) = -x^2", [&] { return expect_text(dg(*gl11).str(), "-x^2"); });
  for (auto [m, n] : {std::pair{1u, 2u}, std::pair{2u, 1u}, std::pair{2u, 2u}}) {
    const std::string name = "gl(" + std::to_string(m) + "," + std::to_string(n) + ")";
    add("D(" + name + ") != 0", [m, n] {
      const PolyQ d = dg(build_gl(m, n));
      return std::pair<bool, std::string>{!d.is_zero(), "D = " + d.str()};
    });
  }
  add("D(abelian(0|1)) = 0", [] { return expect_text(dg(build_abelian(0, 1)).str(), "0"); });
  add("growth of U(gl(1,1)) is 2", [&] { return expect_text(std::to_string(growth_degree(*gl11, 12).degree), "2"); });
  add("growth of H(gl(1,1)) is 2", [&] {
    return expect_text(std::to_string(growth_degree(*gl11, 12, true).degree), "2");
  });
  add("growth of U(gl(2,1)) is 5", [&] {
    return expect_text(std::to_string(growth_degree(build_gl(2, 1), 14).degree), "5");
  });
  add("dim F_2 U(gl(1,1)) = 13", [&] { return expect_text(count_filtered(*gl11, 2).get_str(), "13"); });
  add("U(gl(2,1)) is not PI", [] {
    return std::pair<bool, std::string>{!is_pi(build_gl(2, 1)).enveloping, "is_pi returned true"};
  });
  add("abelian tables are PI", [] {
    for (auto [p, q] : {std::pair{0u, 1u}, std::pair{2u, 0u}, std::pair{1u, 3u}}) {
      if (!is_pi(build_abelian(p, q)).enveloping) {
        return std::pair<bool, std::string>{false, "abelian(" + std::to_string(p) + "|" + std::to_string(q) + ")"};
      }
    }
    return std::pair<bool, std::string>{true, ""};
  });

  // Engine laws.
  for (auto& c : engine_property_checks(gl11)) {
    checks.push_back(std::move(c));
  }

  // Truncated reports at the requested degree.
  const std::string at = " at d=" + std::to_string(degree);
  add("center basis commutes with every generator" + at, [&] {
    const UBasisReport r = center_basis(key, degree);
    for (const auto& z : r.basis) {
      for (std::size_t i = 0; i < key->dimension(); ++i) {
        const UElement b = UElement::generator(key, i);
        if (!(z * b == b * z)) {
          return std::pair<bool, std::string>{false, "`" + render(z) + "`"};
        }
      }
    }
    return std::pair<bool, std::string>{true, "dimension " + std::to_string(r.dimension())};
  });
  add("anticenter basis is killed by ad' of every generator" + at, [&] {
    const UBasisReport r = anticenter_basis(key, degree);
    for (const auto& a : r.basis) {
      for (std::size_t i = 0; i < key->dimension(); ++i) {
        if (!ad_twist(UElement::generator(key, i), a).is_zero()) {
          return std::pair<bool, std::string>{false, "`" + render(a) + "`"};
        }
      }
    }
    return std::pair<bool, std::string>{true, "dimension " + std::to_string(r.dimension())};
  });
  add("hcenter basis has no odd part" + at, [&] {
    const HBasisReport r = hcenter_basis(key, degree);
    return std::pair<bool, std::string>{parity_part(r, Parity::Odd).empty(),
                                        "dimension " + std::to_string(r.dimension())};
  });
  return checks;
}

std::string format_report(const std::vector<IdentityCheck>& checks) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    if (c.passed) {
      out << "[PASS] " << c.name << '\n';
    } else {
      ++failed;
      out << "[FAIL] " << c.name << ": " << c.detail << '\n';
    }
  }
  out << checks.size() << " checks, " << failed << " failed\n";
  return out.str();
}

} // namespace superenv
