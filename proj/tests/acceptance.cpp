// Acceptance criteria: one PASS/FAIL line per criterion, exact results and
// pinned wall-clock limits. Exit status is nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "superenv/algebra_source.hpp"
#include "superenv/bosonization.hpp"
#include "superenv/centers.hpp"
#include "superenv/expr.hpp"
#include "superenv/verify.hpp"

using namespace superenv;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

AlgebraPtr share(LieSuperalgebra g) { return std::make_shared<const LieSuperalgebra>(std::move(g)); }

UElement parse_u(const AlgebraPtr& g, const std::string& s) {
  return evaluate_u(parse_expr(s, ExprContext::for_algebra(*g)), g);
}

std::string failures(const std::vector<IdentityCheck>& checks) {
  std::string out;
  for (const auto& c : checks) {
    if (!c.passed) {
      out += (out.empty() ? "" : "; ") + c.name + ": " + c.detail;
    }
  }
  return out;
}

Outcome witness() {
  const auto checks = central_witness_check(share(build_gl(1, 1)));
  int gap1 = 0, gap2 = 0, gap3 = 0;
  for (const auto& c : checks) {
    gap1 += c.name.rfind("relations of w", 0) == 0;
    gap2 += c.name.rfind("wt is central", 0) == 0;
    gap3 += c.name.rfind("zero divisors", 0) == 0;
  }
  const bool ok = all_passed(checks) && gap1 == 5 && gap2 == 5 && gap3 >= 2;
  return {ok, ok ? std::to_string(checks.size()) + " identities"
                 : failures(checks) + " (counts " + std::to_string(gap1) + "/" + std::to_string(gap2) + "/" +
                       std::to_string(gap3) + ")"};
}

Outcome formula_equivalence() {
  const auto g = share(build_gl(1, 1));
  std::vector<IdentityCheck> checks;
  for (unsigned d : {2u, 3u, 4u}) {
    checks.push_back(anticenter_formula_equivalence(g, d));
  }
  const std::size_t d1 = anticenter_basis(g, 1).dimension();
  const std::size_t d2 = anticenter_basis(g, 2).dimension();
  const bool ok = all_passed(checks) && d1 == 0 && d2 == 1;
  return {ok, "dim d=1: " + std::to_string(d1) + ", d=2: " + std::to_string(d2) +
                  (all_passed(checks) ? "" : "; " + failures(checks))};
}

Outcome hcenter_decomposition() {
  const auto g = share(build_gl(1, 1));
  std::string detail;
  bool ok = true;
  for (unsigned d = 0; d <= 4; ++d) {
    const auto r = check_hcenter_decomposition(g, d);
    ok = ok && r.equal && r.odd_part_zero;
    if (d == 2) {
      ok = ok && r.hcenter_dimension == 5 && r.center_even_dimension == 4 && r.anticenter_even_dimension == 1;
      detail = "d=2: " + std::to_string(r.hcenter_dimension) + " = " + std::to_string(r.center_even_dimension) +
               " + " + std::to_string(r.anticenter_even_dimension);
    }
  }
  return {ok, detail};
}

Outcome anticenter_properties() {
  const auto g = share(build_gl(1, 1));
  std::vector<IdentityCheck> checks;
  for (unsigned d = 0; d <= 3; ++d) {
    for (auto& c : check_anticenter_properties(g, d)) {
      checks.push_back(std::move(c));
    }
  }
  const UElement sq = parse_u(g, "(x - 2*u*v)^2");
  const bool square = sq == parse_u(g, "x^2") && in_span(center_basis(g, 2).basis, sq);
  const bool odd_zero = parity_part(anticenter_basis(g, 3), Parity::Odd).empty() &&
                        parity_part(center_basis(g, 3), Parity::Odd).empty();
  return {all_passed(checks) && square && odd_zero,
          std::to_string(checks.size()) + " property checks; (x - 2*u*v)^2 = " + render(sq)};
}

Outcome dg_witnesses() {
  const std::string d11 = dg(build_gl(1, 1)).str();
  bool ok = d11 == "-x^2";
  for (auto [m, n] : {std::pair{1u, 2u}, std::pair{2u, 1u}, std::pair{2u, 2u}}) {
    ok = ok && !dg(build_gl(m, n)).is_zero();
  }
  ok = ok && dg(build_abelian(0, 1)).is_zero();
  return {ok, "D(gl(1,1)) = " + d11};
}

Outcome growth() {
  const LieSuperalgebra g = build_gl(1, 1);
  const auto u = growth_degree(g, 12);
  const auto h = growth_degree(g, 12, true);
  const auto g21 = growth_degree(build_gl(2, 1), 14);
  const BigInt c2 = count_filtered(g, 2);
  const bool ok = u.conclusive && u.degree == 2 && h.conclusive && h.degree == 2 && g21.conclusive &&
                  g21.degree == 5 && c2 == 13;
  return {ok, "U: " + std::to_string(u.degree) + ", H: " + std::to_string(h.degree) +
                  ", gl(2,1): " + std::to_string(g21.degree) + ", F_2: " + c2.get_str()};
}

Outcome pi() {
  bool ok = is_pi(build_gl(1, 1)).enveloping && is_pi(build_gl(1, 1)).bosonization &&
            !is_pi(build_gl(2, 1)).enveloping && !is_pi(build_gl(2, 1)).bosonization;
  for (unsigned p = 0; p <= 3; ++p) {
    for (unsigned q = 0; q <= 3; ++q) {
      if (p + q > 0) {
        ok = ok && is_pi(build_abelian(p, q)).enveloping;
      }
    }
  }
  return {ok, ""};
}

Outcome engine() {
  const auto checks = engine_property_checks(share(build_gl(1, 1)));
  return {all_passed(checks), all_passed(checks) ? std::to_string(checks.size()) + " laws" : failures(checks)};
}

std::string capture(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    return "<popen failed>";
  }
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    out += "<exit " + std::to_string(status) + ">";
  }
  return out;
}

Outcome determinism() {
  const auto g = share(build_gl(1, 1));
  const std::string a = format_report(run_identity_suite(g, 3));
  const std::string b = format_report(run_identity_suite(g, 3));
  const std::string cmd = std::string(SUPERENV_CLI) + " verify --deg 3 2>/dev/null";
  const std::string c = capture(cmd);
  const std::string d = capture(cmd);
  const bool ok = a == b && c == d && a == c;
  return {ok, ok ? std::to_string(a.size()) + " bytes, in-process and CLI" : "reports differ"};
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "zero-divisor witness in H(gl(1,1))", 1.0, witness},
      {2, "anticenter of gl(1,1) equals the omega formula span, d = 2..4", 10.0, formula_equivalence},
      {3, "Z(H) = Z_0 + A_0 t and Z(H)_1 = 0 for gl(1,1), d <= 4", 10.0, hcenter_decomposition},
      {4, "anticenter properties for gl(1,1), d <= 3", 5.0, anticenter_properties},
      {5, "D(g) witnesses", 5.0, dg_witnesses},
      {6, "growth degrees and filtered counts", 5.0, growth},
      {7, "PI predicate", 1.0, pi},
      {8, "engine property suite", 60.0, engine},
      {9, "identity suite reports are byte-identical", 60.0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("raised: ") + e.what()};
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    const bool in_time = elapsed.count() < c.limit_seconds;
    const bool passed = o.passed && in_time;
    failed += passed ? 0 : 1;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << "criterion " << c.id << ": " << (passed ? "PASS" : "FAIL") << "  " << c.name << "  [" << elapsed.count()
         << " s, limit " << c.limit_seconds << " s]";
    if (!o.detail.empty()) {
      line << "  " << o.detail;
    }
    if (!in_time) {
      line << "  (over time limit)";
    }
    std::cout << line.str() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
