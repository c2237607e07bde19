// superenv: command-line front end for the enveloping-algebra engine.

#include <chrono>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "superenv/algebra_source.hpp"
#include "superenv/centers.hpp"
#include "superenv/error.hpp"
#include "superenv/expr.hpp"
#include "superenv/pbw.hpp"
#include "superenv/superalgebra.hpp"
#include "superenv/verify.hpp"

using namespace superenv;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct Source {
  std::string builtin;
  std::string file;
  bool json = false;

  void attach(CLI::App* cmd) {
    auto* b = cmd->add_option("--builtin", builtin, "builtin algebra: gl(m,n), sl(m,n), abelian(p|q), A (+) B");
    auto* f = cmd->add_option("--file", file, "algebra file");
    b->excludes(f);
    cmd->add_flag("--json", json, "emit JSON");
  }

  bool given() const { return !builtin.empty() || !file.empty(); }

  std::string label() const { return builtin.empty() ? file : builtin; }

  LieSuperalgebra load_unchecked() const {
    if (!given()) {
      throw CLI::RequiredError("exactly one of --builtin or --file");
    }
    return builtin.empty() ? load_algebra_file(file) : parse_builtin(builtin);
  }

  AlgebraPtr load() const {
    LieSuperalgebra g = load_unchecked();
    require_valid(g);
    return std::make_shared<const LieSuperalgebra>(std::move(g));
  }
};

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

json integer(const BigInt& n) {
  if (!n.fits_slong_p()) {
    return n.get_str();
  }
  return n.get_si();
}

int cmd_validate(const Source& src) {
  const LieSuperalgebra g = src.load_unchecked();
  const ValidationReport report = validate(g);
  if (src.json) {
    json violations = json::array();
    for (const auto& v : report.violations) {
      violations.push_back({{"kind", to_string(v.kind)}, {"generators", v.indices}, {"description", v.description}});
    }
    print({{"algebra", src.label()},
           {"valid", report.ok()},
           {"even_dimension", g.even_dimension()},
           {"odd_dimension", g.odd_dimension()},
           {"violations", violations}});
  } else if (report.ok()) {
    std::cout << "valid Lie superalgebra of dimension " << g.even_dimension() << "|" << g.odd_dimension() << '\n';
  } else {
    for (const auto& v : report.violations) {
      std::cout << to_string(v.kind) << ": " << v.description << '\n';
    }
    std::cout << report.violations.size() << " violations\n";
  }
  return report.ok() ? kOk : kDomainError;
}

template <class Report>
int emit_basis(const Source& src, const Report& report) {
  if (src.json) {
    json basis = json::array();
    for (const auto& e : report.basis) {
      basis.push_back(render(e));
    }
    print({{"algebra", src.label()},
           {"degree", report.degree},
           {"space", to_string(report.space)},
           {"dimension", report.dimension()},
           {"basis", basis}});
    return kOk;
  }
  std::cout << to_string(report.space) << " of " << src.label() << " in degree <= " << report.degree
            << ": dimension " << report.dimension() << '\n';
  for (const auto& e : report.basis) {
    std::cout << "  " << render(e) << '\n';
  }
  return kOk;
}

int cmd_nf(const Source& src, bool bosonized, const std::vector<std::string>& lets, const std::string& text) {
  const AlgebraPtr g = src.load();
  ExprContext ctx = ExprContext::for_algebra(*g, bosonized);
  for (const auto& let : lets) {
    const auto eq = let.find('=');
    if (eq == std::string::npos) {
      throw CLI::ValidationError("--let", "expected name=expr, got '" + let + "'");
    }
    ctx.bind(let.substr(0, eq), let.substr(eq + 1));
  }
  const Expr tree = parse_expr(text, ctx);
  const std::string out = bosonized ? render(evaluate(tree, g)) : render(evaluate_u(tree, g));
  if (src.json) {
    print({{"algebra", src.label()}, {"bosonized", bosonized}, {"input", text}, {"normal_form", out}});
  } else {
    std::cout << out << '\n';
  }
  return kOk;
}

int cmd_dg(const Source& src) {
  const AlgebraPtr g = src.load();
  const PolyQ d = dg(*g);
  if (src.json) {
    print({{"algebra", src.label()}, {"variables", d.variables()}, {"dg", d.str()}, {"nonzero", !d.is_zero()}});
  } else {
    std::cout << d.str() << '\n';
  }
  return kOk;
}

int cmd_growth(const Source& src, std::optional<unsigned> n_max, bool bosonized) {
  const AlgebraPtr g = src.load();
  const unsigned n = n_max.value_or(std::max<unsigned>(12, static_cast<unsigned>(g->dimension()) + 2));
  const GrowthReport r = growth_degree(*g, n, bosonized);
  if (src.json) {
    json counts = json::array();
    for (const auto& c : r.counts) {
      counts.push_back(integer(c));
    }
    print({{"algebra", src.label()},
           {"bosonized", bosonized},
           {"n_max", n},
           {"conclusive", r.conclusive},
           {"degree", r.degree},
           {"window", {r.window_begin, r.window_end}},
           {"counts", counts}});
  } else {
    if (r.conclusive) {
      std::cout << "growth degree " << r.degree << " (difference " << r.degree + 1 << " vanishes on n = "
                << r.window_begin << ".." << r.window_end << ")\n";
    } else {
      std::cout << "inconclusive up to n = " << n << '\n';
    }
    std::cout << "counts:";
    for (const auto& c : r.counts) {
      std::cout << ' ' << c.get_str();
    }
    std::cout << '\n';
  }
  return r.conclusive ? kOk : kDomainError;
}

int cmd_ispi(const Source& src) {
  const AlgebraPtr g = src.load();
  const PiVerdict v = is_pi(*g);
  if (src.json) {
    print({{"algebra", src.label()}, {"enveloping_pi", v.enveloping}, {"bosonization_pi", v.bosonization}});
  } else {
    std::cout << "U(g): " << (v.enveloping ? "PI" : "not PI") << '\n';
    std::cout << "H(g): " << (v.bosonization ? "PI" : "not PI") << '\n';
  }
  return kOk;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) {
    out.push_back(part);
  }
  return out;
}

int cmd_str(const std::vector<unsigned>& blocks, const std::string& matrix, bool as_json) {
  const unsigned m = blocks.at(0);
  const unsigned n = blocks.at(1);
  MatrixElement a(m, n);
  const auto rows = split(matrix, ';');
  if (rows.size() != m + n) {
    throw CLI::ValidationError("--matrix", "expected " + std::to_string(m + n) + " rows");
  }
  for (unsigned i = 0; i < rows.size(); ++i) {
    std::stringstream in(rows[i]);
    std::string entry;
    unsigned j = 0;
    while (in >> entry) {
      if (j >= m + n) {
        throw CLI::ValidationError("--matrix", "row " + std::to_string(i + 1) + " is too long");
      }
      a.at(i, j++) = Rational::parse(entry);
    }
    if (j != m + n) {
      throw CLI::ValidationError("--matrix", "row " + std::to_string(i + 1) + " is too short");
    }
  }
  const Rational s = supertrace(a);
  if (as_json) {
    print({{"blocks", {m, n}}, {"supertrace", s.str()}});
  } else {
    std::cout << s.str() << '\n';
  }
  return kOk;
}

int cmd_verify(const Source& src, unsigned degree) {
  const auto start = std::chrono::steady_clock::now();
  AlgebraPtr key = src.given() ? std::make_shared<const LieSuperalgebra>(src.load_unchecked())
                               : std::make_shared<const LieSuperalgebra>(build_gl(1, 1));
  const auto checks = run_identity_suite(key, degree);
  if (src.json) {
    json items = json::array();
    for (const auto& c : checks) {
      items.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.passed ? "" : c.detail}});
    }
    print({{"algebra", src.given() ? src.label() : "gl(1,1)"},
           {"degree", degree},
           {"passed", all_passed(checks)},
           {"checks", items}});
  } else {
    std::cout << format_report(checks);
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  std::cerr << "total runtime: " << elapsed.count() << " s\n";
  return all_passed(checks) ? kOk : kDomainError;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in enveloping algebras of Lie superalgebras and their bosonizations"};
  app.require_subcommand(1);

  Source src;
  bool bosonized = false;
  std::vector<std::string> lets;
  std::string expression;
  unsigned degree = 3;
  std::optional<unsigned> n_max;
  std::vector<unsigned> blocks;
  std::string matrix;

  auto* validate_cmd = app.add_subcommand("validate", "check grading, super antisymmetry and super Jacobi");
  src.attach(validate_cmd);

  auto* nf_cmd = app.add_subcommand("nf", "PBW normal form of an expression");
  src.attach(nf_cmd);
  nf_cmd->add_flag("--bosonized", bosonized, "allow t and compute in H(g)");
  nf_cmd->add_option("--let", lets, "binding name=expr, expanded before evaluation");
  nf_cmd->add_option("expr", expression, "expression")->required();

  std::vector<CLI::App*> basis_cmds;
  for (auto [name, about] : {std::pair{"center", "basis of Z(U(g)) inside F_d"},
                             std::pair{"anticenter", "basis of the anticenter A(g) inside F_d"},
                             std::pair{"hcenter", "basis of Z(H(g)) inside F_d"}}) {
    auto* cmd = app.add_subcommand(name, about);
    src.attach(cmd);
    cmd->add_option("--deg", degree, "degree bound (default 3)");
    basis_cmds.push_back(cmd);
  }

  auto* dg_cmd = app.add_subcommand("dg", "determinant of the odd bracket matrix over S(g_0)");
  src.attach(dg_cmd);

  auto* growth_cmd = app.add_subcommand("growth", "growth degree of dim F_n");
  src.attach(growth_cmd);
  growth_cmd->add_option("--nmax", n_max, "largest n (default max(12, dim g + 2))");
  growth_cmd->add_flag("--bosonized", bosonized, "count F_n H(g)");

  auto* ispi_cmd = app.add_subcommand("ispi", "whether U(g) and H(g) satisfy a polynomial identity");
  src.attach(ispi_cmd);

  auto* str_cmd = app.add_subcommand("str", "supertrace of a block matrix");
  str_cmd->add_option("--blocks", blocks, "block sizes m,n")->required()->expected(2)->delimiter(',');
  str_cmd->add_option("--matrix", matrix, "rows separated by ';', entries by spaces")->required();
  str_cmd->add_flag("--json", src.json, "emit JSON");

  unsigned verify_degree = 2;
  auto* verify_cmd = app.add_subcommand("verify", "run the identity suite");
  verify_cmd->alias("verify-paper");
  src.attach(verify_cmd);
  verify_cmd->add_option("--deg", verify_degree, "degree of the basis-report section (default 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*validate_cmd) return cmd_validate(src);
    if (*nf_cmd) return cmd_nf(src, bosonized, lets, expression);
    if (*basis_cmds[0]) return emit_basis(src, center_basis(src.load(), degree));
    if (*basis_cmds[1]) return emit_basis(src, anticenter_basis(src.load(), degree));
    if (*basis_cmds[2]) return emit_basis(src, hcenter_basis(src.load(), degree));
    if (*dg_cmd) return cmd_dg(src);
    if (*growth_cmd) return cmd_growth(src, n_max, bosonized);
    if (*ispi_cmd) return cmd_ispi(src);
    if (*str_cmd) return cmd_str(blocks, matrix, src.json);
    if (*verify_cmd) return cmd_verify(src, verify_degree);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    std::cerr << "parse error " << e.what() << '\n';
    return kDomainError;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}
