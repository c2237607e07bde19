#include "superenv/algebra_source.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "superenv/error.hpp"
#include "superenv/expr.hpp"
#include "term_text.hpp"

namespace superenv {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Cursor over one line of a definition file.
class LineCursor {
public:
  LineCursor(std::string_view line, std::size_t line_number, std::size_t offset)
      : line_(line), line_number_(line_number), offset_(offset) {}

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t column, const std::string& message) const {
    throw ParseError(offset_ + column, "line " + std::to_string(line_number_) + ", column " +
                                           std::to_string(column + 1) + ": " + message);
  }

  void skip_space() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= line_.size();
  }

  std::string identifier() {
    skip_space();
    if (pos_ >= line_.size() || !is_ident_start(line_[pos_])) {
      fail("expected a name");
    }
    std::size_t start = pos_;
    while (pos_ < line_.size() && is_ident_char(line_[pos_])) {
      ++pos_;
    }
    return std::string(line_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= line_.size() || line_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::size_t pos() const { return pos_; }
  std::string_view rest() const { return line_.substr(pos_); }

private:
  std::string_view line_;
  std::size_t line_number_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

} // namespace

LieSuperalgebra parse_algebra_file(std::string_view text) {
  std::vector<Generator> generators;
  std::set<std::string> names;

  struct PendingBracket {
    std::size_t i;
    std::size_t j;
    QVector value;
    std::size_t line_number;
    std::size_t offset;
  };
  std::vector<PendingBracket> brackets;

  std::size_t offset = 0;
  std::size_t line_number = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    ++line_number;
    std::string_view line = text.substr(offset, end - offset);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    LineCursor cur(line, line_number, offset);
    if (!cur.at_end()) {
      const std::size_t keyword_column = cur.pos();
      const std::string keyword = cur.identifier();
      if (keyword == "generator") {
        if (!brackets.empty()) {
          cur.fail_at(keyword_column, "generator declared after the first bracket line");
        }
        const std::size_t name_column = (cur.skip_space(), cur.pos());
        std::string name = cur.identifier();
        if (name == "t") {
          cur.fail_at(name_column, "'t' is reserved for the grouplike of H(g)");
        }
        if (!names.insert(name).second) {
          cur.fail_at(name_column, "duplicate generator '" + name + "'");
        }
        const std::string parity = cur.identifier();
        if (parity != "even" && parity != "odd") {
          cur.fail("parity must be 'even' or 'odd'");
        }
        if (!cur.at_end()) {
          cur.fail("unexpected text after the parity");
        }
        generators.push_back({name, parity == "even" ? Parity::Even : Parity::Odd});
      } else if (keyword == "bracket") {
        cur.expect('[');
        auto lookup = [&](const std::string& name, std::size_t column) {
          for (std::size_t k = 0; k < generators.size(); ++k) {
            if (generators[k].name == name) {
              return k;
            }
          }
          cur.fail_at(column, "unknown generator '" + name + "'");
        };
        std::size_t column = (cur.skip_space(), cur.pos());
        const std::size_t i = lookup(cur.identifier(), column);
        cur.expect(',');
        column = (cur.skip_space(), cur.pos());
        const std::size_t j = lookup(cur.identifier(), column);
        cur.expect(']');
        cur.expect('=');
        const std::size_t expr_column = cur.pos();
        ExprContext ctx;
        for (const auto& g : generators) {
          ctx.generator_names.push_back(g.name);
        }
        QVector value;
        try {
          value = evaluate_linear(parse_expr(cur.rest(), ctx), generators.size());
        } catch (const ParseError& e) {
          cur.fail_at(expr_column + e.position(), e.message());
        } catch (const DomainError& e) {
          cur.fail_at(expr_column, e.what());
        }
        brackets.push_back({i, j, std::move(value), line_number, offset});
      } else {
        cur.fail_at(keyword_column, "expected 'generator' or 'bracket'");
      }
    }
    offset = end + 1;
  }

  BracketTableBuilder builder(generators);
  for (const auto& b : brackets) {
    try {
      builder.set(b.i, b.j, b.value);
    } catch (const DomainError& e) {
      throw ParseError(b.offset, "line " + std::to_string(b.line_number) + ": " + e.what());
    }
  }
  return builder.build();
}

LieSuperalgebra load_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DomainError("cannot read algebra file '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra_file(buffer.str());
}

std::string write_algebra_file(const LieSuperalgebra& g) {
  std::ostringstream out;
  for (const auto& gen : g.generators()) {
    out << "generator " << gen.name << " " << to_string(gen.parity) << "\n";
  }
  const auto names = g.names();
  for (std::size_t i = 0; i < g.dimension(); ++i) {
    for (std::size_t j = i; j < g.dimension(); ++j) {
      if (g.bracket_terms(i, j).empty()) {
        continue;
      }
      std::vector<detail::TextTerm> parts;
      for (const auto& [k, c] : g.bracket_terms(i, j)) {
        parts.push_back({c, names[k]});
      }
      out << "bracket [" << names[i] << "," << names[j] << "] = " << detail::join_terms(parts) << "\n";
    }
  }
  return out.str();
}

namespace {

class BuiltinParser {
public:
  explicit BuiltinParser(std::string_view src) : src_(src) {}

  LieSuperalgebra parse() {
    std::vector<LieSuperalgebra> summands{summand()};
    while (accept("(+)")) {
      summands.push_back(summand());
    }
    skip_space();
    if (pos_ < src_.size()) {
      fail("unexpected text in algebra spec");
    }
    return summands.size() == 1 ? std::move(summands.front()) : direct_sum(summands);
  }

private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(std::string_view token) {
    skip_space();
    if (src_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) {
      fail("expected '" + std::string(token) + "'");
    }
  }

  unsigned number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    if (start == pos_ || pos_ - start > 4) {
      pos_ = start;
      fail("expected a small non-negative integer");
    }
    return static_cast<unsigned>(std::stoul(std::string(src_.substr(start, pos_ - start))));
  }

  LieSuperalgebra summand() {
    skip_space();
    const std::size_t start = pos_;
    if (accept("gl")) {
      auto [m, n] = pair(",");
      return guarded(start, [&] { return build_gl(m, n); });
    }
    if (accept("sl")) {
      auto [m, n] = pair(",");
      return guarded(start, [&] { return build_sl(m, n); });
    }
    if (accept("abelian")) {
      auto [p, q] = pair("|");
      return build_abelian(p, q);
    }
    fail("expected gl(m,n), sl(m,n) or abelian(p|q)");
  }

  std::pair<unsigned, unsigned> pair(std::string_view separator) {
    expect("(");
    unsigned a = number();
    expect(separator);
    unsigned b = number();
    expect(")");
    return {a, b};
  }

  template <class Build>
  LieSuperalgebra guarded(std::size_t start, Build build) {
    try {
      return build();
    } catch (const DomainError& e) {
      throw ParseError(start, e.what());
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

} // namespace

LieSuperalgebra parse_builtin(std::string_view spec) {
  return BuiltinParser(spec).parse();
}

} // namespace superenv
