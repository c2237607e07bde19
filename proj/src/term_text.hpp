#pragma once

// Shared canonical text layout for sparse linear combinations:
// `c1*m1 + c2*m2 - ...`, unit coefficients elided, `0` for the empty sum.

#include <string>
#include <utility>
#include <vector>

#include "superenv/rational.hpp"

namespace superenv::detail {

/// `monomial` is the already-rendered monomial text; an empty string stands
/// for the unit monomial.
struct TextTerm {
  Rational coefficient;
  std::string monomial;
};

inline std::string join_terms(const std::vector<TextTerm>& terms) {
  if (terms.empty()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& [coefficient, monomial] : terms) {
    bool negative = coefficient.sign() < 0;
    if (first) {
      if (negative) {
        out += "-";
      }
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational magnitude = coefficient.abs();
    if (monomial.empty()) {
      out += magnitude.str();
    } else if (magnitude.is_one()) {
      out += monomial;
    } else {
      out += magnitude.str() + "*" + monomial;
    }
  }
  return out;
}

/// `name^e` factors joined by `*`; zero exponents skipped.
template <class Names, class Exps>
std::string power_product(const Names& names, const Exps& exps) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) {
      continue;
    }
    if (!out.empty()) {
      out += "*";
    }
    out += names[i];
    if (exps[i] > 1) {
      out += "^" + std::to_string(exps[i]);
    }
  }
  return out;
}

} // namespace superenv::detail
