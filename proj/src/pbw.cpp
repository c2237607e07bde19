#include "superenv/pbw.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "superenv/error.hpp"

namespace superenv {

unsigned PbwMonomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

PbwMonomial PbwMonomial::with_delta(std::size_t i, int delta) const {
  PbwMonomial out = *this;
  out.exps_[i] = static_cast<unsigned>(static_cast<int>(out.exps_[i]) + delta);
  return out;
}

Parity parity(const LieSuperalgebra& g, const PbwMonomial& m) {
  unsigned odd = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (g.parity(i) == Parity::Odd) {
      odd += m[i];
    }
  }
  return parity_of(odd);
}

bool PbwOrder::operator()(const PbwMonomial& a, const PbwMonomial& b) const {
  unsigned da = a.degree();
  unsigned db = b.degree();
  if (da != db) {
    return da < db;
  }
  return a.exponents() > b.exponents();
}

// ---------------------------------------------------------------- UElement

UElement::UElement(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

UElement UElement::scalar(AlgebraPtr algebra, const Rational& c) {
  const std::size_t n = algebra->dimension();
  UElement out(std::move(algebra));
  out.add_term(PbwMonomial::unit(n), c);
  return out;
}

UElement UElement::generator(AlgebraPtr algebra, std::size_t index) {
  if (index >= algebra->dimension()) {
    throw DomainError("generator index out of range");
  }
  PbwMonomial m = PbwMonomial::unit(algebra->dimension()).with_delta(index, 1);
  UElement out(std::move(algebra));
  out.add_term(m, Rational(1));
  return out;
}

UElement UElement::monomial(AlgebraPtr algebra, PbwMonomial m, const Rational& c) {
  UElement out(std::move(algebra));
  out.add_term(m, c);
  return out;
}

int UElement::degree() const {
  if (terms_.empty()) {
    return -1;
  }
  return static_cast<int>(terms_.rbegin()->first.degree());
}

std::optional<Parity> UElement::parity() const {
  std::optional<Parity> seen;
  for (const auto& [m, c] : terms_) {
    Parity p = superenv::parity(*algebra_, m);
    if (seen && *seen != p) {
      return std::nullopt;
    }
    seen = p;
  }
  return seen.value_or(Parity::Even);
}

Rational UElement::coefficient(const PbwMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void UElement::add_term(const PbwMonomial& m, const Rational& c) {
  if (algebra_ && m.size() != algebra_->dimension()) {
    throw DomainError("monomial length does not match the algebra dimension");
  }
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

void require_same_algebra(const LieSuperalgebra& a, const LieSuperalgebra& b) {
  if (&a != &b && !(a == b)) {
    throw DomainError("elements belong to different algebras");
  }
}

UElement& UElement::operator+=(const UElement& rhs) {
  if (!algebra_) {
    algebra_ = rhs.algebra_;
  } else if (rhs.algebra_) {
    require_same_algebra(*algebra_, *rhs.algebra_);
  }
  for (const auto& [m, c] : rhs.terms_) {
    add_term(m, c);
  }
  return *this;
}

UElement& UElement::operator-=(const UElement& rhs) {
  return *this += -rhs;
}

UElement operator-(const UElement& a) {
  return Rational(-1) * a;
}

UElement operator*(const Rational& c, const UElement& a) {
  UElement out(a.algebra_);
  if (c.is_zero()) {
    return out;
  }
  for (const auto& [m, coeff] : a.terms_) {
    out.terms_.emplace(m, coeff * c);
  }
  return out;
}

bool operator==(const UElement& a, const UElement& b) {
  if (a.terms_ != b.terms_) {
    return false;
  }
  if (!a.algebra_ || !b.algebra_ || a.algebra_ == b.algebra_) {
    return true;
  }
  return *a.algebra_ == *b.algebra_;
}

// ---------------------------------------------------------------- products

namespace {

using Terms = UElement::Terms;

void accumulate(Terms& into, const PbwMonomial& m, const Rational& c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = into.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      into.erase(it);
    }
  }
}

void accumulate(Terms& into, const Terms& from, const Rational& scale) {
  for (const auto& [m, c] : from) {
    accumulate(into, m, c * scale);
  }
}

std::size_t last_factor(const PbwMonomial& m) {
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] > 0) {
      return i;
    }
  }
  return m.size();
}

// Right multiplication of normal monomials by generators, memoized for the
// lifetime of one product computation.
class Multiplier {
public:
  explicit Multiplier(const LieSuperalgebra& g) : g_(g) {}

  Terms times_generator(const PbwMonomial& m, std::size_t k) {
    auto key = std::make_pair(m, k);
    if (auto it = memo_.find(key); it != memo_.end()) {
      return it->second;
    }
    Terms out;
    const std::size_t l = last_factor(m);
    const Rational half(BigInt(1), BigInt(2));
    if (l == m.size() || l < k || (l == k && g_.parity(k) == Parity::Even)) {
      out.emplace(m.with_delta(k, 1), Rational(1));
    } else if (l == k) {
      // m' b_k b_k with b_k odd: b_k^2 = (1/2)[b_k, b_k]
      PbwMonomial rest = m.with_delta(k, -1);
      for (const auto& [j, c] : g_.bracket_terms(k, k)) {
        accumulate(out, times_generator(rest, j), c * half);
      }
    } else {
      // m' b_l b_k = (-1)^(|l||k|) m' b_k b_l + m' [b_l, b_k]
      PbwMonomial rest = m.with_delta(l, -1);
      const Rational sign(koszul_sign(g_.parity(l), g_.parity(k)));
      for (const auto& [mono, c] : times_generator(rest, k)) {
        accumulate(out, times_generator(mono, l), c * sign);
      }
      for (const auto& [j, c] : g_.bracket_terms(l, k)) {
        accumulate(out, times_generator(rest, j), c);
      }
    }
    memo_.emplace(std::move(key), out);
    return out;
  }

  Terms times(const PbwMonomial& a, const PbwMonomial& b) {
    Terms current{{a, Rational(1)}};
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (unsigned rep = 0; rep < b[i]; ++rep) {
        Terms next;
        for (const auto& [mono, c] : current) {
          accumulate(next, times_generator(mono, i), c);
        }
        current = std::move(next);
      }
    }
    return current;
  }

private:
  struct KeyLess {
    bool operator()(const std::pair<PbwMonomial, std::size_t>& a,
                    const std::pair<PbwMonomial, std::size_t>& b) const {
      if (a.second != b.second) {
        return a.second < b.second;
      }
      return a.first.exponents() < b.first.exponents();
    }
  };

  const LieSuperalgebra& g_;
  std::map<std::pair<PbwMonomial, std::size_t>, Terms, KeyLess> memo_;
};

} // namespace

UElement u_mul(const UElement& a, const UElement& b) {
  if (!a.algebra_ptr() || !b.algebra_ptr()) {
    throw DomainError("element without an algebra");
  }
  require_same_algebra(a.algebra(), b.algebra());
  Multiplier mul(a.algebra());
  UElement out(a.algebra_ptr());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      for (const auto& [m, c] : mul.times(ma, mb)) {
        out.add_term(m, c * ca * cb);
      }
    }
  }
  return out;
}

UElement straighten(const AlgebraPtr& g, std::span<const std::size_t> word) {
  const std::size_t n = g->dimension();
  for (std::size_t i : word) {
    if (i >= n) {
      throw DomainError("word letter out of range");
    }
  }
  using Word = std::vector<std::size_t>;
  const Rational half(BigInt(1), BigInt(2));
  std::map<Word, Rational> pending{{Word(word.begin(), word.end()), Rational(1)}};
  UElement out(g);

  auto merge = [](std::map<Word, Rational>& into, Word w, const Rational& c) {
    if (c.is_zero()) {
      return;
    }
    auto [it, inserted] = into.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) {
        into.erase(it);
      }
    }
  };

  while (!pending.empty()) {
    std::map<Word, Rational> next;
    for (const auto& [w, coeff] : pending) {
      std::size_t p = 0;
      while (p + 1 < w.size() &&
             !(w[p] > w[p + 1] || (w[p] == w[p + 1] && g->parity(w[p]) == Parity::Odd))) {
        ++p;
      }
      if (p + 1 >= w.size()) {
        PbwMonomial m = PbwMonomial::unit(n);
        for (std::size_t letter : w) {
          m = m.with_delta(letter, 1);
        }
        out.add_term(m, coeff);
        continue;
      }
      const std::size_t j = w[p];
      const std::size_t i = w[p + 1];
      auto splice = [&](std::vector<std::size_t> middle) {
        Word r(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
        r.insert(r.end(), middle.begin(), middle.end());
        r.insert(r.end(), w.begin() + static_cast<std::ptrdiff_t>(p + 2), w.end());
        return r;
      };
      if (i == j) {
        for (const auto& [k, c] : g->bracket_terms(i, i)) {
          merge(next, splice({k}), coeff * c * half);
        }
      } else {
        merge(next, splice({i, j}), coeff * Rational(koszul_sign(g->parity(i), g->parity(j))));
        for (const auto& [k, c] : g->bracket_terms(j, i)) {
          merge(next, splice({k}), coeff * c);
        }
      }
    }
    pending = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------- actions

UElement graded_component(const UElement& e, Parity p) {
  UElement out(e.algebra_ptr());
  for (const auto& [m, c] : e.terms()) {
    if (parity(e.algebra(), m) == p) {
      out.add_term(m, c);
    }
  }
  return out;
}

namespace {

template <class SignFn>
UElement signed_commutator(const UElement& u, const UElement& m, SignFn sign) {
  auto pu = u.parity();
  if (!pu) {
    throw DomainError("adjoint action needs a homogeneous element");
  }
  UElement out(m.algebra_ptr() ? m.algebra_ptr() : u.algebra_ptr());
  for (Parity p : {Parity::Even, Parity::Odd}) {
    UElement part = graded_component(m, p);
    if (part.is_zero()) {
      continue;
    }
    out += u * part - Rational(sign(*pu, p)) * (part * u);
  }
  return out;
}

} // namespace

UElement ad(const UElement& u, const UElement& m) {
  return signed_commutator(u, m, [](Parity pu, Parity pm) { return koszul_sign(pu, pm); });
}

UElement ad_twist(const UElement& u, const UElement& m) {
  return signed_commutator(u, m, [](Parity pu, Parity pm) {
    return koszul_sign(pu, pm + Parity::Odd);
  });
}

// ---------------------------------------------------------------- counting

std::vector<PbwMonomial> pbw_basis(const LieSuperalgebra& g, unsigned d) {
  const std::size_t n = g.dimension();
  std::vector<PbwMonomial> out;
  std::vector<unsigned> exps(n, 0);
  auto recurse = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
    if (i == n) {
      out.emplace_back(exps);
      return;
    }
    const unsigned cap = g.parity(i) == Parity::Odd ? std::min(remaining, 1u) : remaining;
    for (unsigned e = 0; e <= cap; ++e) {
      exps[i] = e;
      self(self, i + 1, remaining - e);
    }
    exps[i] = 0;
  };
  recurse(recurse, 0, d);
  std::sort(out.begin(), out.end(), PbwOrder{});
  return out;
}

std::vector<BigInt> filtered_counts(const LieSuperalgebra& g, unsigned n_max) {
  // exact[k]: monomials of total degree exactly k, built one generator at a time
  std::vector<BigInt> exact(n_max + 1, 0);
  exact[0] = 1;
  for (std::size_t i = 0; i < g.dimension(); ++i) {
    if (g.parity(i) == Parity::Even) {
      for (unsigned k = 1; k <= n_max; ++k) {
        exact[k] += exact[k - 1];
      }
    } else {
      for (unsigned k = n_max; k >= 1; --k) {
        exact[k] += exact[k - 1];
      }
    }
  }
  std::vector<BigInt> out(n_max + 1);
  BigInt running = 0;
  for (unsigned k = 0; k <= n_max; ++k) {
    running += exact[k];
    out[k] = running;
  }
  return out;
}

BigInt count_filtered(const LieSuperalgebra& g, unsigned n) {
  return filtered_counts(g, n).back();
}

GrowthReport growth_from_counts(std::vector<BigInt> counts) {
  GrowthReport report;
  report.counts = counts;
  std::vector<BigInt> diff = std::move(counts);
  for (unsigned k = 0; diff.size() >= 3; ++k) {
    std::vector<BigInt> next(diff.size() - 1);
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) {
      next[i] = diff[i + 1] - diff[i];
    }
    diff = std::move(next);
    std::size_t run = 0;
    while (run < diff.size() && diff[diff.size() - 1 - run] == 0) {
      ++run;
    }
    if (run >= 2) {
      report.conclusive = true;
      report.degree = k;
      report.window_begin = static_cast<unsigned>(diff.size() - run);
      report.window_end = static_cast<unsigned>(diff.size() - 1);
      return report;
    }
  }
  return report;
}

GrowthReport growth_degree(const LieSuperalgebra& g, unsigned n_max, bool bosonized) {
  if (n_max < g.dimension() + 2) {
    throw DomainError("growth estimate needs n_max >= dim g + 2");
  }
  auto counts = filtered_counts(g, n_max);
  if (bosonized) {
    for (auto& c : counts) {
      c *= 2;
    }
  }
  return growth_from_counts(std::move(counts));
}

} // namespace superenv
