#include "kirwan/poly.hpp"

namespace kirwan {

Poly Poly::constant(const Rational& c) {
  Poly p;
  if (c != 0) p.terms[Monomial{}] = c;
  return p;
}

Poly Poly::variable(int i) {
  if (i < 0 || i >= kMaxPolyVars) throw std::domain_error("Poly::variable: index out of range");
  Monomial m;
  m.e[static_cast<size_t>(i)] = 1;
  Poly p;
  p.terms[m] = 1;
  return p;
}

Poly Poly::linear_form(const std::vector<std::pair<int, Rational>>& coeffs) {
  Poly p;
  for (const auto& [i, c] : coeffs) {
    if (c == 0) continue;
    Monomial m;
    if (i < 0 || i >= kMaxPolyVars) throw std::domain_error("Poly::linear_form: index out of range");
    m.e[static_cast<size_t>(i)] = 1;
    p.add_term(m, c);
  }
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms) d = std::max(d, m.degree());
  return d;
}

Rational Poly::constant_term() const { return coefficient(Monomial{}); }

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms.find(m);
  return it == terms.end() ? Rational(0) : it->second;
}

Poly& Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return *this;
  auto [it, inserted] = terms.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  for (const auto& [m, c] : o.terms) out.add_term(m, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  for (const auto& [m, c] : o.terms) out.add_term(m, -c);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out;
  for (const auto& [ma, ca] : terms)
    for (const auto& [mb, cb] : o.terms) {
      Monomial m;
      for (int i = 0; i < kMaxPolyVars; ++i) {
        const int e = ma.e[static_cast<size_t>(i)] + mb.e[static_cast<size_t>(i)];
        if (e > 255) throw std::overflow_error("Poly: exponent overflow");
        m.e[static_cast<size_t>(i)] = static_cast<uint8_t>(e);
      }
      out.add_term(m, ca * cb);
    }
  return out;
}

Poly Poly::operator*(const Rational& c) const {
  Poly out;
  if (c == 0) return out;
  for (const auto& [m, k] : terms) out.terms[m] = k * c;
  return out;
}

Poly Poly::swap_adjacent(int i) const {
  Poly out;
  for (const auto& [m, c] : terms) {
    Monomial s = m;
    std::swap(s.e[static_cast<size_t>(i)], s.e[static_cast<size_t>(i) + 1]);
    out.add_term(s, c);
  }
  return out;
}

Poly Poly::divided_difference(int i) const {
  // Monomial-wise: (x^m - x^{s_i m})/(x_i - x_{i+1}) is the geometric sum
  // x^rest (x_i x_{i+1})^b sum_{t=0}^{d-1} x_i^{d-1-t} x_{i+1}^t for
  // exponents a > b, d = a - b, and the negated mirror for a < b.
  Poly out;
  const auto ui = static_cast<size_t>(i);
  for (const auto& [m, c] : terms) {
    const int a = m.e[ui], b = m.e[ui + 1];
    if (a == b) continue;
    const bool flip = a < b;
    const int lo = std::min(a, b), d = std::abs(a - b);
    Monomial base = m;
    for (int t = 0; t < d; ++t) {
      base.e[ui] = static_cast<uint8_t>(lo + d - 1 - t);
      base.e[ui + 1] = static_cast<uint8_t>(lo + t);
      out.add_term(base, flip ? -c : c);
    }
  }
  return out;
}

Poly Poly::homogeneous_part(int d) const {
  Poly out;
  for (const auto& [m, c] : terms)
    if (m.degree() == d) out.terms[m] = c;
  return out;
}

Poly schubert_polynomial(const Permutation& w, int var_offset) {
  const int n = static_cast<int>(w.size());
  Poly p = Poly::constant(1);
  // Staircase monomial of the longest element.
  {
    Monomial m;
    for (int i = 0; i < n; ++i) m.e[static_cast<size_t>(var_offset + i)] = static_cast<uint8_t>(n - 1 - i);
    p = Poly();
    p.terms[m] = 1;
  }
  const Permutation w0w = compose(longest_perm(n), w);
  for (int j : reduced_word(w0w)) p = p.divided_difference(var_offset + j);
  return p;
}

Rational schubert_coefficient(const Poly& f, const Permutation& w, int var_offset) {
  Poly g = f;
  for (int j : reduced_word(inverse_perm(w))) {
    if (g.is_zero()) return 0;
    g = g.divided_difference(var_offset + j);
  }
  return g.constant_term();
}

}  // namespace kirwan
