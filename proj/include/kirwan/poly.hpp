#pragma once

// Sparse multivariate polynomials over Q with divided-difference operators
// and type-A Schubert polynomials: the Borel-presentation engine behind the
// flag-variety cohomology module.

#include "kirwan/numeric.hpp"
#include "kirwan/weyl.hpp"

#include <array>
#include <cstdint>
#include <map>

namespace kirwan {

inline constexpr int kMaxPolyVars = 16;

struct Monomial {
  std::array<uint8_t, kMaxPolyVars> e{};

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  auto operator<=>(const Monomial&) const = default;
};

class Poly {
 public:
  std::map<Monomial, Rational> terms;

  static Poly zero() { return {}; }
  static Poly constant(const Rational& c);
  static Poly variable(int i);
  /// sum_i coeffs[i] * x_i over the given variable indices.
  static Poly linear_form(const std::vector<std::pair<int, Rational>>& coeffs);

  bool is_zero() const { return terms.empty(); }
  int degree() const;  // max total degree, -1 for zero
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  Poly& add_term(const Monomial& m, const Rational& c);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;

  /// Transposition of the variables i and i+1.
  Poly swap_adjacent(int i) const;
  /// Divided difference (f - s_i f) / (x_i - x_{i+1}); exact.
  Poly divided_difference(int i) const;
  /// Homogeneous part of total degree d.
  Poly homogeneous_part(int d) const;
};

/// Schubert polynomial of w in S_n using variables var_offset..var_offset+n-1,
/// by divided differences from the staircase monomial of the longest element.
Poly schubert_polynomial(const Permutation& w, int var_offset);

/// Coefficient of the Schubert polynomial of w in the expansion of f
/// (variables var_offset..): the constant term after applying the divided
/// differences of a reduced word of w^{-1} in order.
Rational schubert_coefficient(const Poly& f, const Permutation& w, int var_offset);

}  // namespace kirwan
