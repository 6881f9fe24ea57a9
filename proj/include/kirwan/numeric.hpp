#pragma once

// Exact arithmetic base layer: arbitrary-precision integers and rationals as
// Eigen scalars, plus the small amount of exact linear algebra (rank, kernel,
// primitive normal forms) the combinatorial modules need.

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kirwan {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

inline RatVec rat_vec(std::initializer_list<Rational> xs) {
  RatVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v[i++] = x;
  return v;
}

inline RatVec rat_vec(const std::vector<long>& xs) {
  RatVec v(static_cast<Eigen::Index>(xs.size()));
  for (size_t i = 0; i < xs.size(); ++i) v[static_cast<Eigen::Index>(i)] = xs[i];
  return v;
}

inline bool is_zero(const RatVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

/// "p/q" or "p"; exact round-trip with format_rational.
Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& r);

/// Exact value of the double (binary fraction); throws on NaN/inf.
Rational rationalize(double x);
double to_double(const Rational& r);

/// Scale v by the unique positive rational making its entries coprime
/// integers. Zero vector maps to itself.
RatVec primitive_scaled(const RatVec& v);

/// primitive_scaled followed by the sign convention: first nonzero entry
/// positive. Canonical representative of the line through v.
RatVec primitive_canonical(const RatVec& v);

/// Row rank over Q; rows are the vectors.
int rank_of(const std::vector<RatVec>& rows);

/// Basis of { x : <row, x> = 0 for all rows }, dimension = n - rank.
std::vector<RatVec> kernel_of(const std::vector<RatVec>& rows, int n);

/// Lexicographic comparison, for deterministic ordering of exact vectors.
int lex_compare(const RatVec& a, const RatVec& b);

struct RatVecLess {
  bool operator()(const RatVec& a, const RatVec& b) const { return lex_compare(a, b) < 0; }
};

}  // namespace kirwan
