#include "kirwan/numeric.hpp"

#include <cmath>

namespace kirwan {

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational rationalize(double x) {
  if (!std::isfinite(x)) throw std::domain_error("rationalize: non-finite value");
  return Rational(x);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

RatVec primitive_scaled(const RatVec& v) {
  Int den_lcm = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    den_lcm = lcm(den_lcm, denominator(v[i]));
  Int num_gcd = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    num_gcd = gcd(num_gcd, Int(numerator(v[i]) * (den_lcm / denominator(v[i]))));
  if (num_gcd == 0) return v;
  Rational scale(den_lcm, num_gcd);
  RatVec out = v;
  for (Eigen::Index i = 0; i < out.size(); ++i) out[i] *= scale;
  return out;
}

RatVec primitive_canonical(const RatVec& v) {
  RatVec out = primitive_scaled(v);
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out[i] == 0) continue;
    if (out[i] < 0) out = -out;
    break;
  }
  return out;
}

namespace {

// Row echelon form in place; returns rank. Rows beyond the rank are zeroed.
int echelonize(RatMat& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  int rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (m(r, c) != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    m.row(rank).swap(m.row(pivot));
    const Rational inv = Rational(1) / m(rank, c);
    for (Eigen::Index cc = c; cc < cols; ++cc) m(rank, cc) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == rank || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (Eigen::Index cc = c; cc < cols; ++cc) m(r, cc) -= f * m(rank, cc);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int rank_of(const std::vector<RatVec>& rows) {
  if (rows.empty()) return 0;
  RatMat m(static_cast<Eigen::Index>(rows.size()), rows.front().size());
  for (size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  return echelonize(m);
}

std::vector<RatVec> kernel_of(const std::vector<RatVec>& rows, int n) {
  RatMat m(std::max<Eigen::Index>(1, static_cast<Eigen::Index>(rows.size())), n);
  m.setZero();
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("kernel_of: inconsistent dimension");
    m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  const int rank = echelonize(m);

  std::vector<Eigen::Index> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (int r = 0; r < rank; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      if (m(r, c) != 0) {
        pivot_col.push_back(c);
        is_pivot[static_cast<size_t>(c)] = true;
        break;
      }
    }
  }

  std::vector<RatVec> basis;
  for (Eigen::Index c = 0; c < n; ++c) {
    if (is_pivot[static_cast<size_t>(c)]) continue;
    RatVec k = RatVec::Zero(n);
    k[c] = 1;
    for (int r = 0; r < rank; ++r) k[pivot_col[static_cast<size_t>(r)]] = -m(r, c);
    basis.push_back(std::move(k));
  }
  return basis;
}

int lex_compare(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

}  // namespace kirwan
