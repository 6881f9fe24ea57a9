#include "kirwan/lp.hpp"

namespace kirwan {

namespace {

// One tableau covering both phases: columns [original | artificial | rhs].
// Bland's rule throughout, so termination is unconditional.
class Simplex {
 public:
  Simplex(const RatMat& A, const RatVec& b) : m_(A.rows()), n_(A.cols()) {
    t_.resize(m_, n_ + m_ + 1);
    t_.leftCols(n_) = A;
    t_.block(0, n_, m_, m_) = RatMat::Identity(m_, m_);
    t_.col(n_ + m_) = b;
    for (Eigen::Index r = 0; r < m_; ++r) {
      if (t_(r, n_ + m_) < 0) {
        t_.row(r).head(n_) = -t_.row(r).head(n_);
        t_(r, n_ + r) = 1;  // keep the artificial column positive
        t_(r, n_ + m_) = -t_(r, n_ + m_);
      }
      basis_.push_back(n_ + r);
    }
  }

  // Minimizes cost over the current feasible region; artificial variables
  // are barred from entering when `allow_artificial` is false.
  // Returns false when unbounded.
  bool minimize(const RatVec& cost, bool allow_artificial) {
    const Eigen::Index cols = n_ + m_;
    reduced_ = RatVec::Zero(cols + 1);
    reduced_.head(cost.size()) = cost;
    for (Eigen::Index r = 0; r < m_; ++r) {
      const Eigen::Index bv = basis_[static_cast<size_t>(r)];
      if (bv < cost.size() && cost[bv] != 0) reduced_ -= cost[bv] * t_.row(r).transpose();
    }
    for (;;) {
      Eigen::Index enter = -1;
      const Eigen::Index limit = allow_artificial ? cols : n_;
      for (Eigen::Index c = 0; c < limit; ++c)
        if (reduced_[c] < 0) { enter = c; break; }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      Rational best = 0;
      for (Eigen::Index r = 0; r < m_; ++r) {
        if (t_(r, enter) <= 0) continue;
        Rational ratio = t_(r, cols) / t_(r, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<size_t>(r)] < basis_[static_cast<size_t>(leave)]))
          leave = r, best = ratio;
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  Rational objective() const { return -reduced_[n_ + m_]; }

  void drive_out_artificials() {
    for (Eigen::Index r = 0; r < m_; ++r) {
      if (basis_[static_cast<size_t>(r)] < n_) continue;
      for (Eigen::Index c = 0; c < n_; ++c)
        if (t_(r, c) != 0) { pivot(r, c); break; }
      // A row with no original-column pivot is a redundant constraint; its
      // artificial stays basic at value zero and never re-enters play.
    }
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(static_cast<size_t>(n_), Rational(0));
    for (Eigen::Index r = 0; r < m_; ++r) {
      const Eigen::Index bv = basis_[static_cast<size_t>(r)];
      if (bv < n_) x[static_cast<size_t>(bv)] = t_(r, n_ + m_);
    }
    return x;
  }

 private:
  void pivot(Eigen::Index row, Eigen::Index col) {
    t_.row(row) /= t_(row, col);
    for (Eigen::Index r = 0; r < m_; ++r) {
      if (r == row || t_(r, col) == 0) continue;
      t_.row(r) -= t_(r, col) * t_.row(row);
    }
    reduced_ -= reduced_[col] * t_.row(row).transpose();
    basis_[static_cast<size_t>(row)] = col;
  }

  Eigen::Index m_, n_;
  RatMat t_;
  RatVec reduced_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace

LpResult solve_lp(const RatMat& A, const RatVec& b, const RatVec& c) {
  const Eigen::Index m = A.rows(), n = A.cols();
  LpResult res;
  Simplex s(A, b);

  RatVec phase1 = RatVec::Zero(n + m);
  phase1.tail(m).setOnes();
  s.minimize(phase1, true);
  if (s.objective() != 0) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  s.drive_out_artificials();

  if (!s.minimize(c, false)) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.value = s.objective();
  res.x = s.solution();
  return res;
}

bool zero_in_convex_hull(const std::vector<RatVec>& points) {
  if (points.empty()) return false;
  const Eigen::Index d = points.front().size();
  const Eigen::Index k = static_cast<Eigen::Index>(points.size());
  RatMat A(d + 1, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    A.block(0, j, d, 1) = points[static_cast<size_t>(j)];
    A(d, j) = 1;
  }
  RatVec b = RatVec::Zero(d + 1);
  b[d] = 1;
  return solve_lp(A, b, RatVec::Zero(k)).status == LpStatus::Optimal;
}

bool cone_implies(const std::vector<RatVec>& generators, const std::vector<RatVec>& equalities,
                  const RatVec& target) {
  // Farkas: target = sum y_i g_i + sum (z_j+ - z_j-) e_j with y, z+- >= 0.
  const Eigen::Index d = target.size();
  const Eigen::Index g = static_cast<Eigen::Index>(generators.size());
  const Eigen::Index e = static_cast<Eigen::Index>(equalities.size());
  RatMat A(d, g + 2 * e);
  for (Eigen::Index j = 0; j < g; ++j) A.col(j) = generators[static_cast<size_t>(j)];
  for (Eigen::Index j = 0; j < e; ++j) {
    A.col(g + 2 * j) = equalities[static_cast<size_t>(j)];
    A.col(g + 2 * j + 1) = -equalities[static_cast<size_t>(j)];
  }
  return solve_lp(A, target, RatVec::Zero(g + 2 * e)).status == LpStatus::Optimal;
}

}  // namespace kirwan
