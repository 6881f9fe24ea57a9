#pragma once

// Multisets of T-weights with multiplicities: the bookkeeping type behind
// q = k~/k, V, and every graded piece E^{gamma=a}.

#include "kirwan/numeric.hpp"
#include "kirwan/root_datum.hpp"

#include <map>

namespace kirwan {

struct WeightedModule {
  std::map<RatVec, long, RatVecLess> mult;

  void add(const RatVec& weight, long m = 1);
  long dimension() const;
  bool empty() const { return mult.empty(); }
  WeightedModule direct_sum(const WeightedModule& other) const;
  bool closed_under_negation() const;

  friend bool operator==(const WeightedModule& a, const WeightedModule& b) = default;
};

struct GradedPieces {
  long dim_pos = 0, dim_zero = 0, dim_neg = 0;
  WeightedModule pos, zero, neg;
};

/// Split by the exact sign of <weight, gamma>.
GradedPieces graded_pieces(const RootDatum& datum, const WeightedModule& m, const RatVec& gamma);

/// Tr_gamma(M^{gamma>0}) = sum over weights with positive pairing of
/// mult * <weight, gamma>.
Rational trace_gamma_positive(const RootDatum& datum, const WeightedModule& m, const RatVec& gamma);

}  // namespace kirwan
