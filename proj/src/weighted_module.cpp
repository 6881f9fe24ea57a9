#include "kirwan/weighted_module.hpp"

namespace kirwan {

void WeightedModule::add(const RatVec& weight, long m) {
  if (m == 0) return;
  if (m < 0) throw std::invalid_argument("WeightedModule: multiplicities must be positive");
  mult[weight] += m;
}

long WeightedModule::dimension() const {
  long d = 0;
  for (const auto& [w, m] : mult) d += m;
  return d;
}

WeightedModule WeightedModule::direct_sum(const WeightedModule& other) const {
  WeightedModule out = *this;
  for (const auto& [w, m] : other.mult) out.add(w, m);
  return out;
}

bool WeightedModule::closed_under_negation() const {
  for (const auto& [w, m] : mult) {
    auto it = mult.find(RatVec(-w));
    if (it == mult.end() || it->second != m) return false;
  }
  return true;
}

GradedPieces graded_pieces(const RootDatum& datum, const WeightedModule& m, const RatVec& gamma) {
  GradedPieces g;
  for (const auto& [w, mu] : m.mult) {
    const Rational p = datum.pair(w, gamma);
    if (p > 0) {
      g.dim_pos += mu;
      g.pos.add(w, mu);
    } else if (p < 0) {
      g.dim_neg += mu;
      g.neg.add(w, mu);
    } else {
      g.dim_zero += mu;
      g.zero.add(w, mu);
    }
  }
  return g;
}

Rational trace_gamma_positive(const RootDatum& datum, const WeightedModule& m, const RatVec& gamma) {
  Rational tr = 0;
  for (const auto& [w, mu] : m.mult) {
    const Rational p = datum.pair(w, gamma);
    if (p > 0) tr += mu * p;
  }
  return tr;
}

}  // namespace kirwan
