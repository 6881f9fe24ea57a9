#pragma once

// GroupSetup: K embedded diagonally in K~ = K^s, acting on T*K~ or T*K~ x V,
// plus the standing-hypothesis checks that gate generation.

#include "kirwan/root_datum.hpp"
#include "kirwan/weighted_module.hpp"

#include <optional>
#include <string>

namespace kirwan {

struct GroupSetup {
  RootDatum datum;     // K
  int s = 1;           // copies, K~ = K^s
  WeightedModule v;    // T-weights of the K-module V; may be empty
  std::string v_rep;   // representation matrices reference, oracle use only
                       // (builtin spec such as "std+dual" or "file:PATH")
  bool assume_proper = false;

  bool has_v() const { return !v.empty(); }
};

/// Weights of q = k~/k for the diagonal embedding: every root of K with
/// multiplicity s-1 and the zero weight with multiplicity (s-1) * rank.
WeightedModule q_module_weights(const GroupSetup& setup);

/// Nonzero t-weights of q + V, projected to the trace-zero slice per su
/// factor and deduplicated to canonical primitive lines.
std::vector<RatVec> nonzero_weight_lines(const GroupSetup& setup);

/// Nonzero projected weights of q + V with multiplicity.
std::vector<std::pair<RatVec, long>> nonzero_weights(const GroupSetup& setup);

struct HypothesisReport {
  bool stabilizer_zero = false;   // dim_T(q + V) == 0
  bool properness_ok = false;     // torus-level: 0 not in conv(weights of V)
  bool properness_asserted = false;
  std::string refusal;            // empty when generation may proceed

  bool ok() const { return refusal.empty(); }
};

/// Standing hypotheses for generation: trivial generic infinitesimal
/// stabilizer (covers the shared-central-ideal refusal for u(n) diagonals)
/// and, when V is present, the torus-level properness check unless the
/// setup asserts properness explicitly.
HypothesisReport check_hypotheses(const GroupSetup& setup);

}  // namespace kirwan
