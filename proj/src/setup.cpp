#include "kirwan/setup.hpp"

#include "kirwan/lp.hpp"

#include <set>

namespace kirwan {

WeightedModule q_module_weights(const GroupSetup& setup) {
  WeightedModule q;
  if (setup.s <= 1) return q;
  const long copies = setup.s - 1;
  for (const auto& root : setup.datum.all_roots()) q.add(root, copies);
  if (setup.datum.rank > 0) q.add(RatVec::Zero(setup.datum.dim), copies * setup.datum.rank);
  return q;
}

std::vector<std::pair<RatVec, long>> nonzero_weights(const GroupSetup& setup) {
  std::vector<std::pair<RatVec, long>> out;
  const WeightedModule total = q_module_weights(setup).direct_sum(setup.v);
  for (const auto& [w, m] : total.mult) {
    RatVec p = setup.datum.project_to_t(w);
    if (!is_zero(p)) out.emplace_back(std::move(p), m);
  }
  return out;
}

std::vector<RatVec> nonzero_weight_lines(const GroupSetup& setup) {
  std::set<RatVec, RatVecLess> lines;
  for (const auto& [w, m] : nonzero_weights(setup)) lines.insert(primitive_canonical(w));
  return {lines.begin(), lines.end()};
}

HypothesisReport check_hypotheses(const GroupSetup& setup) {
  HypothesisReport rep;

  std::vector<RatVec> projected;
  for (const auto& [w, m] : nonzero_weights(setup)) projected.push_back(w);
  rep.stabilizer_zero = rank_of(projected) == setup.datum.rank;

  if (!rep.stabilizer_zero) {
    bool u_diagonal = false;
    for (const auto& f : setup.datum.factors)
      if (f.kind == FactorKind::U && setup.s >= 2) u_diagonal = true;
    if (u_diagonal)
      rep.refusal = "u(n) diagonal: shared central ideal — use su(n) + trace equality";
    else
      rep.refusal =
          "generic infinitesimal stabilizer is nontrivial (dim_T(q+V) > 0); "
          "only dim_K(M) = 0 setups are supported";
    return rep;
  }

  if (setup.has_v()) {
    std::vector<RatVec> weights;
    for (const auto& [w, m] : setup.v.mult) weights.push_back(setup.datum.project_to_t(w));
    rep.properness_ok = !zero_in_convex_hull(weights);
    rep.properness_asserted = setup.assume_proper;
    if (!rep.properness_ok && !rep.properness_asserted) {
      rep.refusal =
          "V fails the torus-level properness check (0 lies in the convex hull "
          "of its weights); set assume_proper to assert K-properness";
      return rep;
    }
  } else {
    rep.properness_ok = true;
  }
  return rep;
}

}  // namespace kirwan
