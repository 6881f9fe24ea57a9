#include "kirwan/admissible.hpp"

#include <algorithm>
#include <set>

namespace kirwan {

namespace {

// Rows cutting t out of R^dim: the all-ones functional on each su block.
std::vector<RatVec> slice_rows(const RootDatum& datum) {
  std::vector<RatVec> rows;
  for (size_t f = 0; f < datum.factors.size(); ++f) {
    if (datum.factors[f].kind != FactorKind::SU) continue;
    RatVec row = RatVec::Zero(datum.dim);
    for (int i = 0; i < datum.factors[f].n; ++i) row[datum.offsets[f] + i] = 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

bool normalization_holds(const GroupSetup& setup) {
  std::vector<RatVec> projected;
  for (const auto& [w, m] : nonzero_weights(setup)) projected.push_back(w);
  return rank_of(projected) == setup.datum.rank;
}

AdmissibleElement certify(const GroupSetup& setup, const RatVec& gamma) {
  AdmissibleElement el;
  el.gamma = gamma;
  const WeightedModule total = q_module_weights(setup).direct_sum(setup.v);
  std::vector<RatVec> projected;
  for (const auto& [w, m] : total.mult) {
    RatVec p = setup.datum.project_to_t(w);
    if (is_zero(p)) continue;
    if (setup.datum.pair(p, gamma) != 0) continue;
    el.certificate.add(w, m);
    projected.push_back(std::move(p));
  }
  el.span_rank = rank_of(projected);
  return el;
}

}  // namespace

std::vector<AdmissibleElement> enumerate_admissible(const GroupSetup& setup) {
  if (setup.datum.rank < 1 || !normalization_holds(setup)) return {};

  const std::vector<RatVec> lines = nonzero_weight_lines(setup);
  const std::vector<RatVec> slices = slice_rows(setup.datum);
  const int need = setup.datum.rank - 1;
  const int count = static_cast<int>(lines.size());
  if (need > count) return {};

  // Every (rank-1)-subset of weight lines that cuts a single direction out
  // of t is a candidate hyperplane; candidates are deduplicated before the
  // span verification.
  std::set<RatVec, RatVecLess> candidates;
  std::vector<int> pick(static_cast<size_t>(need));
  for (int i = 0; i < need; ++i) pick[static_cast<size_t>(i)] = i;
  for (;;) {
    std::vector<RatVec> rows = slices;
    for (int i : pick) rows.push_back(lines[static_cast<size_t>(i)]);
    auto kernel = kernel_of(rows, setup.datum.dim);
    if (kernel.size() == 1) candidates.insert(primitive_canonical(kernel.front()));

    if (need == 0) break;
    int k = need - 1;
    while (k >= 0 && pick[static_cast<size_t>(k)] == count - need + k) --k;
    if (k < 0) break;
    ++pick[static_cast<size_t>(k)];
    for (int j = k + 1; j < need; ++j)
      pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }

  std::vector<AdmissibleElement> out;
  for (const auto& line : candidates) {
    for (int sign : {+1, -1}) {
      RatVec gamma = sign > 0 ? line : RatVec(-line);
      AdmissibleElement el = certify(setup, gamma);
      if (el.span_rank == setup.datum.rank - 1) out.push_back(std::move(el));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const AdmissibleElement& a, const AdmissibleElement& b) {
              return lex_compare(a.gamma, b.gamma) < 0;
            });
  return out;
}

std::optional<AdmissibleElement> is_admissible(const GroupSetup& setup, const RatVec& gamma) {
  RatVec g = setup.datum.project_to_t(gamma);
  if (is_zero(g)) throw std::domain_error("is_admissible: gamma must be nonzero in t");
  if (!normalization_holds(setup)) return std::nullopt;
  g = primitive_scaled(g);
  AdmissibleElement el = certify(setup, g);
  if (el.span_rank != setup.datum.rank - 1) return std::nullopt;
  return el;
}

}  // namespace kirwan
