#pragma once

// Enumeration of rational admissible elements for K in K^s acting on T*K~
// (optionally x V): the primitive gamma whose vanishing weight set in q + V
// spans the hyperplane gamma-perp, both orientations kept.

#include "kirwan/setup.hpp"

#include <optional>

namespace kirwan {

struct AdmissibleElement {
  RatVec gamma;               // primitive integer form, in t
  WeightedModule certificate; // nonzero weights of q + V vanishing on gamma
  int span_rank = 0;          // rank of the certificate, must equal rank - 1
};

/// Every primitive +-gamma whose vanishing nonzero weights span gamma-perp.
/// Deterministic order (lex on gamma). Empty when the setup fails the
/// generic-stabilizer normalization (see check_hypotheses).
std::vector<AdmissibleElement> enumerate_admissible(const GroupSetup& setup);

/// Certificate when the primitive form of gamma is admissible; gamma = 0 is
/// a domain error. Scaling gamma by a positive rational never changes the
/// verdict.
std::optional<AdmissibleElement> is_admissible(const GroupSetup& setup, const RatVec& gamma);

}  // namespace kirwan
