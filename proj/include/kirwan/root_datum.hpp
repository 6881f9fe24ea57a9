#pragma once

// Root systems of type A (su(n), u(n)) and torus factors, in u(n)-style R^n
// coordinates: roots e_i - e_j, dominant chamber = weakly decreasing blocks,
// su(n) on the trace-zero slice. All data exact.

#include "kirwan/numeric.hpp"
#include "kirwan/weyl.hpp"

#include <string>
#include <vector>

namespace kirwan {

enum class FactorKind { SU, U, Torus };

struct GroupFactor {
  FactorKind kind = FactorKind::SU;
  int n = 1;  // matrix size for su/u, dimension for torus

  friend bool operator==(const GroupFactor& a, const GroupFactor& b) = default;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact root-system data for a product of su(n)/u(n)/torus factors.
struct RootDatum {
  std::vector<GroupFactor> factors;
  std::vector<int> offsets;       // coordinate offset of each factor
  int dim = 0;                    // total coordinate length
  int rank = 0;                   // dim t (su factors contribute n-1)
  RatMat form;                    // invariant form on t, default standard dot
  std::vector<RatVec> positive;   // positive roots e_i - e_j, i < j per block
  std::vector<RatVec> simples;    // adjacent e_i - e_{i+1}
  std::vector<RatVec> coroots;    // simple coroots (same coordinates, dot form)

  std::vector<int> weyl_block_sizes() const;  // type-A blocks only, factor order
  const std::vector<RatVec>& positive_roots() const { return positive; }
  std::vector<RatVec> all_roots() const;

  /// Canonical dual pairing of t* against t (same coordinates).
  Rational pair(const RatVec& weight, const RatVec& coweight) const;
  /// The invariant form on t.
  Rational form_t(const RatVec& a, const RatVec& b) const;

  RatVec act(const WeylElement& w, const RatVec& v) const;
  bool is_dominant(const RatVec& v) const;
  /// Projection of an arbitrary coordinate vector onto t (su blocks: subtract
  /// the block mean). u/torus blocks are untouched.
  RatVec project_to_t(const RatVec& v) const;
  bool in_t(const RatVec& v) const;  // su blocks sum to zero

  /// Dominant representative and the minimal-length w with w v = v+.
  std::pair<RatVec, WeylElement> dominant_pair(const RatVec& v) const;

  WeylElement identity() const { return weyl_identity(weyl_block_sizes()); }
  std::vector<WeylElement> weyl_elements() const { return weyl_group(weyl_block_sizes()); }
  Int weyl_order() const;

  std::string describe() const;
};

/// Parses kinds "su" | "u" | "torus"; rank >= 1 (su needs n >= 2).
RootDatum build_root_datum(const std::vector<GroupFactor>& factors);
RootDatum build_root_datum(const std::string& kind, int n);

/// One minimal-length representative per coset of the stabilizer W^gamma,
/// ordered by (length, lex one-line form). Brute force over W.
std::vector<WeylElement> minimal_coset_reps(const RootDatum& datum, const RatVec& gamma);

/// Sum of the positive roots pairing strictly negatively with gamma.
RatVec rho_gamma_c(const RootDatum& datum, const RatVec& gamma);

}  // namespace kirwan
