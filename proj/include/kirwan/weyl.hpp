#pragma once

// Weyl groups of type A products: permutations in one-line notation acting on
// coordinate blocks, lengths, reduced words, coset machinery.

#include "kirwan/numeric.hpp"

#include <cstdint>
#include <vector>

namespace kirwan {

/// Permutation of {0,..,n-1} in one-line notation: perm[i] = image of i.
using Permutation = std::vector<int>;

Permutation identity_perm(int n);
Permutation compose(const Permutation& a, const Permutation& b);  // (a*b)(i) = a(b(i))
Permutation inverse_perm(const Permutation& p);
int inversion_count(const Permutation& p);
bool next_permutation_lex(Permutation& p);

/// Reduced word in simple transpositions s_i = (i,i+1), 0-based positions.
std::vector<int> reduced_word(const Permutation& p);

/// Longest element i -> n-1-i.
Permutation longest_perm(int n);

/// One Weyl group element of a product of symmetric-group blocks. Torus
/// blocks contribute no permutation; `blocks` holds one permutation per
/// type-A block, in factor order.
struct WeylElement {
  std::vector<Permutation> blocks;

  int length() const;
  bool is_identity() const;
  friend bool operator==(const WeylElement& a, const WeylElement& b) = default;
};

/// (length, lexicographic one-line forms) ordering.
bool weyl_less(const WeylElement& a, const WeylElement& b);

WeylElement weyl_identity(const std::vector<int>& block_sizes);
WeylElement weyl_compose(const WeylElement& a, const WeylElement& b);
WeylElement weyl_inverse(const WeylElement& w);
std::vector<WeylElement> weyl_group(const std::vector<int>& block_sizes);

}  // namespace kirwan
