#include "kirwan/weyl.hpp"

#include <algorithm>
#include <numeric>

namespace kirwan {

Permutation identity_perm(int n) {
  Permutation p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(b.size());
  for (size_t i = 0; i < b.size(); ++i) c[i] = a[static_cast<size_t>(b[i])];
  return c;
}

Permutation inverse_perm(const Permutation& p) {
  Permutation inv(p.size());
  for (size_t i = 0; i < p.size(); ++i) inv[static_cast<size_t>(p[i])] = static_cast<int>(i);
  return inv;
}

int inversion_count(const Permutation& p) {
  int count = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++count;
  return count;
}

bool next_permutation_lex(Permutation& p) { return std::next_permutation(p.begin(), p.end()); }

std::vector<int> reduced_word(const Permutation& p) {
  // Bubble sort: each adjacent swap that removes an inversion records one
  // letter; reading the swaps in application order gives p = s_{i1} ... s_{ik}
  // with the leftmost letter applied last.
  std::vector<int> word;
  Permutation q = p;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < q.size(); ++i) {
      if (q[i] > q[i + 1]) {
        std::swap(q[i], q[i + 1]);
        word.push_back(static_cast<int>(i));
        changed = true;
      }
    }
  }
  // q is now the identity and p = product of s_i over word applied right to
  // left; reverse so that word[0] is the first factor of p.
  std::reverse(word.begin(), word.end());
  return word;
}

Permutation longest_perm(int n) {
  Permutation p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = n - 1 - i;
  return p;
}

int WeylElement::length() const {
  int len = 0;
  for (const auto& b : blocks) len += inversion_count(b);
  return len;
}

bool WeylElement::is_identity() const {
  for (const auto& b : blocks)
    for (size_t i = 0; i < b.size(); ++i)
      if (b[i] != static_cast<int>(i)) return false;
  return true;
}

bool weyl_less(const WeylElement& a, const WeylElement& b) {
  const int la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  return a.blocks < b.blocks;
}

WeylElement weyl_identity(const std::vector<int>& block_sizes) {
  WeylElement w;
  for (int n : block_sizes) w.blocks.push_back(identity_perm(n));
  return w;
}

WeylElement weyl_compose(const WeylElement& a, const WeylElement& b) {
  WeylElement c;
  c.blocks.reserve(a.blocks.size());
  for (size_t k = 0; k < a.blocks.size(); ++k) c.blocks.push_back(compose(a.blocks[k], b.blocks[k]));
  return c;
}

WeylElement weyl_inverse(const WeylElement& w) {
  WeylElement v;
  v.blocks.reserve(w.blocks.size());
  for (const auto& b : w.blocks) v.blocks.push_back(inverse_perm(b));
  return v;
}

std::vector<WeylElement> weyl_group(const std::vector<int>& block_sizes) {
  std::vector<WeylElement> out{weyl_identity(block_sizes)};
  for (size_t k = 0; k < block_sizes.size(); ++k) {
    std::vector<WeylElement> next;
    Permutation p = identity_perm(block_sizes[k]);
    do {
      for (const auto& w : out) {
        WeylElement e = w;
        e.blocks[k] = p;
        next.push_back(std::move(e));
      }
    } while (std::next_permutation(p.begin(), p.end()));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), weyl_less);
  return out;
}

}  // namespace kirwan
