#include "kirwan/root_datum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace kirwan {

std::vector<int> RootDatum::weyl_block_sizes() const {
  std::vector<int> sizes;
  for (const auto& f : factors)
    if (f.kind != FactorKind::Torus) sizes.push_back(f.n);
  return sizes;
}

std::vector<RatVec> RootDatum::all_roots() const {
  std::vector<RatVec> roots = positive;
  for (const auto& a : positive) roots.push_back(-a);
  return roots;
}

Rational RootDatum::pair(const RatVec& weight, const RatVec& coweight) const {
  if (weight.size() != dim || coweight.size() != dim)
    throw std::invalid_argument("pair: dimension mismatch");
  Rational s = 0;
  for (Eigen::Index i = 0; i < weight.size(); ++i) s += weight[i] * coweight[i];
  return s;
}

Rational RootDatum::form_t(const RatVec& a, const RatVec& b) const {
  RatVec fb = form * b;
  Rational s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * fb[i];
  return s;
}

RatVec RootDatum::act(const WeylElement& w, const RatVec& v) const {
  RatVec out = v;
  size_t block = 0;
  for (size_t f = 0; f < factors.size(); ++f) {
    if (factors[f].kind == FactorKind::Torus) continue;
    const Permutation& p = w.blocks[block++];
    const int off = offsets[f];
    for (int i = 0; i < factors[f].n; ++i) out[off + p[static_cast<size_t>(i)]] = v[off + i];
  }
  return out;
}

bool RootDatum::is_dominant(const RatVec& v) const {
  for (size_t f = 0; f < factors.size(); ++f) {
    if (factors[f].kind == FactorKind::Torus) continue;
    const int off = offsets[f];
    for (int i = 0; i + 1 < factors[f].n; ++i)
      if (v[off + i] < v[off + i + 1]) return false;
  }
  return true;
}

RatVec RootDatum::project_to_t(const RatVec& v) const {
  RatVec out = v;
  for (size_t f = 0; f < factors.size(); ++f) {
    if (factors[f].kind != FactorKind::SU) continue;
    const int off = offsets[f];
    Rational mean = 0;
    for (int i = 0; i < factors[f].n; ++i) mean += v[off + i];
    mean /= factors[f].n;
    for (int i = 0; i < factors[f].n; ++i) out[off + i] -= mean;
  }
  return out;
}

bool RootDatum::in_t(const RatVec& v) const {
  for (size_t f = 0; f < factors.size(); ++f) {
    if (factors[f].kind != FactorKind::SU) continue;
    const int off = offsets[f];
    Rational sum = 0;
    for (int i = 0; i < factors[f].n; ++i) sum += v[off + i];
    if (sum != 0) return false;
  }
  return true;
}

std::pair<RatVec, WeylElement> RootDatum::dominant_pair(const RatVec& v) const {
  WeylElement w;
  RatVec out = v;
  for (size_t f = 0; f < factors.size(); ++f) {
    if (factors[f].kind == FactorKind::Torus) continue;
    const int off = offsets[f];
    const int n = factors[f].n;
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    // Stable sort descending gives the minimal-length sorting element.
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return v[off + a] > v[off + b]; });
    Permutation p(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
      p[static_cast<size_t>(order[static_cast<size_t>(j)])] = j;
      out[off + j] = v[off + order[static_cast<size_t>(j)]];
    }
    w.blocks.push_back(std::move(p));
  }
  return {out, w};
}

Int RootDatum::weyl_order() const {
  Int order = 1;
  for (int n : weyl_block_sizes())
    for (int i = 2; i <= n; ++i) order *= i;
  return order;
}

std::string RootDatum::describe() const {
  std::ostringstream os;
  for (size_t f = 0; f < factors.size(); ++f) {
    if (f) os << " x ";
    switch (factors[f].kind) {
      case FactorKind::SU: os << "su(" << factors[f].n << ")"; break;
      case FactorKind::U: os << "u(" << factors[f].n << ")"; break;
      case FactorKind::Torus: os << "torus(" << factors[f].n << ")"; break;
    }
  }
  return os.str();
}

RootDatum build_root_datum(const std::vector<GroupFactor>& factors) {
  if (factors.empty()) throw ConfigError("build_root_datum: no factors");
  RootDatum d;
  d.factors = factors;
  for (const auto& f : factors) {
    if (f.n < 1) throw ConfigError("build_root_datum: rank must be >= 1");
    if (f.kind == FactorKind::SU && f.n < 2)
      throw ConfigError("build_root_datum: su(n) needs n >= 2");
    d.offsets.push_back(d.dim);
    d.dim += f.n;
    d.rank += (f.kind == FactorKind::SU) ? f.n - 1 : f.n;
  }
  d.form = RatMat::Identity(d.dim, d.dim);
  for (size_t f = 0; f < factors.size(); ++f) {
    if (factors[f].kind == FactorKind::Torus) continue;
    const int off = d.offsets[f];
    const int n = factors[f].n;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        RatVec r = RatVec::Zero(d.dim);
        r[off + i] = 1;
        r[off + j] = -1;
        d.positive.push_back(r);
        if (j == i + 1) {
          d.simples.push_back(r);
          d.coroots.push_back(r);  // standard dot form: H_alpha = alpha
        }
      }
  }
  return d;
}

RootDatum build_root_datum(const std::string& kind, int n) {
  FactorKind k;
  if (kind == "su") k = FactorKind::SU;
  else if (kind == "u") k = FactorKind::U;
  else if (kind == "torus") k = FactorKind::Torus;
  else throw ConfigError("unsupported group kind '" + kind + "' (expected su|u|torus)");
  return build_root_datum({GroupFactor{k, n}});
}

std::vector<WeylElement> minimal_coset_reps(const RootDatum& datum, const RatVec& gamma) {
  std::map<RatVec, WeylElement, RatVecLess> best;
  for (const auto& w : datum.weyl_elements()) {
    RatVec image = datum.act(w, gamma);
    auto it = best.find(image);
    if (it == best.end() || weyl_less(w, it->second)) best[image] = w;
  }
  std::vector<WeylElement> reps;
  reps.reserve(best.size());
  for (auto& [image, w] : best) reps.push_back(w);
  std::sort(reps.begin(), reps.end(), weyl_less);
  return reps;
}

RatVec rho_gamma_c(const RootDatum& datum, const RatVec& gamma) {
  RatVec sum = RatVec::Zero(datum.dim);
  for (const auto& a : datum.positive_roots())
    if (datum.pair(a, gamma) < 0) sum += a;
  return sum;
}

}  // namespace kirwan
