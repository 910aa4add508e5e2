// SPDX-License-Identifier: Apache-2.0
#include "tlg/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <limits>

#include "tlg/error.hpp"
#include "tlg/polytope.hpp"

namespace tlg {

PruneData make_prune_data(const LaurentPoly& f, const std::vector<int>& coords) {
  PruneData d;
  d.coords = coords;
  if (coords.empty() || f.is_zero()) return d;
  std::vector<IVec> pts;
  for (const auto& [e, c] : f.terms()) {
    IVec p;
    for (int i : coords) p.push_back(e[i]);
    pts.push_back(p);
  }
  const LatticePolytope hull = LatticePolytope::hull(static_cast<int>(coords.size()), pts);
  if (!hull.full_dimensional()) return d;
  for (const auto& facet : hull.facets()) {
    d.normals.push_back(facet.normal);
    d.offsets.push_back(facet.offset);
  }
  return d;
}

namespace {

inline void fused_add(Z& acc, const Z& a, const Z& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline void fused_add(Q& acc, const Q& a, const Q& b) { acc += a * b; }

inline Q to_q(const Z& z) { return Q(z); }
inline Q to_q(const Q& q) { return q; }

template <typename T>
T from_q(const Q& q);
template <>
Z from_q<Z>(const Q& q) {
  return q.get_num();
}
template <>
Q from_q<Q>(const Q& q) {
  return q;
}

std::vector<std::string> remaining_vars(const LaurentPoly& f, const std::vector<int>& coords) {
  std::vector<std::string> out;
  for (size_t i = 0; i < f.nvars(); ++i) {
    if (std::find(coords.begin(), coords.end(), static_cast<int>(i)) == coords.end()) {
      out.push_back(f.vars()[i]);
    }
  }
  return out;
}

// Splits an exponent into (period part is zero?, remaining-variable part).
bool split_exponent(const Exponent& e, const std::vector<bool>& is_coord, Exponent* rest) {
  rest->clear();
  for (size_t i = 0; i < e.size(); ++i) {
    if (is_coord[i]) {
      if (e[i] != 0) return false;
    } else {
      rest->push_back(e[i]);
    }
  }
  return true;
}

std::vector<LaurentPoly> reference_sequence(const LaurentPoly& f, unsigned order, const PruneData& prune,
                                            const std::vector<std::string>& rest_vars) {
  const unsigned target = order - 1;
  std::vector<bool> is_coord(f.nvars(), false);
  for (int c : prune.coords) is_coord[c] = true;
  auto keep = [&](const Exponent& e, unsigned stage) {
    const long long remaining = static_cast<long long>(target) - stage;
    for (size_t k = 0; k < prune.normals.size(); ++k) {
      long long v = 0;
      for (size_t i = 0; i < prune.coords.size(); ++i) v += prune.normals[k][i] * e[prune.coords[i]];
      if (v > -remaining * prune.offsets[k]) return false;
    }
    return true;
  };
  std::vector<LaurentPoly> out;
  LaurentPoly power = LaurentPoly::constant(f.vars(), Q(1));
  Exponent rest;
  for (unsigned j = 0; j < order; ++j) {
    if (j > 0) {
      LaurentPoly next = mul(power, f);
      LaurentPoly kept(f.vars());
      for (const auto& [e, c] : next.terms()) {
        if (keep(e, j)) kept.add_term(e, c);
      }
      power = std::move(kept);
    }
    LaurentPoly c(rest_vars);
    for (const auto& [e, coef] : power.terms()) {
      if (split_exponent(e, is_coord, &rest)) c.add_term(rest, coef);
    }
    out.push_back(std::move(c));
  }
  return out;
}

// Open-addressing map from packed key to a dense index.
class KeyIndex {
 public:
  explicit KeyIndex(size_t expected) { reset(expected); }

  void reset(size_t expected) {
    size_t cap = 16;
    while (cap < 2 * expected + 2) cap <<= 1;
    slots_.assign(cap, kEmpty);
    mask_ = cap - 1;
    size_ = 0;
  }

  // Returns the stored index for key, or inserts next_index and returns it.
  template <typename KeyAt>
  uint32_t find_or_insert(int64_t key, uint32_t next_index, const KeyAt& key_at, bool* inserted) {
    if (2 * (size_ + 1) > slots_.size()) grow(key_at);
    size_t h = mix(key) & mask_;
    while (slots_[h] != kEmpty) {
      if (key_at(slots_[h]) == key) {
        *inserted = false;
        return slots_[h];
      }
      h = (h + 1) & mask_;
    }
    slots_[h] = next_index;
    ++size_;
    *inserted = true;
    return next_index;
  }

  static uint64_t mix(int64_t key) {
    uint64_t x = static_cast<uint64_t>(key);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
  }

 private:
  static constexpr uint32_t kEmpty = std::numeric_limits<uint32_t>::max();

  template <typename KeyAt>
  void grow(const KeyAt& key_at) {
    std::vector<uint32_t> old = std::move(slots_);
    slots_.assign(old.size() * 2, kEmpty);
    mask_ = slots_.size() - 1;
    for (uint32_t idx : old) {
      if (idx == kEmpty) continue;
      size_t h = mix(key_at(idx)) & mask_;
      while (slots_[h] != kEmpty) h = (h + 1) & mask_;
      slots_[h] = idx;
    }
  }

  std::vector<uint32_t> slots_;
  size_t mask_ = 0;
  size_t size_ = 0;
};

// Terms of one power stage: packed keys, coefficients and per-facet values.
template <typename T>
struct Stage {
  std::vector<int64_t> keys;
  std::vector<T> coeffs;
  std::vector<long long> vals;  // keys.size() * facet count
};

struct Packing {
  std::vector<long long> base, width;
  std::vector<int64_t> stride;
  bool ok = true;

  int64_t pack(const Exponent& e) const {
    int64_t k = 0;
    for (size_t i = 0; i < e.size(); ++i) k += (e[i] - base[i]) * stride[i];
    return k;
  }
  long long coord(int64_t key, size_t i) const { return base[i] + (key / stride[i]) % width[i]; }
};

Packing make_packing(const LaurentPoly& f, unsigned target) {
  Packing p;
  const Exponent lo = f.min_exponent(), hi = f.max_exponent();
  const size_t n = f.nvars();
  long double total = 1;
  int64_t stride = 1;
  for (size_t i = 0; i < n; ++i) {
    const long long b = static_cast<long long>(target) * std::min(lo[i], 0);
    const long long t = static_cast<long long>(target) * std::max(hi[i], 0);
    p.base.push_back(b);
    p.width.push_back(t - b + 1);
    p.stride.push_back(stride);
    total *= static_cast<long double>(t - b + 1);
    if (total > static_cast<long double>(int64_t(1) << 62)) {
      p.ok = false;
      return p;
    }
    stride *= (t - b + 1);
  }
  return p;
}

template <typename T>
struct Kernel {
  const LaurentPoly& f;
  const PruneData& prune;
  unsigned order;
  const Packing& packing;
  bool parallel;
  int threads;

  std::vector<int64_t> fkeys_delta;
  std::vector<T> fcoeffs;
  std::vector<long long> fvals;
  size_t nfacets = 0;

  Kernel(const LaurentPoly& f_, const PruneData& prune_, unsigned order_, const Packing& packing_,
         bool parallel_, int threads_)
      : f(f_), prune(prune_), order(order_), packing(packing_), parallel(parallel_), threads(threads_) {
    nfacets = prune.normals.size();
    for (const auto& [e, c] : f.terms()) {
      int64_t delta = 0;
      for (size_t i = 0; i < e.size(); ++i) delta += static_cast<int64_t>(e[i]) * packing.stride[i];
      fkeys_delta.push_back(delta);
      fcoeffs.push_back(from_q<T>(c));
      for (size_t k = 0; k < nfacets; ++k) fvals.push_back(facet_value(k, e));
    }
  }

  long long facet_value(size_t k, const Exponent& e) const {
    long long v = 0;
    for (size_t i = 0; i < prune.coords.size(); ++i) v += prune.normals[k][i] * e[prune.coords[i]];
    return v;
  }

  // Accumulates the product of `cur` with f into `out`, keeping only keys
  // owned by `part` of `parts` (all keys when parts == 1).
  void multiply(const Stage<T>& cur, unsigned stage, int part, int parts, Stage<T>* out) const {
    const long long remaining = static_cast<long long>(order - 1) - stage;
    std::vector<long long> bound(nfacets);
    for (size_t k = 0; k < nfacets; ++k) bound[k] = -remaining * prune.offsets[k];
    out->keys.clear();
    out->coeffs.clear();
    out->vals.clear();
    KeyIndex index(cur.keys.size() + fkeys_delta.size());
    auto key_at = [out](uint32_t idx) { return out->keys[idx]; };
    std::vector<long long> nv(nfacets);
    const size_t nf = fkeys_delta.size();
    for (size_t a = 0; a < cur.keys.size(); ++a) {
      if (sgn(cur.coeffs[a]) == 0) continue;
      const long long* av = cur.vals.data() + a * nfacets;
      for (size_t b = 0; b < nf; ++b) {
        const long long* bv = fvals.data() + b * nfacets;
        bool keep = true;
        for (size_t k = 0; k < nfacets; ++k) {
          nv[k] = av[k] + bv[k];
          if (nv[k] > bound[k]) {
            keep = false;
            break;
          }
        }
        if (!keep) continue;
        const int64_t key = cur.keys[a] + fkeys_delta[b];
        if (parts > 1 && static_cast<int>(KeyIndex::mix(key) % static_cast<uint64_t>(parts)) != part) continue;
        bool inserted = false;
        const uint32_t idx =
            index.find_or_insert(key, static_cast<uint32_t>(out->keys.size()), key_at, &inserted);
        if (inserted) {
          out->keys.push_back(key);
          out->coeffs.emplace_back(0);
          out->vals.insert(out->vals.end(), nv.begin(), nv.end());
        }
        fused_add(out->coeffs[idx], cur.coeffs[a], fcoeffs[b]);
      }
    }
  }

  void compact(Stage<T>* s) const {
    size_t w = 0;
    for (size_t r = 0; r < s->keys.size(); ++r) {
      if (sgn(s->coeffs[r]) == 0) continue;
      if (w != r) {
        s->keys[w] = s->keys[r];
        std::swap(s->coeffs[w], s->coeffs[r]);
        std::copy_n(s->vals.begin() + r * nfacets, nfacets, s->vals.begin() + w * nfacets);
      }
      ++w;
    }
    s->keys.resize(w);
    s->coeffs.resize(w);
    s->vals.resize(w * nfacets);
  }

  Stage<T> step(const Stage<T>& cur, unsigned stage) const {
    if (!parallel) {
      Stage<T> out;
      multiply(cur, stage, 0, 1, &out);
      compact(&out);
      return out;
    }
    const int parts = threads > 0 ? threads : omp_get_max_threads();
    std::vector<Stage<T>> pieces(parts);
#pragma omp parallel for num_threads(parts) schedule(static, 1)
    for (int p = 0; p < parts; ++p) {
      multiply(cur, stage, p, parts, &pieces[p]);
      compact(&pieces[p]);
    }
    Stage<T> out;
    for (auto& piece : pieces) {
      out.keys.insert(out.keys.end(), piece.keys.begin(), piece.keys.end());
      for (auto& c : piece.coeffs) out.coeffs.push_back(std::move(c));
      out.vals.insert(out.vals.end(), piece.vals.begin(), piece.vals.end());
    }
    return out;
  }

  std::vector<LaurentPoly> run(const std::vector<std::string>& rest_vars) const {
    std::vector<bool> is_coord(f.nvars(), false);
    for (int c : prune.coords) is_coord[c] = true;
    Stage<T> cur;
    cur.keys.push_back(packing.pack(Exponent(f.nvars(), 0)));
    cur.coeffs.emplace_back(1);
    cur.vals.assign(nfacets, 0);
    std::vector<LaurentPoly> out;
    Exponent e(f.nvars()), rest;
    for (unsigned j = 0; j < order; ++j) {
      if (j > 0) cur = step(cur, j);
      LaurentPoly c(rest_vars);
      for (size_t r = 0; r < cur.keys.size(); ++r) {
        for (size_t i = 0; i < e.size(); ++i) e[i] = static_cast<int>(packing.coord(cur.keys[r], i));
        if (split_exponent(e, is_coord, &rest)) c.add_term(rest, to_q(cur.coeffs[r]));
      }
      out.push_back(std::move(c));
    }
    return out;
  }
};

}  // namespace

std::vector<LaurentPoly> constant_term_sequence(const LaurentPoly& f, unsigned order,
                                                const std::vector<int>& coords,
                                                const KernelOptions& options) {
  for (int c : coords) {
    if (c < 0 || static_cast<size_t>(c) >= f.nvars()) fail("UnknownVariable", "period coordinate out of range");
  }
  const std::vector<std::string> rest_vars = remaining_vars(f, coords);
  if (order == 0) return {};
  if (f.is_zero()) {
    std::vector<LaurentPoly> out(order, LaurentPoly(rest_vars));
    out[0] = LaurentPoly::constant(rest_vars, Q(1));
    return out;
  }
  PruneData prune = options.prune ? make_prune_data(f, coords) : PruneData{coords, {}, {}};
  if (options.backend == KernelBackend::Reference) return reference_sequence(f, order, prune, rest_vars);
  const Packing packing = make_packing(f, order - 1);
  if (!packing.ok) return reference_sequence(f, order, prune, rest_vars);
  const bool parallel = options.backend == KernelBackend::OpenMP;
  if (f.has_integer_coefficients()) {
    return Kernel<Z>(f, prune, order, packing, parallel, options.threads).run(rest_vars);
  }
  return Kernel<Q>(f, prune, order, packing, parallel, options.threads).run(rest_vars);
}

}  // namespace tlg
