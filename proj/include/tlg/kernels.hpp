// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "tlg/laurent.hpp"

namespace tlg {

// Facet description of the Newton polytope of f projected onto the period
// coordinates: <normals[k], x> >= offsets[k] on N(f). An exponent e at stage j
// of a target power m may contribute to [f^m]_0 only if -e lies in
// (m-j)*N(f), i.e. <normals[k], e> <= -(m-j)*offsets[k] for every k.
struct PruneData {
  std::vector<int> coords;                     // period coordinates, in order
  std::vector<std::vector<long long>> normals;  // empty: no pruning possible
  std::vector<long long> offsets;
};

// Builds the pruning data for the given period coordinates. When the
// projected support is not full-dimensional the normals are left empty and
// callers fall back to unpruned powering.
PruneData make_prune_data(const LaurentPoly& f, const std::vector<int>& coords);

enum class KernelBackend { Reference, Serial, OpenMP };

struct KernelOptions {
  KernelBackend backend = KernelBackend::Serial;
  bool prune = true;
  int threads = 0;  // 0: OpenMP default
};

// Returns c[j] = [f^j] restricted to exponents vanishing on `coords`, for
// j = 0..order-1, each as a polynomial in the remaining variables (in their
// original order). Independent coefficients are exact for every backend.
//
// Reference: LaurentPoly::mul with a predicate, std::map storage.
// Serial / OpenMP: packed 64-bit exponent keys with an open-addressing
// accumulator; the OpenMP kernel partitions output keys across threads so
// every coefficient is accumulated by exactly one thread without locks.
std::vector<LaurentPoly> constant_term_sequence(const LaurentPoly& f, unsigned order,
                                                const std::vector<int>& coords,
                                                const KernelOptions& options = {});

}  // namespace tlg
