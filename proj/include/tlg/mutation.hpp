// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "tlg/laurent.hpp"
#include "tlg/polytope.hpp"

namespace tlg {

// A term whose pivot exponent is k is multiplied by factor^e with
// e = slice_powers[k] when present and e = power * k otherwise. The default
// is the substitution pivot -> pivot * factor^{-1}.
struct MutationRule {
  int power = -1;
  std::map<int, int> slice_powers;
};

// Applies the rule and clears denominators exactly. PivotInFactor when the
// factor involves the pivot; NotLaurent when the result is not a Laurent
// polynomial (the witness is invalid for this f).
LaurentPoly elementary_mutation(const LaurentPoly& f, const std::string& pivot, const LaurentPoly& factor,
                                const MutationRule& rule = {});

// Mutation of a polytope along a primitive dual vector w with factor polytope
// F (vertices in the hyperplane <w, x> = 0): the slice at level h is replaced
// by slice + h*F for h >= 0 and by the Minkowski difference slice - |h|*F for
// h < 0 (SliceNotDivisible when that difference does not sum back).
struct PolytopeMutation {
  IVec w;
  std::vector<IVec> factor;
};

LatticePolytope polytope_mutation_effect(const LatticePolytope& p, const PolytopeMutation& data);

// Polytope data matching elementary_mutation with the default rule: w is
// minus the pivot's dual basis vector and F is the Newton polytope of factor.
PolytopeMutation mutation_data_for(const LaurentPoly& f, const std::string& pivot, const LaurentPoly& factor);

}  // namespace tlg
