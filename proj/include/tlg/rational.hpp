// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tlg {

using Q = mpq_class;
using Z = mpz_class;

// Parses "p" or "p/q" with optional sign; rejects zero denominators and
// trailing garbage with a ParseError.
Q parse_rational(std::string_view text);

// Canonical decimal form "p" or "p/q" (lowest terms, positive denominator).
std::string to_string(const Q& q);
std::string to_string(const Z& z);

bool is_integer(const Q& q);

// gmpxx has no long long constructor; long is 64-bit on the supported targets.
inline Z to_z(long long v) { return Z(static_cast<long>(v)); }

// Factorials and binomials up to a growing bound. Tables are owned by the
// caller so that concurrent computations never share mutable state.
class FactorialTable {
 public:
  const Z& factorial(unsigned long n);
  Z binomial(long n, long k);

 private:
  std::vector<Z> table_{Z(1)};
};

}  // namespace tlg
