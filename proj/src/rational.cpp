// SPDX-License-Identifier: Apache-2.0
#include "tlg/rational.hpp"

#include <cctype>

#include "tlg/error.hpp"

namespace tlg {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  size_t i = 0;
  if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Q parse_rational(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false)) {
    fail("ParseError", "malformed rational \"" + s + "\"");
  }
  Z n(num[0] == '+' ? num.substr(1) : num, 10);
  Z d(den, 10);
  if (d == 0) fail("ParseError", "zero denominator in \"" + s + "\"");
  Q q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Q& q) { return q.get_str(10); }

std::string to_string(const Z& z) { return z.get_str(10); }

bool is_integer(const Q& q) { return q.get_den() == 1; }

const Z& FactorialTable::factorial(unsigned long n) {
  while (table_.size() <= n) {
    table_.push_back(table_.back() * static_cast<unsigned long>(table_.size()));
  }
  return table_[n];
}

Z FactorialTable::binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Z(0);
  const Z& fn = factorial(static_cast<unsigned long>(n));
  const Z& fk = factorial(static_cast<unsigned long>(k));
  const Z& fnk = factorial(static_cast<unsigned long>(n - k));
  return fn / (fk * fnk);
}

}  // namespace tlg
