#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tropkit {

using Int = mpz_class;
using Rat = mpq_class;
using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

// Accepts "a", "-a" or "a/b"; result is canonicalized.
Rat parse_rational(const std::string& text);

// Lowest terms; omits the denominator when it is 1.
std::string format_rational(const Rat& value);

std::string format_int(const Int& value);

inline QVec to_rational(const ZVec& v) {
  QVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

} // namespace tropkit
