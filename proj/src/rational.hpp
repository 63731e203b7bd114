#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace apkappa {

// Exact rational scalar. All arithmetic in this library is over Q; nothing
// here ever rounds. mpq_class keeps values canonical (lowest terms,
// positive denominator) after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_of(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Canonical wire form is "num/den" with den > 0 and gcd(num, den) = 1.
inline std::string rational_to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "num/den" or a bare integer "num".
inline Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
  r.canonicalize();
  return r;
}

inline Rational binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace apkappa
