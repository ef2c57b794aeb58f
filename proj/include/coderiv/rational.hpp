#pragma once

#include <gmpxx.h>

#include <string>

namespace coderiv {

// Exact arbitrary-precision rational, always reduced, denominator > 0.
// mpq_class maintains canonical form through arithmetic; values entering
// from strings are canonicalized at the parse boundary (see parse.hpp).
using Rational = mpq_class;
using Integer = mpz_class;

inline bool scalar_is_zero(const Rational &r) { return sgn(r) == 0; }

// True iff r is the square of a rational. Zero counts as a square.
inline bool is_rational_square(const Rational &r) {
  if (sgn(r) < 0) return false;
  return mpz_perfect_square_p(r.get_num().get_mpz_t()) != 0 &&
         mpz_perfect_square_p(r.get_den().get_mpz_t()) != 0;
}

// "n" or "n/d".
inline std::string rational_str(const Rational &r) { return r.get_str(); }

}  // namespace coderiv
