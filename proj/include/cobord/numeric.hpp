#ifndef COBORD_NUMERIC_HPP
#define COBORD_NUMERIC_HPP

#include <gmpxx.h>

#include <string>

#include "cobord/error.hpp"

namespace cobord {

// Exact arbitrary-precision arithmetic, backed by GMP. Int is a plain
// signed integer; Rat is always canonical (lowest terms, denominator > 0).
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) fail(errc::parse, "rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Parses "123", "-4" or "2/3"; decimal strings only.
Rat parse_rat(const std::string& text);

// Canonical decimal rendering: "n" when integral, otherwise "n/d".
std::string rat_to_string(const Rat& q);

// Floor division (round toward -inf), used by lattice reduction.
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace cobord

#endif
