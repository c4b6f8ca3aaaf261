#pragma once

#include <gmpxx.h>

#include <string>

namespace delta {

using Int = mpz_class;
using Rat = mpq_class;

// floor(q) as an integer
Int floor_int(const Rat& q);

// nearest integer to q; ties (q = n + 1/2) round down, which never matters
// for ||.|| since both neighbours are at distance exactly 1/2
Int round_int(const Rat& q);

// fractional part in [0, 1)
Rat frac(const Rat& q);

// distance to the nearest integer, in [0, 1/2]
Rat dist_to_int(const Rat& q);

Int pow_int(const Int& base, unsigned long e);
Rat pow_rat(const Rat& base, unsigned long e);

// 2^-bits as an exact rational
Rat pow2_inv(unsigned long bits);

std::string rat_to_string(const Rat& q);    // "p/q" (or "p" when q == 1)
Rat rat_from_string(const std::string& s);  // accepts "p", "p/q" and "a.bcd"

// decimal rendering with the given number of fractional digits (truncated)
std::string rat_to_decimal(const Rat& q, int digits);

}  // namespace delta
