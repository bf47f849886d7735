#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace ellstab {

// Exact arithmetic backend for the whole library.  No floating point is used
// anywhere in the core modules; every comparison is an exact sign test.
using Int = mpz_class;
using Rat = mpq_class;

// den must be nonzero; result is canonical (lowest terms, den > 0).
Rat make_rat(const Int& num, const Int& den);

inline Rat rat(const Int& n) { return Rat(n); }
inline Rat rat(long n) { return Rat(n); }

bool is_integer(const Rat& q);
Int to_int(const Rat& q); // requires is_integer(q)

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

inline Rat sq(const Rat& q) { return q * q; }
inline Rat cube(const Rat& q) { return q * q * q; }

// std::max cannot deduce through gmp expression templates.
inline Rat rat_max(const Rat& a, const Rat& b) { return a >= b ? a : b; }
inline Rat rat_min(const Rat& a, const Rat& b) { return a <= b ? a : b; }

// Canonical string: "p" when the denominator is 1, otherwise "p/q" with
// q > 0 and gcd(p, q) = 1.  This is the one serialization format used by
// every CLI surface, so byte-level determinism reduces to it.
std::string rat_str(const Rat& q);
std::string int_str(const Int& n);

// Accepts "p" and "p/q" with optional sign; rejects everything else
// (including q = 0).  Whitespace is not trimmed.
std::optional<Rat> parse_rat(std::string_view text);
std::optional<Int> parse_int(std::string_view text);

struct RatLess {
  bool operator()(const Rat& a, const Rat& b) const { return cmp(a, b) < 0; }
};

} // namespace ellstab
