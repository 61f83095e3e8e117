#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mcgsig {

// Exact arithmetic throughout; no floating point anywhere in the library.
using Int = mpz_class;
using Rat = mpq_class;

/// Builds a rational in lowest terms with positive denominator.
Rat make_rat(const Int& num, const Int& den);

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

/// Parses "p/q" or "n". Throws std::invalid_argument on malformed input.
Rat rat_from_string(std::string_view s);

/// Formats as "p/q", or "n" when the denominator is 1.
std::string rat_to_string(const Rat& r);

inline int sign_of(const Rat& r) { return sgn(r); }
inline int sign_of(const Int& n) { return sgn(n); }

}  // namespace mcgsig
