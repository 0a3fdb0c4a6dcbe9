#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polyval {

/// Exact rational scalar. Every quantity in the library (coordinates,
/// volumes, support values, valuation constants) is a Rat; nothing is ever
/// rounded. GMP keeps numerator and denominator coprime with den > 0.
using Rat = mpq_class;

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);

/// Parses "p/q", "p", "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rat parse_rat(std::string_view text);

/// p/q in lowest terms. Prefer this over Rat(p, q), which GMP leaves
/// uncanonicalised. Throws std::invalid_argument when q == 0.
Rat ratio(long p, long q);

inline Rat abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline int sign(const Rat& r) { return sgn(r); }

}  // namespace polyval
