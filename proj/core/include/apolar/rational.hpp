#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace apolar {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation, but mpq_class(p, q) needs canonicalize().
using Rat = mpq_class;

// "p/q", or "p" when q = 1.
std::string to_string(const Rat& r);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else or q = 0.
Rat parse_rat(std::string_view text);

}  // namespace apolar
