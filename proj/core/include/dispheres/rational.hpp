#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace dispheres {

/// Exact rational scalar. Every geometric decision in this library is made on
/// these; floating point never enters a predicate.
using Rat = mpq_class;

/// Canonical rational from integer parts. den must be nonzero.
Rat rat(long num, long den = 1);

/// Parses "p" or "p/q" in base 10 (optional sign). Decimal notation is
/// rejected by design: 0.3333 is not 1/3.
std::optional<Rat> parse_rational(std::string_view text);

/// Canonical "p/q" rendering with an explicit denominator: "0/1", "1/2", "1/1".
std::string to_fraction_string(const Rat& value);

/// Lossy conversion for plot output only.
double to_double(const Rat& value);

}  // namespace dispheres
