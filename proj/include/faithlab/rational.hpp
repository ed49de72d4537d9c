#ifndef FAITHLAB_RATIONAL_HPP
#define FAITHLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace faithlab {

// Exact rational scalar. All probabilities, defects and distances in this
// library are Rat values; "defect = 0" is an exact predicate, never a
// tolerance.
using Rat = mpq_class;

// num/den as a canonical rational; den must be nonzero.
Rat rat(long num, long den = 1);

// Parses "p/q" or "p" (optional leading '-'). Decimal notation is rejected
// so no precision is lost silently.
Rat parse_rat(const std::string& text);

// Canonical "p/q" string with an explicit denominator ("1/2", "-3/1").
std::string rat_str(const Rat& value);

Rat rat_abs(const Rat& value);

// value^exp for small nonnegative exponents.
Rat rat_pow(const Rat& value, unsigned long exp);

std::vector<Rat> parse_rat_list(const std::string& comma_separated);

}  // namespace faithlab

#endif
