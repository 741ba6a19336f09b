#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "pervlab/errors.hpp"

namespace pervlab {

// Exact rational scalar. cpp_rational keeps lowest terms with positive
// denominator, which is exactly the invariant every module relies on.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p/q" or a plain integer (optional sign, arbitrary precision).
Rat rat_from_string(const std::string& s);

// Prints "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& r);

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

}  // namespace pervlab
