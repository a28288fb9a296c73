#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace fliess {

using Rat = boost::multiprecision::cpp_rational;

/// Renders as "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& r);

/// Accepts "p", "p/q" and plain decimals ("0.5" -> 1/2). Throws
/// std::invalid_argument on anything else.
Rat rat_from_string(std::string_view s);

}  // namespace fliess
