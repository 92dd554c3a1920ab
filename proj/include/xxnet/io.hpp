#pragma once

#include <string>

namespace xxnet {

/// Fixed 17 significant digits: round-trips any double.
std::string format_g17(double x);

/// Shortest decimal form that still round-trips exactly (tries increasing
/// precision until the parse recovers the same bits).
std::string format_shortest(double x);

/// Parses a decimal string such as "3.8" or "19/5" into an exact rational.
/// Throws ValidationError for anything not exactly representable.
struct ParsedRational {
    long long num = 0;
    long long den = 1;
};
ParsedRational parse_rational(const std::string& text);

}  // namespace xxnet
