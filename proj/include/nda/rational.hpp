#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

namespace nda {

using Rational = boost::rational<std::int64_t>;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);
double to_double(const Rational& r);

/// Parses "p/q" or an integer.
Rational parse_rational(const std::string& text);

/// Exact rational equal to x when x = p/q with q <= max_den, else nullopt.
std::optional<Rational> exact_rational(double x, std::int64_t max_den = 1000000);

}  // namespace nda
