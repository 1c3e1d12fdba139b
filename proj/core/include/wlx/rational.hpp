#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace wlx {

/// Arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in canonical form: gcd(|num|, den) = 1,
/// den > 0, zero is 0/1.
using Rat = boost::multiprecision::cpp_rational;

/// Builds num/den in canonical form. Throws wlx::ModelError if den == 0.
Rat make_rat(const Int& num, const Int& den);

/// Binomial coefficient C(n, k); zero when n < k. Requires n >= 0.
Int binomial(const Int& n, unsigned k);

/// "p/q", or the plain decimal string when the value is integral.
std::string rat_to_string(const Rat& q);

/// The value as int64_t if it fits, nullopt otherwise.
std::optional<std::int64_t> to_int64(const Int& n);

} // namespace wlx
