#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace negtype {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& q);

/// True when the denominator is 1.
bool is_integer(const Rational& q);

/// Parse "p/q", an integer, or a decimal literal ("0.25", "-3", "2e-3")
/// into an exact rational. Returns nullopt on anything else.
std::optional<Rational> parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
std::string to_fraction_string(const Rational& q);

/// q^e for integer e. Negative e requires q != 0.
Rational pow_rational(const Rational& q, long e);

/// Exact n-th root of q >= 0 when numerator and denominator are both
/// perfect n-th powers; nullopt otherwise.
std::optional<Rational> nth_root_exact(const Rational& q, unsigned n);

/// Solve the dense n x n system A x = b exactly (A row-major).
/// Returns nullopt when A is singular.
std::optional<std::vector<Rational>> solve_linear_exact(int n,
                                                        std::vector<Rational> a,
                                                        std::vector<Rational> b);

} // namespace negtype
