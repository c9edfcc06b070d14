#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace pealab {

/// Exact arbitrary-precision rational. Always kept canonical.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// "p/q" with q > 0, including integers ("3/1", "0/1").
std::string to_string(const Rational& q);

/// Accepts "p", "p/q" and "-p/q". Throws pealab::Error on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

RationalVector zeros(std::size_t n);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace pealab
