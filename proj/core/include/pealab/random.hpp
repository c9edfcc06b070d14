#pragma once

#include <cstdint>
#include <random>

#include "pealab/rational.hpp"

namespace pealab {

/// Convenience to build a canonical rational from int64 parts.
inline Rational make_rational(std::int64_t num, std::int64_t den) {
  Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

/// Seeded source of small rationals; numerators and denominators stay
/// within ±1000.
class RationalRng {
 public:
  explicit RationalRng(std::uint64_t seed) : engine_(seed) {}

  Rational signed_rational() { return make_rational(integer(-1000, 1000), integer(1, 1000)); }
  /// Strictly positive.
  Rational positive_rational() { return make_rational(integer(1, 1000), integer(1, 1000)); }
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pealab
