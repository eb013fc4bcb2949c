#pragma once

// Arithmetic functions: Bernoulli numbers, zeta at negative integers, divisor
// power sums, the Moebius function and square-divisor enumeration.

#include <cstdint>
#include <vector>

#include "cyclecone/rational.hpp"

namespace cyclecone {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Primes strictly increasing, exponents >= 1. Empty for m = 1.
using Factorization = std::vector<PrimePower>;

/// Largest input accepted by factorize (trial division).
inline constexpr std::uint64_t kFactorizeLimit = 10'000'000;

/// B_n with B_1 = -1/2. Results are memoized behind a mutex.
ExactRational bernoulli(unsigned n);

/// zeta(-s) = -B_{s+1}/(s+1) for s >= 1.
ExactRational zeta_negative(unsigned s);

/// sum_{d | m} d^s, m >= 1.
BigInt sigma(unsigned s, std::uint64_t m);

/// m in [1, kFactorizeLimit].
Factorization factorize(std::uint64_t m);

int moebius(std::uint64_t t);

/// All t >= 1 with t^2 | m, ascending.
std::vector<std::uint64_t> square_divisors(std::uint64_t m);

/// All positive divisors of m, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t m);

BigInt factorial(unsigned n);

}  // namespace cyclecone
