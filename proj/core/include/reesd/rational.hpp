#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace reesd {

// Exact rational scalar: canonical num/den with positive denominator,
// maintained automatically by GMP.
using Rational = mpq_class;
using BigInt = mpz_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }

// "3", "-7/2" style; denominator omitted when 1.
std::string to_string(const Rational& r);

// Parses an integer or num/den pair. Throws std::invalid_argument on junk
// or zero denominator.
Rational rational_from_string(const std::string& text);

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);
// n (n-1) ... (n-k+1); zero when k > n.
BigInt falling_factorial(unsigned long n, unsigned long k);

// Deterministic PRNG used for reproducible random ideals ("splitmix64-v1").
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform over [-bound, bound] \ {0}, via rejection (no modulo bias).
  long nonzero_in_band(long bound);

 private:
  std::uint64_t state_;
};

}  // namespace reesd
