#include "reesd/rational.hpp"

namespace reesd {

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt falling_factorial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt out = 1;
  for (unsigned long i = 0; i < k; ++i) out *= BigInt(n - i);
  return out;
}

long SplitMix64::nonzero_in_band(long bound) {
  if (bound < 1) throw std::invalid_argument("coefficient bound must be >= 1");
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound);  // candidates
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
  for (;;) {
    std::uint64_t u = next();
    if (u >= limit) continue;
    long v = static_cast<long>(u % span) - bound;  // [-bound, bound-1]
    return v >= 0 ? v + 1 : v;                     // skip 0
  }
}

}  // namespace reesd
