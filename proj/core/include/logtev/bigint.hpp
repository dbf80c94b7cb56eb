#ifndef LOGTEV_BIGINT_HPP
#define LOGTEV_BIGINT_HPP

#include <gmpxx.h>

#include <string>

namespace logtev {

/// Arbitrary-precision signed integer. All coefficient arithmetic in the
/// library goes through this type; there is no floating point anywhere.
using Int = mpz_class;

inline Int factorial(long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return r;
}

/// binom(n, k) for n >= 0; zero when k < 0, k > n, or n < 0.
inline Int binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

/// Falling-factorial binomial x(x-1)...(x-k+1)/k!, defined for any
/// integer x and k >= 0 (zero for k < 0). Agrees with binomial() when
/// x >= 0 and can be negative when x < 0, e.g. C(-1, 1) = -1.
inline Int binomial_generalized(long x, long k) {
  if (k < 0) return 0;
  Int num = 1;
  for (long i = 0; i < k; ++i) num *= Int(x - i);
  return num / factorial(k);
}

/// a^e with the convention 0^0 = 1.
inline Int int_pow(const Int& a, long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

inline std::string to_decimal(const Int& v) { return v.get_str(); }

}  // namespace logtev

#endif
