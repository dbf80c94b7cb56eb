#ifndef LOGTEV_NILRING_HPP
#define LOGTEV_NILRING_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "logtev/bigint.hpp"
#include "logtev/errors.hpp"

namespace logtev {

/// Index of one base P^1 factor, in [0, M).
using GeneratorId = int;

/// Square-free monomial in the generators H_0..H_{M-1}, encoded as a
/// bitmask: bit g set means the factor H_g is present. Degree = popcount.
using Monomial = std::uint64_t;

/// Bitmask encoding caps the generator count.
inline constexpr int kMaxGenerators = 64;

inline int monomial_degree(Monomial m) {
  return static_cast<int>(__builtin_popcountll(m));
}

/// Sparse element of Z[H_0,...,H_{M-1}] / (H_g^2). Immutable value type;
/// the generator count M travels with every value and mismatches between
/// operands are hard errors, not coercions.
class NilPoly {
 public:
  /// The zero polynomial in an M-generator ring.
  explicit NilPoly(int context);

  static NilPoly constant(int context, Int c);
  static NilPoly generator(int context, GeneratorId g);

  int context() const { return context_; }
  bool is_zero() const { return terms_.empty(); }

  /// Term map, monomial -> nonzero coefficient.
  const std::map<Monomial, Int>& terms() const { return terms_; }

  Int coefficient(Monomial m) const;

  /// Maximum total degree among stored terms; -1 for the zero polynomial.
  int degree() const;

  bool operator==(const NilPoly& other) const;
  bool operator!=(const NilPoly& other) const { return !(*this == other); }

  std::string to_string() const;

  friend NilPoly add(const NilPoly& p, const NilPoly& q);
  friend NilPoly sub(const NilPoly& p, const NilPoly& q);
  friend NilPoly scale(const NilPoly& p, const Int& c);
  friend NilPoly mul(const NilPoly& p, const NilPoly& q, int max_degree);
  friend NilPoly graded_part(const NilPoly& p, int d);
  friend NilPoly restrict_killing(const NilPoly& p, Monomial kill);

 private:
  void insert_term(Monomial m, Int c);

  int context_;
  std::map<Monomial, Int> terms_;
};

NilPoly add(const NilPoly& p, const NilPoly& q);
NilPoly sub(const NilPoly& p, const NilPoly& q);
NilPoly scale(const NilPoly& p, const Int& c);

/// Distributive product; terms whose monomials share a generator vanish
/// (H^2 = 0). Terms of degree > max_degree are pruned eagerly; pass
/// max_degree < 0 for no pruning beyond the ring's natural cutoff M.
NilPoly mul(const NilPoly& p, const NilPoly& q, int max_degree = -1);

/// Binary exponentiation; pow(p, 0) = 1.
NilPoly pow(const NilPoly& p, long k, int max_degree = -1);

/// Inverse of a polynomial with constant term +1 or -1, modulo terms of
/// degree > max_degree. Geometric series; terminates by nilpotency.
NilPoly invert_unit(const NilPoly& p, int max_degree);

/// Sum of the terms of total degree exactly d.
NilPoly graded_part(const NilPoly& p, int d);

/// Coefficient of the full monomial H_0 H_1 ... H_{M-1}; integration over
/// the product of projective lines.
Int top_coefficient(const NilPoly& p);

/// Drop every term containing a killed generator (restriction to the
/// sublocus where those classes vanish). The context is unchanged.
NilPoly restrict_killing(const NilPoly& p, Monomial kill);

inline NilPoly operator+(const NilPoly& p, const NilPoly& q) {
  return add(p, q);
}
inline NilPoly operator-(const NilPoly& p, const NilPoly& q) {
  return sub(p, q);
}
inline NilPoly operator*(const NilPoly& p, const NilPoly& q) {
  return mul(p, q);
}

}  // namespace logtev

#endif
