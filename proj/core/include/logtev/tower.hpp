#ifndef LOGTEV_TOWER_HPP
#define LOGTEV_TOWER_HPP

#include <map>
#include <vector>

#include "logtev/gamma.hpp"
#include "logtev/nilring.hpp"

namespace logtev {

/// A degree-1 class: Z-linear combination of base generators. One
/// Chern-root-style factor c_1 of a line-bundle summand.
struct LinearClass {
  std::map<GeneratorId, long> coefficients;

  NilPoly to_poly(int context) const;
};

/// Polynomial in the relative hyperplane class zeta with NilPoly
/// coefficients, coeffs[u] attached to zeta^u. Trailing zero
/// coefficients are trimmed. zeta is a formal variable, never reduced by
/// its Chow-ring relation; only push-forward eliminates it.
class ZetaPoly {
 public:
  explicit ZetaPoly(int context);
  static ZetaPoly from_base(NilPoly p);
  /// The class zeta itself.
  static ZetaPoly zeta(int context);

  int context() const { return context_; }
  /// Highest zeta exponent with a nonzero coefficient; -1 when zero.
  int zeta_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of zeta^u (zero polynomial when out of range).
  NilPoly coeff(int u) const;

  bool operator==(const ZetaPoly& other) const;
  bool operator!=(const ZetaPoly& other) const { return !(*this == other); }

  friend ZetaPoly zadd(const ZetaPoly& p, const ZetaPoly& q);
  /// Product with eager pruning of terms of total (base + zeta) degree
  /// > max_total_degree; pass < 0 for no pruning.
  friend ZetaPoly zmul(const ZetaPoly& p, const ZetaPoly& q,
                       int max_total_degree);

 private:
  void trim();

  int context_;
  std::vector<NilPoly> coeffs_;
};

ZetaPoly zadd(const ZetaPoly& p, const ZetaPoly& q);
ZetaPoly zmul(const ZetaPoly& p, const ZetaPoly& q,
              int max_total_degree = -1);
ZetaPoly zpow(const ZetaPoly& p, long k, int max_total_degree = -1);
/// Part of total (base + zeta) degree exactly d.
ZetaPoly zgraded_part(const ZetaPoly& p, int d);

/// Rank and Segre pieces of a split bundle: segre[t] = S_t, with S_0 = 1.
struct BundleData {
  int rank = 0;
  std::vector<NilPoly> segre;
};

/// Segre pieces of the bundle with total Chern class prod_i (1 + root_i),
/// computed through degree max_degree.
BundleData segre_from_roots(const std::vector<LinearClass>& roots,
                            int context, int max_degree);
BundleData segre_from_root_polys(const std::vector<NilPoly>& roots,
                                 int max_degree);

/// H_j = sum_v mu_{j,v} H_{j,v} for the block of generators starting at
/// offset.
NilPoly weighted_block_class(int context, int offset, const Partition& mu);

/// Graded pieces (total degree 0..max_degree) of the series inverse of
/// (1 - H_0 - a*zeta) * prod_{j=r+2..r+s+1} (1 - H_j), where zeta counts
/// as degree 1. This is the Segre series of the upper bundle of the
/// quasimap tower for X_{r,s,a}.
std::vector<ZetaPoly> segre_e2_xrsa(const GammaXrsa& g, int max_degree);

/// Push-forward along a P(E)-bundle projection with the convention
///   pi_*(zeta^{rank-1+t}) = S_t(E)  for t >= 0,
///   pi_*(zeta^u)          = 0       for u < rank-1,
/// applied coefficient-wise (projection formula). Throws TruncationError
/// if a needed Segre piece was not precomputed.
NilPoly pushforward_zeta(const ZetaPoly& p, const BundleData& bundle);

}  // namespace logtev

#endif
