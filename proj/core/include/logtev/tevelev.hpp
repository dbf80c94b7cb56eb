#ifndef LOGTEV_TEVELEV_HPP
#define LOGTEV_TEVELEV_HPP

#include "logtev/bigint.hpp"
#include "logtev/gamma.hpp"

namespace logtev {

enum class XrsaStatus {
  /// The enumerativity inequalities hold; logtev equals the integral.
  Certified,
  /// A necessary inequality fails; logtev = 0 regardless of the integral.
  CertifiedZero,
  /// n < 3: the integral is a well-defined symbol but carries no
  /// geometric interpretation.
  Degenerate,
};

/// Full result of a logarithmic Tevelev computation on X_{r,s,a}.
struct TevReport {
  Int integral;      // top intersection number on the quasimap tower
  Int closed_value;  // closed-formula value; always equals integral
  Int logtev;
  XrsaStatus status = XrsaStatus::Certified;

  // Diagnostics.
  int n = 0;
  long k0 = 0;
  std::vector<int> m;
  bool ineq_mj = false;           // m_j <= n-1 for j = 1..r+s+1
  bool ineq_fiber_lower = false;  // sum_{j>=r+2} m_j >= (s-1)(n-1)
  bool ineq_fiber_upper = false;  // m_0 + sum_{j>=r+2} m_j <= s(n-1)
};

/// Closed-formula value
///   (prod_j m_j!) (prod_{j,v} mu_{j,v}) a^{k0-m0} binom(k0, m0),
/// zero when k0 < m0, with the convention 0^0 = 1.
Int closed_formula_xrsa(const GammaXrsa& g);

/// Direct symbolic route: push the incidence class zeta_1^{rn} zeta_2^{sn}
/// down the tower of projective bundles and extract the top coefficient
/// over the base product of projective lines. Cross-checked against
/// closed_formula_xrsa; a mismatch throws CrossCheckError (engine bug).
Int integral_xrsa(const GammaXrsa& g);

/// Integral, closed value, and enumerativity certificate.
TevReport logtev_xrsa(const GammaXrsa& g);

/// Blow-up of P^{r+s} along a linear P^{s-1}, all contact orders 1:
/// binom(s(n-d-1), k), where d is the degree and k the intersection with
/// the exceptional divisor.
Int tev_blowup_linear(int s, int n, long d, long k);

/// Hirzebruch-surface specialization (r = s = 1).
TevReport tev_hirzebruch(const GammaXrsa& g);

/// prod_j prod_{u>=1} #{v : mu_{j,v} = u}!, the factor dividing the
/// unsymmetrized degree when equal contact orders are identified.
Int repetition_factor(const std::vector<Partition>& mu);

}  // namespace logtev

#endif
