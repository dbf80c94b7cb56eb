#ifndef LOGTEV_BLOWUP_HPP
#define LOGTEV_BLOWUP_HPP

#include <optional>
#include <vector>

#include "logtev/bigint.hpp"
#include "logtev/gamma.hpp"
#include "logtev/nilring.hpp"
#include "logtev/tower.hpp"

namespace logtev {

enum class Blp2Status {
  CertifiedEqual,   // logtev equals the integral
  CertifiedZero,    // logtev = 0 regardless of the integral
  Uncertified,      // neither gate applies; logtev withheld
  ExcessCorrected,  // integral minus the excess-component contributions
};

struct ExcessData {
  Int component_count;
  Int per_component;
  Int corrected;
};

struct Blp2Report {
  Int integral;
  Int closed_value;  // always equals integral
  Blp2Status status = Blp2Status::Uncertified;
  std::optional<Int> logtev;  // absent when Uncertified
  std::optional<ExcessData> excess;

  // Diagnostics.
  int n = 0;
  std::vector<int> m;  // m_1..m_5 at indices 0..4
  bool certified_equal_pred = false;
  bool certified_zero_pred = false;
  bool degenerate = false;
};

/// Top intersection number of the incidence class (zeta-H_1)^n(zeta-H_2)^n
/// on the rank-3 projective bundle of quasimaps. Cross-checked against
/// closed_formula_blp2; a mismatch throws CrossCheckError.
Int integral_blp2(const GammaBlp2& g);

/// (prod m_j!)(prod mu_{j,v}) binom(n-1-m_5, m_1) binom(n-1-m_4, m_2),
/// with the falling-factorial binomial so the identity with the integral
/// is unconditional. When m_4, m_5 <= n-1 this is the ordinary product,
/// vanishing exactly when m_1+m_5 > n-1 or m_2+m_4 > n-1.
Int closed_formula_blp2(const GammaBlp2& g);

/// Three-way enumerativity status: CertifiedEqual when
/// max(m_1+m_3, m_2+m_3, m_4, m_5) <= n-1, CertifiedZero when
/// max(m_1+m_5, m_2+m_4, m_3) >= n, otherwise Uncertified with logtev
/// withheld.
Blp2Report status_blp2(const GammaBlp2& g);

/// Excess-intersection correction for the supported configuration:
/// mu_1 = mu_2 = (1), mu_3 = (1^{n-1}), m_4 = m_5 = 1, d = 2 + m_3.
/// The correction formula is not established outside this pattern;
/// anything else throws ConfigurationError.
Blp2Report excess_corrected_logtev(const GammaBlp2& g);

/// Integral over the surviving P^1 factors of
///   prod(numerator factors) / prod(denominator factors)
/// after restricting to the sublocus where the killed generators and the
/// fiber class zeta vanish. Generic excess-component machinery.
Int restricted_series_integral(const std::vector<ZetaPoly>& numerator,
                               const std::vector<ZetaPoly>& denominator,
                               Monomial kill);

}  // namespace logtev

#endif
