#include "logtev/tevelev.hpp"

#include <cstdlib>
#include <map>

#include "logtev/tower.hpp"

namespace logtev {

Int closed_formula_xrsa(const GammaXrsa& g) {
  const DerivedXrsa d = validate_xrsa(g);
  const long m0 = d.m[0];
  if (d.k0 < m0) return 0;
  Int val = 1;
  for (int mj : d.m) val *= factorial(mj);
  for (const auto& p : g.mu) {
    for (long part : p.parts) val *= part;
  }
  val *= int_pow(Int(g.a), d.k0 - m0);  // 0^0 = 1
  val *= binomial(d.k0, m0);
  return val;
}

namespace {

Int integral_xrsa_symbolic(const GammaXrsa& g) {
  const DerivedXrsa d = validate_xrsa(g);
  const int M = d.m_total;
  const int fiber_degree = g.s * (d.n - 1);

  std::vector<ZetaPoly> pieces = segre_e2_xrsa(g, fiber_degree);
  const ZetaPoly& top_piece = pieces[fiber_degree];

  std::vector<NilPoly> roots;
  for (int j = 1; j <= g.r + 1; ++j) {
    roots.push_back(
        scale(weighted_block_class(M, d.offset[j], g.mu[j]), Int(-1)));
  }
  BundleData e1 = segre_from_root_polys(roots, M);

  ZetaPoly integrand = zmul(
      zpow(ZetaPoly::zeta(M), static_cast<long>(g.r) * d.n), top_piece);
  return top_coefficient(pushforward_zeta(integrand, e1));
}

}  // namespace

Int integral_xrsa(const GammaXrsa& g) {
  Int integral = integral_xrsa_symbolic(g);
  // Test hook: LOGTEV_FAULT_INJECT simulates an engine bug so the
  // cross-check path can be exercised end to end.
  if (std::getenv("LOGTEV_FAULT_INJECT") != nullptr) integral += 1;
  Int closed = closed_formula_xrsa(g);
  if (integral != closed) {
    throw CrossCheckError("integral " + to_decimal(integral) +
                          " != closed formula " + to_decimal(closed));
  }
  return integral;
}

TevReport logtev_xrsa(const GammaXrsa& g) {
  const DerivedXrsa d = validate_xrsa(g);
  TevReport rep;
  rep.n = d.n;
  rep.k0 = d.k0;
  rep.m = d.m;
  rep.integral = integral_xrsa(g);
  rep.closed_value = closed_formula_xrsa(g);

  long fiber_m = 0;
  for (int j = g.r + 2; j <= g.r + g.s + 1; ++j) fiber_m += d.m[j];
  rep.ineq_mj = true;
  for (int j = 1; j <= g.r + g.s + 1; ++j) {
    if (d.m[j] > d.n - 1) rep.ineq_mj = false;
  }
  rep.ineq_fiber_lower =
      fiber_m >= static_cast<long>(g.s - 1) * (d.n - 1);
  rep.ineq_fiber_upper =
      d.m[0] + fiber_m <= static_cast<long>(g.s) * (d.n - 1);

  if (!rep.ineq_mj || !rep.ineq_fiber_lower) {
    rep.status = XrsaStatus::CertifiedZero;
    rep.logtev = 0;
  } else {
    // If only the upper fiber inequality fails, the integral itself
    // vanishes, so reporting it as the degree is still exact.
    rep.status = XrsaStatus::Certified;
    rep.logtev = rep.integral;
  }
  if (d.degenerate) rep.status = XrsaStatus::Degenerate;
  return rep;
}

Int tev_blowup_linear(int s, int n, long d, long k) {
  return binomial(static_cast<long>(s) * (n - d - 1), k);
}

TevReport tev_hirzebruch(const GammaXrsa& g) {
  if (g.r != 1 || g.s != 1) {
    throw ValidationError("Hirzebruch specialization requires r = s = 1");
  }
  return logtev_xrsa(g);
}

Int repetition_factor(const std::vector<Partition>& mu) {
  Int f = 1;
  for (const auto& p : mu) {
    std::map<long, long> counts;
    for (long part : p.parts) ++counts[part];
    for (const auto& [part, count] : counts) f *= factorial(count);
  }
  return f;
}

}  // namespace logtev
