#include "logtev/blowup.hpp"

#include <cstdlib>

namespace logtev {

namespace {

struct Blp2Ring {
  DerivedBlp2 derived;
  std::vector<NilPoly> h;  // H_1..H_5 at indices 0..4
  int M = 0;
};

Blp2Ring build_ring(const GammaBlp2& g) {
  Blp2Ring ring;
  ring.derived = validate_blp2(g);
  ring.M = ring.derived.m_total;
  for (int j = 0; j < 5; ++j) {
    ring.h.push_back(
        weighted_block_class(ring.M, ring.derived.offset[j], g.mu[j]));
  }
  return ring;
}

Int integral_blp2_symbolic(const GammaBlp2& g) {
  Blp2Ring ring = build_ring(g);
  const int M = ring.M;
  const int n = ring.derived.n;

  // Push forward the incidence power ((zeta - H_1)(zeta - H_2))^n termwise:
  // expanding binomially and applying pi_*(zeta^{2+t}) = S_t(E) to each
  // term shows the top coefficient equals the degree-M part of
  //   (1 - H_1)^n (1 - H_2)^n * s(E),
  // with s(E) the full Segre series 1 / prod_k (1 + root_k).  Each Chern
  // factor is supported on a small block of generators, so inverting the
  // factors separately keeps every intermediate polynomial small.
  const NilPoly one = NilPoly::constant(M, 1);
  // Chern roots of the rank-3 bundle carrying the sections g_3, g_4, g_5.
  NilPoly f1 = invert_unit(
      sub(one, add(add(ring.h[0], ring.h[1]), ring.h[2])), M);
  NilPoly f2 = invert_unit(sub(one, add(ring.h[0], ring.h[3])), M);
  NilPoly f3 = invert_unit(sub(one, add(ring.h[1], ring.h[4])), M);

  NilPoly u = mul(pow(sub(one, ring.h[0]), n, M),
                  pow(sub(one, ring.h[1]), n, M), M);
  NilPoly w = mul(mul(u, f2, M), f3, M);

  const Monomial full =
      M == kMaxGenerators ? ~Monomial{0} : (Monomial{1} << M) - 1;
  Int total = 0;
  for (const auto& [m, c] : w.terms()) {
    total += c * f1.coefficient(full & ~m);
  }
  return total;
}

}  // namespace

Int closed_formula_blp2(const GammaBlp2& g) {
  const DerivedBlp2 d = validate_blp2(g);
  Int val = 1;
  for (int mj : d.m) val *= factorial(mj);
  for (const auto& p : g.mu) {
    for (long part : p.parts) val *= part;
  }
  // The falling-factorial binomial keeps the identity with the symbolic
  // integral exact on all valid data: when m_5 > n-1 (resp. m_4 > n-1)
  // the top entry goes negative and the integral genuinely escapes the
  // nonnegative-binomial product, e.g. mu = ((), (), (4), (4), (1,1,1,1))
  // with d = 4 has integral 4 * 4 * 4! = 384, not 0.
  val *= binomial_generalized(d.n - 1 - d.m[4], d.m[0]);
  val *= binomial_generalized(d.n - 1 - d.m[3], d.m[1]);
  return val;
}

Int integral_blp2(const GammaBlp2& g) {
  Int integral = integral_blp2_symbolic(g);
  // Test hook, see integral_xrsa.
  if (std::getenv("LOGTEV_FAULT_INJECT") != nullptr) integral += 1;
  Int closed = closed_formula_blp2(g);
  if (integral != closed) {
    throw CrossCheckError("integral " + to_decimal(integral) +
                          " != closed formula " + to_decimal(closed));
  }
  return integral;
}

Blp2Report status_blp2(const GammaBlp2& g) {
  const DerivedBlp2 d = validate_blp2(g);
  Blp2Report rep;
  rep.n = d.n;
  rep.m = d.m;
  rep.degenerate = d.degenerate;
  rep.integral = integral_blp2(g);
  rep.closed_value = closed_formula_blp2(g);

  const int n1 = d.n - 1;
  rep.certified_equal_pred = d.m[0] + d.m[2] <= n1 && d.m[1] + d.m[2] <= n1 &&
                             d.m[3] <= n1 && d.m[4] <= n1;
  rep.certified_zero_pred =
      d.m[0] + d.m[4] >= d.n || d.m[1] + d.m[3] >= d.n || d.m[2] >= d.n;

  if (rep.certified_equal_pred) {
    rep.status = Blp2Status::CertifiedEqual;
    rep.logtev = rep.integral;
  } else if (rep.certified_zero_pred) {
    rep.status = Blp2Status::CertifiedZero;
    rep.logtev = Int(0);
  } else {
    rep.status = Blp2Status::Uncertified;
  }
  return rep;
}

Int restricted_series_integral(const std::vector<ZetaPoly>& numerator,
                               const std::vector<ZetaPoly>& denominator,
                               Monomial kill) {
  if (numerator.empty() && denominator.empty()) {
    throw Error("restricted_series_integral: no factors");
  }
  const int M =
      numerator.empty() ? denominator.front().context()
                        : numerator.front().context();
  // Restriction is a ring map: kill the listed generators and send the
  // fiber class zeta to zero (keep only the zeta^0 coefficient).
  auto restrict_factor = [&](const ZetaPoly& f) {
    return restrict_killing(f.coeff(0), kill);
  };
  NilPoly num = NilPoly::constant(M, 1);
  for (const auto& f : numerator) num = mul(num, restrict_factor(f));
  NilPoly den = NilPoly::constant(M, 1);
  for (const auto& f : denominator) den = mul(den, restrict_factor(f));

  NilPoly total = mul(num, invert_unit(den, M));
  const Monomial all =
      M == kMaxGenerators ? ~Monomial{0} : (Monomial{1} << M) - 1;
  return total.coefficient(all & ~kill);
}

Blp2Report excess_corrected_logtev(const GammaBlp2& g) {
  Blp2Ring ring = build_ring(g);
  const DerivedBlp2& d = ring.derived;
  const int n = d.n;

  auto single_part_one = [](const Partition& p) {
    return p.size() == 1 && p.parts[0] == 1;
  };
  bool all_ones_mu3 = d.m[2] >= 1;
  for (long part : g.mu[2].parts) {
    if (part != 1) all_ones_mu3 = false;
  }
  const bool supported = single_part_one(g.mu[0]) && single_part_one(g.mu[1]) &&
                         all_ones_mu3 && d.m[2] == n - 1 && d.m[3] == 1 &&
                         d.m[4] == 1 && g.d == 2 + d.m[2];
  if (!supported) {
    throw ConfigurationError(
        "excess correction is only established for mu_1 = mu_2 = (1), "
        "mu_3 = (1^{n-1}), m_4 = m_5 = 1, d = 2 + m_3");
  }

  Blp2Report rep = status_blp2(g);

  // Each excess component is one choice of which p_i carries the common
  // base-point, times an ordering of the n-1 points of D_3.
  Int component_count = factorial(d.m[2]) * n;

  // Restrict the excess integrand to a component: the generators of the
  // blocks D_1, D_2, D_3 are pinned there, and zeta restricts to zero.
  const int M = ring.M;
  Monomial kill = 0;
  for (int j = 0; j < 3; ++j) {
    for (int v = 0; v < d.m[j]; ++v) {
      kill |= Monomial{1} << (d.offset[j] + v);
    }
  }
  ZetaPoly zeta = ZetaPoly::zeta(M);
  ZetaPoly one = ZetaPoly::from_base(NilPoly::constant(M, 1));
  auto chern_factor = [&](const NilPoly& cls) {
    return zadd(zadd(one, zeta), ZetaPoly::from_base(scale(cls, Int(-1))));
  };
  std::vector<ZetaPoly> numerator;
  for (int i = 0; i < n; ++i) {
    numerator.push_back(chern_factor(ring.h[0]));
    numerator.push_back(chern_factor(ring.h[1]));
  }
  std::vector<ZetaPoly> denominator = {
      chern_factor(add(ring.h[0], ring.h[3])),
      chern_factor(add(ring.h[1], ring.h[4])),
  };
  Int per_component = restricted_series_integral(numerator, denominator, kill);

  ExcessData excess;
  excess.component_count = component_count;
  excess.per_component = per_component;
  excess.corrected = rep.integral - component_count * per_component;
  rep.excess = excess;
  rep.logtev = excess.corrected;
  rep.status = Blp2Status::ExcessCorrected;
  return rep;
}

}  // namespace logtev
