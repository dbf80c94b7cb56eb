#include "logtev/tower.hpp"

namespace logtev {

namespace {

void require_same_context(const ZetaPoly& p, const ZetaPoly& q) {
  if (p.context() != q.context()) {
    throw ContextError("ring context mismatch between zeta polynomials");
  }
}

}  // namespace

NilPoly LinearClass::to_poly(int context) const {
  NilPoly p(context);
  for (const auto& [g, c] : coefficients) {
    p = add(p, scale(NilPoly::generator(context, g), Int(c)));
  }
  return p;
}

ZetaPoly::ZetaPoly(int context) : context_(context) {}

ZetaPoly ZetaPoly::from_base(NilPoly p) {
  ZetaPoly z(p.context());
  if (!p.is_zero()) z.coeffs_.push_back(std::move(p));
  return z;
}

ZetaPoly ZetaPoly::zeta(int context) {
  ZetaPoly z(context);
  z.coeffs_.push_back(NilPoly(context));
  z.coeffs_.push_back(NilPoly::constant(context, 1));
  return z;
}

NilPoly ZetaPoly::coeff(int u) const {
  if (u < 0 || u >= static_cast<int>(coeffs_.size())) return NilPoly(context_);
  return coeffs_[u];
}

bool ZetaPoly::operator==(const ZetaPoly& other) const {
  return context_ == other.context_ && coeffs_ == other.coeffs_;
}

void ZetaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ZetaPoly zadd(const ZetaPoly& p, const ZetaPoly& q) {
  require_same_context(p, q);
  ZetaPoly r(p.context());
  const int deg = std::max(p.zeta_degree(), q.zeta_degree());
  for (int u = 0; u <= deg; ++u) {
    r.coeffs_.push_back(add(p.coeff(u), q.coeff(u)));
  }
  r.trim();
  return r;
}

ZetaPoly zmul(const ZetaPoly& p, const ZetaPoly& q, int max_total_degree) {
  require_same_context(p, q);
  ZetaPoly r(p.context());
  if (p.is_zero() || q.is_zero()) return r;
  int deg = p.zeta_degree() + q.zeta_degree();
  if (max_total_degree >= 0) deg = std::min(deg, max_total_degree);
  for (int w = 0; w <= deg; ++w) {
    NilPoly acc(p.context());
    for (int u = std::max(0, w - q.zeta_degree());
         u <= std::min(w, p.zeta_degree()); ++u) {
      const int base_cap =
          max_total_degree >= 0 ? max_total_degree - w : -1;
      acc = add(acc, mul(p.coeff(u), q.coeff(w - u), base_cap));
    }
    r.coeffs_.push_back(std::move(acc));
  }
  r.trim();
  return r;
}

ZetaPoly zpow(const ZetaPoly& p, long k, int max_total_degree) {
  if (k < 0) throw Error("zpow: negative exponent");
  ZetaPoly result = ZetaPoly::from_base(NilPoly::constant(p.context(), 1));
  ZetaPoly base = p;
  while (k > 0) {
    if (k & 1) result = zmul(result, base, max_total_degree);
    k >>= 1;
    if (k > 0) base = zmul(base, base, max_total_degree);
  }
  return result;
}

ZetaPoly zgraded_part(const ZetaPoly& p, int d) {
  ZetaPoly r = ZetaPoly::from_base(NilPoly(p.context()));
  for (int u = 0; u <= std::min(d, p.zeta_degree()); ++u) {
    ZetaPoly term(p.context());
    NilPoly piece = graded_part(p.coeff(u), d - u);
    if (piece.is_zero()) continue;
    ZetaPoly shifted = zmul(zpow(ZetaPoly::zeta(p.context()), u),
                            ZetaPoly::from_base(std::move(piece)));
    r = zadd(r, shifted);
  }
  return r;
}

BundleData segre_from_root_polys(const std::vector<NilPoly>& roots,
                                 int max_degree) {
  if (roots.empty()) throw RankError("bundle presented with no roots");
  const int context = roots.front().context();
  NilPoly chern = NilPoly::constant(context, 1);
  for (const auto& root : roots) {
    chern = mul(chern, add(NilPoly::constant(context, 1), root), max_degree);
  }
  NilPoly inv = invert_unit(chern, max_degree);
  BundleData b;
  b.rank = static_cast<int>(roots.size());
  for (int t = 0; t <= max_degree; ++t) {
    b.segre.push_back(graded_part(inv, t));
  }
  return b;
}

BundleData segre_from_roots(const std::vector<LinearClass>& roots,
                            int context, int max_degree) {
  if (roots.empty()) throw RankError("bundle presented with no roots");
  std::vector<NilPoly> polys;
  polys.reserve(roots.size());
  for (const auto& root : roots) polys.push_back(root.to_poly(context));
  return segre_from_root_polys(polys, max_degree);
}

NilPoly weighted_block_class(int context, int offset, const Partition& mu) {
  NilPoly h(context);
  for (int v = 0; v < mu.size(); ++v) {
    h = add(h, scale(NilPoly::generator(context, offset + v),
                     Int(mu.parts[v])));
  }
  return h;
}

std::vector<ZetaPoly> segre_e2_xrsa(const GammaXrsa& g, int max_degree) {
  const DerivedXrsa d = validate_xrsa(g);
  const int M = d.m_total;

  NilPoly h0 = weighted_block_class(M, d.offset[0], g.mu[0]);
  NilPoly rest = NilPoly::constant(M, 1);
  for (int j = g.r + 2; j <= g.r + g.s + 1; ++j) {
    NilPoly hj = weighted_block_class(M, d.offset[j], g.mu[j]);
    rest = mul(rest, sub(NilPoly::constant(M, 1), hj), max_degree);
  }
  NilPoly inv_rest = invert_unit(rest, std::min(max_degree, M));

  // 1/(1 - H_0 - a*zeta) as a geometric series in H_0 + a*zeta,
  // truncated at total degree max_degree. Each power raises the minimal
  // total degree, so the loop terminates.
  ZetaPoly twist(M);
  {
    ZetaPoly base = zadd(ZetaPoly::from_base(h0),
                         zmul(ZetaPoly::zeta(M),
                              ZetaPoly::from_base(NilPoly::constant(M, g.a))));
    ZetaPoly acc = ZetaPoly::from_base(NilPoly::constant(M, 1));
    twist = acc;
    for (int t = 1; t <= max_degree && !acc.is_zero(); ++t) {
      acc = zmul(acc, base, max_degree);
      twist = zadd(twist, acc);
    }
  }

  ZetaPoly full = zmul(twist, ZetaPoly::from_base(inv_rest), max_degree);
  std::vector<ZetaPoly> pieces;
  pieces.reserve(max_degree + 1);
  for (int t = 0; t <= max_degree; ++t) {
    pieces.push_back(zgraded_part(full, t));
  }
  return pieces;
}

NilPoly pushforward_zeta(const ZetaPoly& p, const BundleData& bundle) {
  NilPoly result(p.context());
  for (int u = 0; u <= p.zeta_degree(); ++u) {
    NilPoly cu = p.coeff(u);
    if (cu.is_zero()) continue;
    if (u < bundle.rank - 1) continue;
    const int t = u - bundle.rank + 1;
    if (t > p.context()) continue;  // S_t = 0 above the top degree
    if (t >= static_cast<int>(bundle.segre.size())) {
      throw TruncationError("Segre piece S_" + std::to_string(t) +
                            " not precomputed");
    }
    result = add(result, mul(cu, bundle.segre[t]));
  }
  return result;
}

}  // namespace logtev
