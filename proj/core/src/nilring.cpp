#include "logtev/nilring.hpp"

#include <sstream>

namespace logtev {

namespace {

void require_context(int expected, GeneratorId g) {
  if (g < 0 || g >= expected) {
    throw ContextError("generator index " + std::to_string(g) +
                       " outside ring context M=" + std::to_string(expected));
  }
}

void require_same_context(const NilPoly& p, const NilPoly& q) {
  if (p.context() != q.context()) {
    throw ContextError("ring context mismatch: M=" +
                       std::to_string(p.context()) +
                       " vs M=" + std::to_string(q.context()));
  }
}

}  // namespace

NilPoly::NilPoly(int context) : context_(context) {
  if (context < 0 || context > kMaxGenerators) {
    throw ContextError("ring context must lie in [0, " +
                       std::to_string(kMaxGenerators) +
                       "], got " + std::to_string(context));
  }
}

NilPoly NilPoly::constant(int context, Int c) {
  NilPoly p(context);
  if (c != 0) p.terms_.emplace(Monomial{0}, std::move(c));
  return p;
}

NilPoly NilPoly::generator(int context, GeneratorId g) {
  require_context(context, g);
  NilPoly p(context);
  p.terms_.emplace(Monomial{1} << g, Int(1));
  return p;
}

Int NilPoly::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

int NilPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

bool NilPoly::operator==(const NilPoly& other) const {
  return context_ == other.context_ && terms_ == other.terms_;
}

void NilPoly::insert_term(Monomial m, Int c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string NilPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str();
    for (int g = 0; g < context_; ++g) {
      if (m & (Monomial{1} << g)) out << "*H" << g;
    }
  }
  return out.str();
}

NilPoly add(const NilPoly& p, const NilPoly& q) {
  require_same_context(p, q);
  NilPoly r = p;
  for (const auto& [m, c] : q.terms_) {
    auto [it, inserted] = r.terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

NilPoly sub(const NilPoly& p, const NilPoly& q) {
  return add(p, scale(q, Int(-1)));
}

NilPoly scale(const NilPoly& p, const Int& c) {
  NilPoly r(p.context());
  if (c == 0) return r;
  for (const auto& [m, coeff] : p.terms_) r.terms_.emplace(m, coeff * c);
  return r;
}

NilPoly mul(const NilPoly& p, const NilPoly& q, int max_degree) {
  require_same_context(p, q);
  NilPoly r(p.context());
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) {
      if (mp & mq) continue;  // shared generator: H^2 = 0
      Monomial m = mp | mq;
      if (max_degree >= 0 && monomial_degree(m) > max_degree) continue;
      r.insert_term(m, cp * cq);
    }
  }
  return r;
}

NilPoly pow(const NilPoly& p, long k, int max_degree) {
  if (k < 0) throw Error("pow: negative exponent");
  NilPoly result = NilPoly::constant(p.context(), 1);
  NilPoly base = p;
  while (k > 0) {
    if (k & 1) result = mul(result, base, max_degree);
    k >>= 1;
    if (k > 0) base = mul(base, base, max_degree);
  }
  return result;
}

NilPoly invert_unit(const NilPoly& p, int max_degree) {
  Int c0 = p.coefficient(Monomial{0});
  if (c0 != 1 && c0 != -1) {
    throw NotInvertibleError("constant term must be +1 or -1, got " +
                             c0.get_str());
  }
  // p = c0 - v with v of positive degree; 1/p = c0 * sum_t (c0*v)^t.
  NilPoly v = sub(NilPoly::constant(p.context(), c0), p);
  if (c0 == -1) v = scale(v, Int(-1));
  NilPoly acc = NilPoly::constant(p.context(), 1);
  NilPoly result = acc;
  for (int t = 1; t <= max_degree && !acc.is_zero(); ++t) {
    acc = mul(acc, v, max_degree);
    result = add(result, acc);
  }
  if (c0 == -1) result = scale(result, Int(-1));
  return result;
}

NilPoly graded_part(const NilPoly& p, int d) {
  NilPoly r(p.context());
  for (const auto& [m, c] : p.terms_) {
    if (monomial_degree(m) == d) r.terms_.emplace(m, c);
  }
  return r;
}

Int top_coefficient(const NilPoly& p) {
  Monomial full = p.context() == kMaxGenerators
                      ? ~Monomial{0}
                      : (Monomial{1} << p.context()) - 1;
  return p.coefficient(full);
}

NilPoly restrict_killing(const NilPoly& p, Monomial kill) {
  NilPoly r(p.context());
  for (const auto& [m, c] : p.terms_) {
    if (!(m & kill)) r.terms_.emplace(m, c);
  }
  return r;
}

}  // namespace logtev
