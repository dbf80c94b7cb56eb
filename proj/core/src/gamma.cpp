#include "logtev/gamma.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

namespace logtev {

namespace {

void check_parts_positive(const std::vector<Partition>& mu) {
  for (size_t j = 0; j < mu.size(); ++j) {
    for (long p : mu[j].parts) {
      if (p < 1) {
        throw NonPositivePartError("mu[" + std::to_string(j) +
                                   "] contains a part < 1");
      }
    }
  }
}

void check_sum(const Partition& p, long expected, const std::string& label) {
  if (p.sum() != expected) {
    throw DegreeMismatchError(label + ": partition sums to " +
                              std::to_string(p.sum()) + ", expected " +
                              std::to_string(expected));
  }
}

}  // namespace

DerivedXrsa validate_xrsa(const GammaXrsa& g) {
  if (g.r < 1 || g.s < 1) {
    throw ValidationError("require r >= 1 and s >= 1");
  }
  if (g.a < 0) throw ValidationError("require a >= 0");
  if (g.b < 0) throw ValidationError("require b >= 0");
  if (g.c < g.a * g.b) {
    throw NegativeTwistError("require c >= a*b: c=" + std::to_string(g.c) +
                             ", a*b=" + std::to_string(g.a * g.b));
  }
  const size_t expected = static_cast<size_t>(g.r + g.s + 2);
  if (g.mu.size() != expected) {
    throw ValidationError("expected " + std::to_string(expected) +
                          " partitions, got " + std::to_string(g.mu.size()));
  }
  check_parts_positive(g.mu);

  check_sum(g.mu[0], g.c - g.a * g.b, "mu[0]");
  for (int j = 1; j <= g.r + 1; ++j) {
    check_sum(g.mu[j], g.b, "mu[" + std::to_string(j) + "]");
  }
  for (int j = g.r + 2; j <= g.r + g.s + 1; ++j) {
    check_sum(g.mu[j], g.c, "mu[" + std::to_string(j) + "]");
  }

  DerivedXrsa d;
  for (const auto& p : g.mu) {
    d.offset.push_back(d.m_total);
    d.m.push_back(p.size());
    d.m_total += p.size();
  }
  if (d.m_total % (g.r + g.s) != 0) {
    throw IndivisibleError("m=" + std::to_string(d.m_total) +
                           " is not divisible by r+s=" +
                           std::to_string(g.r + g.s));
  }
  d.n = d.m_total / (g.r + g.s) + 1;

  long fiber_m = 0;
  for (int j = g.r + 2; j <= g.r + g.s + 1; ++j) fiber_m += d.m[j];
  d.k0 = static_cast<long>(g.s) * (d.n - 1) - fiber_m;

  long base_m = 0;
  for (int j = 0; j <= g.r + 1; ++j) base_m += d.m[j];
  if (d.k0 != base_m - static_cast<long>(g.r) * (d.n - 1)) {
    throw Error("internal: the two expressions for k_0 disagree");
  }

  d.degenerate = d.n < 3;
  return d;
}

DerivedBlp2 validate_blp2(const GammaBlp2& g) {
  if (g.d < 1) throw ValidationError("require d >= 1");
  if (g.mu.size() != 5) {
    throw ValidationError("expected 5 partitions, got " +
                          std::to_string(g.mu.size()));
  }
  check_parts_positive(g.mu);

  // Section degrees: g_3 has degree d - |mu_1| - |mu_2| - |mu_3|, g_4 has
  // d - |mu_1| - |mu_4|, g_5 has d - |mu_2| - |mu_5|; all must vanish
  // exactly, i.e. the three sums below are forced.
  check_sum(g.mu[3], g.d - g.mu[0].sum(), "mu_4");
  check_sum(g.mu[4], g.d - g.mu[1].sum(), "mu_5");
  if (g.mu[0].sum() + g.mu[1].sum() + g.mu[2].sum() != g.d) {
    throw DegreeMismatchError("|mu_1|+|mu_2|+|mu_3| = " +
                              std::to_string(g.mu[0].sum() + g.mu[1].sum() +
                                             g.mu[2].sum()) +
                              ", expected d = " + std::to_string(g.d));
  }

  DerivedBlp2 d;
  for (const auto& p : g.mu) {
    d.offset.push_back(d.m_total);
    d.m.push_back(p.size());
    d.m_total += p.size();
  }
  if (d.m_total % 2 != 0) {
    throw IndivisibleError("m=" + std::to_string(d.m_total) + " must be even");
  }
  d.n = (d.m_total + 2) / 2;
  d.degenerate = d.n < 3;
  return d;
}

namespace {

using nlohmann::json;

std::vector<Partition> parse_mu(const json& j) {
  if (!j.is_array()) throw ValidationError("mu must be a list of lists");
  std::vector<Partition> mu;
  for (const auto& row : j) {
    if (!row.is_array()) throw ValidationError("mu entries must be lists");
    Partition p;
    for (const auto& v : row) {
      if (!v.is_number_integer()) {
        throw ValidationError("partition parts must be integers");
      }
      p.parts.push_back(v.get<long>());
    }
    mu.push_back(std::move(p));
  }
  return mu;
}

long require_int(const json& doc, const std::string& key) {
  if (!doc.contains(key)) throw ValidationError("missing field: " + key);
  const auto& v = doc.at(key);
  if (!v.is_number_integer()) {
    throw ValidationError("field " + key + " must be an integer");
  }
  return v.get<long>();
}

void reject_unknown(const json& doc, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.count(key)) throw ValidationError("unknown field: " + key);
  }
}

}  // namespace

GammaDocument parse_gamma_document(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("document must be an object");
  if (!doc.contains("target") || !doc.at("target").is_string()) {
    throw ValidationError("missing or non-string field: target");
  }
  const std::string target = doc.at("target").get<std::string>();

  GammaDocument out;
  if (target == "xrsa") {
    reject_unknown(doc, {"target", "r", "s", "a", "b", "c", "mu"});
    out.target = GammaDocument::Target::xrsa;
    out.xrsa.r = static_cast<int>(require_int(doc, "r"));
    out.xrsa.s = static_cast<int>(require_int(doc, "s"));
    out.xrsa.a = require_int(doc, "a");
    out.xrsa.b = require_int(doc, "b");
    out.xrsa.c = require_int(doc, "c");
    if (!doc.contains("mu")) throw ValidationError("missing field: mu");
    out.xrsa.mu = parse_mu(doc.at("mu"));
  } else if (target == "blp2") {
    reject_unknown(doc, {"target", "d", "mu"});
    out.target = GammaDocument::Target::blp2;
    out.blp2.d = require_int(doc, "d");
    if (!doc.contains("mu")) throw ValidationError("missing field: mu");
    out.blp2.mu = parse_mu(doc.at("mu"));
  } else {
    throw ValidationError("target must be \"xrsa\" or \"blp2\"");
  }
  return out;
}

std::string gamma_document_to_json(const GammaDocument& doc) {
  json out;
  auto mu_json = [](const std::vector<Partition>& mu) {
    json rows = json::array();
    for (const auto& p : mu) rows.push_back(p.parts);
    return rows;
  };
  if (doc.target == GammaDocument::Target::xrsa) {
    out["target"] = "xrsa";
    out["r"] = doc.xrsa.r;
    out["s"] = doc.xrsa.s;
    out["a"] = doc.xrsa.a;
    out["b"] = doc.xrsa.b;
    out["c"] = doc.xrsa.c;
    out["mu"] = mu_json(doc.xrsa.mu);
  } else {
    out["target"] = "blp2";
    out["d"] = doc.blp2.d;
    out["mu"] = mu_json(doc.blp2.mu);
  }
  return out.dump();
}

}  // namespace logtev
