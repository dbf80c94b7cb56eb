// Command-line driver: single-datum computations, cross-check sweeps,
// and specialization tables, with JSON/TSV/human output.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "logtev/blowup.hpp"
#include "logtev/enumerate.hpp"
#include "logtev/errors.hpp"
#include "logtev/gamma.hpp"
#include "logtev/tevelev.hpp"

namespace {

using json = nlohmann::json;
using namespace logtev;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitEngine = 3;

struct RunConfig {
  std::string format = "human";  // json, tsv, human
  std::string mode = "certified";
  bool symmetrized = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string status_name(XrsaStatus s) {
  switch (s) {
    case XrsaStatus::Certified:
      return "CERTIFIED";
    case XrsaStatus::CertifiedZero:
      return "CERTIFIED_ZERO";
    case XrsaStatus::Degenerate:
      return "DEGENERATE";
  }
  return "?";
}

std::string status_name(Blp2Status s) {
  switch (s) {
    case Blp2Status::CertifiedEqual:
      return "CERTIFIED_EQUAL";
    case Blp2Status::CertifiedZero:
      return "CERTIFIED_ZERO";
    case Blp2Status::Uncertified:
      return "UNCERTIFIED";
    case Blp2Status::ExcessCorrected:
      return "EXCESS_CORRECTED";
  }
  return "?";
}

void emit_flat(const RunConfig& cfg, const json& doc) {
  if (cfg.format == "json") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  // tsv and human: flatten one level.
  for (const auto& [key, value] : doc.items()) {
    std::string rendered =
        value.is_string() ? value.get<std::string>() : value.dump();
    if (cfg.format == "tsv") {
      std::cout << key << "\t" << rendered << "\n";
    } else {
      std::cout << key << ": " << rendered << "\n";
    }
  }
}

json inequality_ledger_xrsa(const TevReport& rep) {
  return json{
      {"m_j <= n-1 (j=1..r+s+1)", rep.ineq_mj},
      {"sum_{j>=r+2} m_j >= (s-1)(n-1)", rep.ineq_fiber_lower},
      {"m_0 + sum_{j>=r+2} m_j <= s(n-1)", rep.ineq_fiber_upper},
  };
}

void require_certified_n(const RunConfig& cfg, bool degenerate) {
  if (cfg.mode == "certified" && degenerate) {
    throw ValidationError(
        "n < 3: no geometric interpretation; rerun with --mode diagnostic");
  }
}

int cmd_xrsa(const RunConfig& cfg, const std::string& path) {
  GammaDocument doc = parse_gamma_document(read_file(path));
  if (doc.target != GammaDocument::Target::xrsa) {
    throw ValidationError("expected a document with target \"xrsa\"");
  }
  DerivedXrsa derived = validate_xrsa(doc.xrsa);
  require_certified_n(cfg, derived.degenerate);

  TevReport rep = logtev_xrsa(doc.xrsa);
  json out{
      {"target", "xrsa"},
      {"gamma", json::parse(gamma_document_to_json(doc))},
      {"status", status_name(rep.status)},
      {"integral", to_decimal(rep.integral)},
      {"closed_value", to_decimal(rep.closed_value)},
      {"logtev", to_decimal(rep.logtev)},
      {"n", rep.n},
      {"k0", rep.k0},
      {"m", rep.m},
      {"inequalities", inequality_ledger_xrsa(rep)},
  };
  if (cfg.symmetrized) {
    out["symmetrized"] = to_decimal(rep.logtev / repetition_factor(doc.xrsa.mu));
  }
  emit_flat(cfg, out);
  return kExitOk;
}

int cmd_blp2(const RunConfig& cfg, const std::string& path, bool excess) {
  GammaDocument doc = parse_gamma_document(read_file(path));
  if (doc.target != GammaDocument::Target::blp2) {
    throw ValidationError("expected a document with target \"blp2\"");
  }
  DerivedBlp2 derived = validate_blp2(doc.blp2);
  require_certified_n(cfg, derived.degenerate);

  Blp2Report rep =
      excess ? excess_corrected_logtev(doc.blp2) : status_blp2(doc.blp2);
  json out{
      {"target", "blp2"},
      {"gamma", json::parse(gamma_document_to_json(doc))},
      {"status", status_name(rep.status)},
      {"integral", to_decimal(rep.integral)},
      {"closed_value", to_decimal(rep.closed_value)},
      {"n", rep.n},
      {"m", rep.m},
      {"inequalities",
       json{{"max(m1+m3, m2+m3, m4, m5) <= n-1", rep.certified_equal_pred},
            {"max(m1+m5, m2+m4, m3) >= n", rep.certified_zero_pred}}},
  };
  if (rep.logtev) {
    out["logtev"] = to_decimal(*rep.logtev);
    if (cfg.symmetrized) {
      out["symmetrized"] =
          to_decimal(*rep.logtev / repetition_factor(doc.blp2.mu));
    }
  } else {
    out["warning"] =
        "intersection number is not certified enumerative for this data; "
        "logtev withheld (rerun with --excess for supported configurations)";
  }
  if (rep.excess) {
    out["component_count"] = to_decimal(rep.excess->component_count);
    out["per_component"] = to_decimal(rep.excess->per_component);
  }
  emit_flat(cfg, out);
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, const XrsaSweepBounds& xb,
              const Blp2SweepBounds& bb, const std::string& target) {
  long xrsa_count = 0;
  long blp2_count = 0;
  long violations = 0;

  auto check_xrsa = [&](const GammaXrsa& g) {
    ++xrsa_count;
    Int value = integral_xrsa(g);  // throws CrossCheckError on violation

    // Permuting parts within a partition must not change the value.
    GammaXrsa permuted = g;
    for (auto& p : permuted.mu) std::reverse(p.parts.begin(), p.parts.end());
    if (integral_xrsa(permuted) != value) ++violations;

    // Index symmetry within the base block.
    if (g.r >= 1) {
      GammaXrsa swapped = g;
      std::swap(swapped.mu[1], swapped.mu[2]);
      if (integral_xrsa(swapped) != value) ++violations;
    }

    // a = 0 splits as a product of projective-space counts.
    if (g.a == 0) {
      DerivedXrsa d = validate_xrsa(g);
      long fiber_m = d.m[0];
      for (int j = g.r + 2; j <= g.r + g.s + 1; ++j) fiber_m += d.m[j];
      bool balanced = fiber_m == static_cast<long>(g.s) * (d.n - 1);
      Int expected = 0;
      if (balanced) {
        expected = 1;
        for (int mj : d.m) expected *= factorial(mj);
        for (const auto& p : g.mu) {
          for (long part : p.parts) expected *= part;
        }
      }
      if (value != expected) ++violations;
    }
  };

  auto check_blp2 = [&](const GammaBlp2& g) {
    ++blp2_count;
    Int value = integral_blp2(g);
    GammaBlp2 permuted = g;
    for (auto& p : permuted.mu) std::reverse(p.parts.begin(), p.parts.end());
    if (integral_blp2(permuted) != value) ++violations;
    // Fan relabeling: swap the pairs (mu_1, mu_4) <-> (mu_2, mu_5).
    GammaBlp2 swapped = g;
    std::swap(swapped.mu[0], swapped.mu[1]);
    std::swap(swapped.mu[3], swapped.mu[4]);
    if (integral_blp2(swapped) != value) ++violations;
  };

  if (target == "xrsa" || target == "both") enumerate_xrsa(xb, check_xrsa);
  if (target == "blp2" || target == "both") enumerate_blp2(bb, check_blp2);

  emit_flat(cfg, json{{"xrsa_count", xrsa_count},
                      {"blp2_count", blp2_count},
                      {"violations", violations}});
  return violations == 0 ? kExitOk : kExitEngine;
}

void emit_table(const RunConfig& cfg, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  if (cfg.format == "json") {
    json out = json::array();
    for (const auto& row : rows) {
      json obj;
      for (size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
      out.push_back(obj);
    }
    std::cout << out.dump(2) << "\n";
    return;
  }
  const char* sep = cfg.format == "tsv" ? "\t" : "  ";
  for (size_t i = 0; i < header.size(); ++i) {
    std::cout << (i ? sep : "") << header[i];
  }
  std::cout << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      std::cout << (i ? sep : "") << row[i];
    }
    std::cout << "\n";
  }
}

std::string mu_compact(const std::vector<Partition>& mu) {
  json rows = json::array();
  for (const auto& p : mu) rows.push_back(p.parts);
  return rows.dump();
}

int cmd_table(const RunConfig& cfg, const std::string& family, long max_a,
              int max_m, long max_part, int max_r, int max_s, long max_d) {
  if (max_part < 1 || max_m < 0) {
    throw ValidationError("table ranges must be positive");
  }
  std::vector<std::vector<std::string>> rows;

  if (family == "hirzebruch") {
    XrsaSweepBounds bounds{1, 1, max_a, max_m, max_part};
    enumerate_xrsa(bounds, [&](const GammaXrsa& g) {
      TevReport rep = tev_hirzebruch(g);
      if (cfg.mode == "certified" && rep.status == XrsaStatus::Degenerate)
        return;
      std::vector<std::string> row = {
          std::to_string(g.a),       std::to_string(g.b),
          std::to_string(g.c),       mu_compact(g.mu),
          std::to_string(rep.n),     status_name(rep.status),
          to_decimal(rep.logtev)};
      if (cfg.symmetrized) {
        row.push_back(to_decimal(rep.logtev / repetition_factor(g.mu)));
      }
      rows.push_back(std::move(row));
    });
    std::vector<std::string> header = {"a", "b",      "c",     "mu",
                                       "n", "status", "logtev"};
    if (cfg.symmetrized) header.push_back("symmetrized");
    emit_table(cfg, header, rows);
    return kExitOk;
  }

  if (family == "bl-linear") {
    for (int r = 1; r <= max_r; ++r) {
      for (int s = 1; s <= max_s; ++s) {
        for (long d = 1; d <= max_d; ++d) {
          for (long k = 0; k <= d; ++k) {
            // All contact orders 1, degree d, exceptional degree k.
            long m = k + (r + 1) * (d - k) + static_cast<long>(s) * d;
            if (m % (r + s) != 0) continue;
            int n = static_cast<int>(m / (r + s)) + 1;
            if (cfg.mode == "certified" && n < 3) continue;
            rows.push_back({std::to_string(r), std::to_string(s),
                            std::to_string(d), std::to_string(k),
                            std::to_string(n),
                            to_decimal(tev_blowup_linear(s, n, d, k))});
          }
        }
      }
    }
    emit_table(cfg, {"r", "s", "d", "k", "n", "tev"}, rows);
    return kExitOk;
  }

  if (family == "projective") {
    for (int N = 1; N <= max_r + max_s; ++N) {
      for (long d = N; d <= max_d; d += N) {
        // P^N as X_{N-1,1,1} with b = c = d and no exceptional contact.
        GammaXrsa g;
        g.r = N >= 2 ? N - 1 : 1;
        g.s = N >= 2 ? 1 : 1;
        if (N == 1) continue;  // need r >= 1 and s >= 1 with r+s = N
        g.a = 1;
        g.b = d;
        g.c = d;
        g.mu.assign(N + 2, Partition{});
        for (int j = 1; j <= N + 1; ++j) {
          g.mu[j].parts.assign(d, 1);
        }
        TevReport rep = logtev_xrsa(g);
        if (cfg.mode == "certified" && rep.status == XrsaStatus::Degenerate)
          continue;
        std::vector<std::string> row = {std::to_string(N), std::to_string(d),
                                        std::to_string(rep.n),
                                        to_decimal(rep.logtev)};
        if (cfg.symmetrized) {
          row.push_back(to_decimal(rep.logtev / repetition_factor(g.mu)));
        }
        rows.push_back(std::move(row));
      }
    }
    std::vector<std::string> header = {"N", "d", "n", "logtev"};
    if (cfg.symmetrized) header.push_back("symmetrized");
    emit_table(cfg, header, rows);
    return kExitOk;
  }

  throw ValidationError("unknown table family: " + family);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact logarithmic Tevelev degrees of projective-space bundles and "
      "the two-point blow-up of the plane"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "tsv", "human"}))
      ->capture_default_str();
  app.add_option("--mode", cfg.mode, "certified requires n >= 3")
      ->check(CLI::IsMember({"certified", "diagnostic"}))
      ->capture_default_str();
  app.add_flag("--symmetrized", cfg.symmetrized,
               "Also report the value divided by the repetition factorials");

  std::string xrsa_path;
  auto* xrsa_cmd =
      app.add_subcommand("xrsa", "Compute for one X_{r,s,a} datum");
  xrsa_cmd->add_option("file", xrsa_path, "Input document")->required();

  std::string blp2_path;
  bool excess = false;
  auto* blp2_cmd =
      app.add_subcommand("blp2", "Compute for one blow-up-of-P^2 datum");
  blp2_cmd->add_option("file", blp2_path, "Input document")->required();
  blp2_cmd->add_flag("--excess", excess,
                     "Apply the excess-intersection correction");

  XrsaSweepBounds xb;
  Blp2SweepBounds bb;
  std::string sweep_target = "both";
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Cross-check sweep over all valid data");
  sweep_cmd->add_option("--r", xb.max_r, "Maximum r")->capture_default_str();
  sweep_cmd->add_option("--s", xb.max_s, "Maximum s")->capture_default_str();
  sweep_cmd->add_option("--a", xb.max_a, "Maximum a")->capture_default_str();
  sweep_cmd->add_option("--max-m", xb.max_m, "Maximum total contact points")
      ->capture_default_str();
  sweep_cmd->add_option("--max-part", xb.max_part, "Maximum contact order")
      ->capture_default_str();
  sweep_cmd->add_option("--target", sweep_target, "xrsa, blp2, or both")
      ->check(CLI::IsMember({"xrsa", "blp2", "both"}))
      ->capture_default_str();

  std::string family;
  long table_max_a = 2;
  int table_max_m = 8;
  long table_max_part = 3;
  int table_max_r = 3;
  int table_max_s = 3;
  long table_max_d = 4;
  auto* table_cmd = app.add_subcommand("table", "Specialization tables");
  table_cmd->add_option("--family", family, "hirzebruch, bl-linear, projective")
      ->required()
      ->check(CLI::IsMember({"hirzebruch", "bl-linear", "projective"}));
  table_cmd->add_option("--max-a", table_max_a)->capture_default_str();
  table_cmd->add_option("--max-m", table_max_m)->capture_default_str();
  table_cmd->add_option("--max-part", table_max_part)->capture_default_str();
  table_cmd->add_option("--max-r", table_max_r)->capture_default_str();
  table_cmd->add_option("--max-s", table_max_s)->capture_default_str();
  table_cmd->add_option("--max-d", table_max_d)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (xrsa_cmd->parsed()) return cmd_xrsa(cfg, xrsa_path);
    if (blp2_cmd->parsed()) return cmd_blp2(cfg, blp2_path, excess);
    if (sweep_cmd->parsed()) {
      bb.max_m = xb.max_m;
      bb.max_part = xb.max_part;
      return cmd_sweep(cfg, xb, bb, sweep_target);
    }
    if (table_cmd->parsed()) {
      return cmd_table(cfg, family, table_max_a, table_max_m, table_max_part,
                       table_max_r, table_max_s, table_max_d);
    }
  } catch (const CrossCheckError& e) {
    std::cerr << "engine cross-check failure: " << e.what() << "\n";
    return kExitEngine;
  } catch (const ConfigurationError& e) {
    std::cerr << "unsupported configuration: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitEngine;
  }
  return kExitOk;
}
