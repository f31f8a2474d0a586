#include "reesd/analyze.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "reesd/parse.hpp"

namespace reesd {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int effective_jobs(int requested) {
  if (const char* env = std::getenv("REES_DMOD_JOBS")) {
    try {
      requested = std::stoi(env);
    } catch (...) {
      // Malformed override: keep the configured value.
    }
  }
  return std::clamp(requested, 1, 64);
}

std::string oracle_name(const char* tag, long p) {
  std::ostringstream os;
  os << tag << " (p=" << p << ")";
  return os.str();
}

// All per-p verification work; failures are tagged, never thrown.
PReport analyze_level(const HilbertBurchData& hb, const BigradedTable& table,
                      const RunConfig& cfg, long p) {
  PReport rep;
  rep.p = p;
  const long d = hb.d;

  std::optional<RestrictionSystem> sys;
  if (cfg.thA || cfg.thB || cfg.thC || cfg.duality) {
    try {
      sys.emplace(restriction_matrices(hb, p));
    } catch (const std::exception& e) {
      rep.failures.push_back(oracle_name("setup", p) + ": " + e.what());
      rep.thA_ok = rep.thB_ok = rep.thC_ok = rep.duality_ok = false;
      return rep;
    }
  }

  if (cfg.thB) {
    try {
      rep.holonomic = holonomicity_check(*sys);
      if (!rep.holonomic)
        rep.failures.push_back(oracle_name("thB", p) + ": holonomicity check failed");

      const long cap = cfg.bcap > 0 ? cfg.bcap : 4 * (d + p);
      const BFunctionResult bf = module_bfunction(*sys, cap);
      const TheoremBReport tb = verify_theorem_b(table, bf);

      BFunctionReport br;
      br.p = p;
      br.factored = factored_bfunction(bf.b);
      for (const auto& c : bf.b.c) br.coeffs.push_back(to_string(c));
      for (const auto& comp : bf.per_component)
        br.components.push_back(factored_bfunction(comp));
      br.support_match = tb.support_match;
      br.product_match = tb.product_match;
      rep.bf = std::move(br);

      if (!tb.support_match)
        rep.failures.push_back(oracle_name("thB", p) +
                               ": b-function roots do not match the K support");
      if (!tb.product_match)
        rep.failures.push_back(oracle_name("thB", p) +
                               ": b-function is not the predicted product");
      rep.thB_ok = rep.holonomic && tb.support_match && tb.product_match;
    } catch (const std::exception& e) {
      rep.thB_ok = false;
      rep.failures.push_back(oracle_name("thB", p) + ": " + e.what());
    }
  }

  if (cfg.thA) {
    try {
      for (long q = 0; q <= d - 2; ++q) {
        const long dim = polynomial_solution_dim(*sys, q);
        if (dim != table.k(p, q)) {
          rep.thA_ok = false;
          std::ostringstream os;
          os << oracle_name("thA", p) << ": solution dimension " << dim << " != "
             << table.k(p, q) << " at q=" << q;
          rep.failures.push_back(os.str());
        }
      }
    } catch (const std::exception& e) {
      rep.thA_ok = false;
      rep.failures.push_back(oracle_name("thA", p) + ": " + e.what());
    }
  }

  if (cfg.thD) {
    try {
      for (long q = 0; q <= d - 2; ++q) {
        const long dim = local_cohomology_solution_dim(hb, p, q);
        if (dim != table.k(p, q)) {
          rep.thD_ok = false;
          std::ostringstream os;
          os << oracle_name("thD", p) << ": solution dimension " << dim << " != "
             << table.k(p, q) << " at q=" << q;
          rep.failures.push_back(os.str());
        }
      }
    } catch (const std::exception& e) {
      rep.thD_ok = false;
      rep.failures.push_back(oracle_name("thD", p) + ": " + e.what());
    }
  }

  if (cfg.duality) {
    try {
      const DualityReport dual = dual_module_graded_dims(*sys);
      for (long q = 0; q <= d - 2; ++q) {
        const long k = d - 2 - q;
        const long got = k <= dual.end ? dual.dims[static_cast<std::size_t>(k)] : 0;
        if (got != table.k(p, q)) {
          rep.duality_ok = false;
          std::ostringstream os;
          os << oracle_name("duality", p) << ": dim L_" << k << " = " << got
             << " != " << table.k(p, q) << " (q=" << q << ")";
          rep.failures.push_back(os.str());
        }
      }
      if (dual.end > d - 2) {
        rep.duality_ok = false;
        rep.failures.push_back(oracle_name("duality", p) +
                               ": dual module lives beyond degree d-2");
      }
    } catch (const std::exception& e) {
      rep.duality_ok = false;
      rep.failures.push_back(oracle_name("duality", p) + ": " + e.what());
    }
  }

  if (cfg.thC) {
    try {
      DeRhamResult dr = derham_h0(*sys, cfg.derham_budget);
      if (!dr.stabilized) {
        rep.thC_ok = false;
        std::ostringstream os;
        os << oracle_name("thC", p) << ": truncation did not stabilize by N="
           << dr.N;
        rep.failures.push_back(os.str());
      }
      long expected_total = 0;
      for (long q = 0; q <= d - 2; ++q) {
        expected_total += table.k(p, q);
        const auto it = dr.dim_by_weight.find(-q);
        const long got = it == dr.dim_by_weight.end() ? 0 : it->second;
        if (got != table.k(p, q)) {
          rep.thC_ok = false;
          std::ostringstream os;
          os << oracle_name("thC", p) << ": kernel dimension " << got << " != "
             << table.k(p, q) << " at weight " << -q;
          rep.failures.push_back(os.str());
        }
      }
      if (dr.dim != expected_total) {
        rep.thC_ok = false;
        std::ostringstream os;
        os << oracle_name("thC", p) << ": total kernel dimension " << dr.dim
           << " != " << expected_total;
        rep.failures.push_back(os.str());
      }
      rep.derham = std::move(dr);
    } catch (const std::exception& e) {
      rep.thC_ok = false;
      rep.failures.push_back(oracle_name("thC", p) + ": " + e.what());
    }
  }

  return rep;
}

}  // namespace

ReesAnalysis run_analyze(const RunConfig& cfg) {
  ReesAnalysis out;
  out.cfg = cfg;
  const auto t_total = Clock::now();

  if (cfg.pmax < 2 || cfg.pmax > 64) {
    out.error = "pmax must lie in [2, 64]";
    return out;
  }
  if (cfg.bcap < 0 || cfg.derham_budget < 1) {
    out.error = "budgets must be positive";
    return out;
  }

  // Input.
  std::vector<CommPoly> f;
  try {
    const RingCtx base = base_ring();
    if (!cfg.ideal_text.empty()) {
      if (cfg.ideal_text.size() != 3)
        throw std::invalid_argument("exactly three polynomials are required");
      for (const auto& text : cfg.ideal_text)
        f.push_back(parse_polynomial(text, base));
    } else if (cfg.random_seed) {
      f = random_hb_ideal(cfg.random_mu, cfg.random_d, *cfg.random_seed,
                          cfg.random_bound)
              .f;
    } else {
      throw std::invalid_argument("no ideal source given");
    }
    validate_input(f);
  } catch (const std::exception& e) {
    out.error = e.what();
    return out;
  }

  HilbertBurchData hb;
  try {
    const auto t0 = Clock::now();
    hb = hilbert_burch(f);
    out.timings_sec["hilbert_burch"] = seconds_since(t0);
  } catch (const std::exception& e) {
    out.error = e.what();
    return out;
  }

  out.valid = true;
  out.d = hb.d;
  out.mu = hb.mu;
  for (const auto& fi : hb.f) out.f_str.push_back(fi.str());
  for (int row = 0; row < 3; ++row) {
    std::vector<std::string> r;
    for (int col = 0; col < 2; ++col)
      r.push_back(hb.phi[static_cast<std::size_t>(col)]
                      .comps[static_cast<std::size_t>(row)]
                      .str());
    out.phi_str.push_back(std::move(r));
  }
  out.g_str = {hb.g1.str(), hb.g2.str()};
  out.L_str = {fourier(weyl_from_poly(hb.g1)).str(), fourier(weyl_from_poly(hb.g2)).str()};

  // Rees ideal, both routes.
  GroebnerBasis req;
  try {
    const auto t0 = Clock::now();
    req = rees_ideal(hb, ReesRoute::Saturation);
    out.timings_sec["req_saturation"] = seconds_since(t0);

    const auto t1 = Clock::now();
    const GroebnerBasis viaElim = rees_ideal(hb, ReesRoute::Elimination);
    out.timings_sec["req_elimination"] = seconds_since(t1);

    out.routes_match = req.gens.size() == viaElim.gens.size();
    if (out.routes_match)
      for (std::size_t i = 0; i < req.gens.size(); ++i)
        if (req.gens[i].comps[0] != viaElim.gens[i].comps[0]) out.routes_match = false;
    if (!out.routes_match)
      out.global_failures.push_back(
          "routes: elimination and saturation disagree on the Rees ideal");
  } catch (const std::exception& e) {
    out.global_failures.push_back(std::string("routes: ") + e.what());
    out.all_passed = false;
    return out;
  }

  {
    const auto t0 = Clock::now();
    out.table = k_table(hb, req, cfg.pmax);
    out.timings_sec["k_table"] = seconds_since(t0);
  }

  // Vanishing above q = d-2 and the top dimension C(p,2).
  out.cor26_ok = true;
  {
    const GroebnerBasis sym_gb =
        groebner_basis({hb.g1, hb.g2}, sym_ring(), MonomialOrder::degrevlex());
    for (long p = 2; p <= cfg.pmax; ++p) {
      if (BigInt(out.table.k(p, hb.d - 2)) != binomial(p, 2)) {
        out.cor26_ok = false;
        std::ostringstream os;
        os << "bounds: dim K_{" << p << "," << hb.d - 2 << "} != C(" << p << ",2)";
        out.global_failures.push_back(os.str());
      }
      for (long q = hb.d - 1; q <= hb.d; ++q) {
        if (bigraded_dim(sym_gb, p, q) != bigraded_dim(req, p, q)) {
          out.cor26_ok = false;
          std::ostringstream os;
          os << "bounds: K_{" << p << "," << q << "} != 0";
          out.global_failures.push_back(os.str());
        }
      }
    }
  }

  // Per-p oracle work, optionally threaded; assembly is order-independent.
  {
    const auto t0 = Clock::now();
    std::vector<long> ps;
    for (long p = 2; p <= cfg.pmax; ++p) ps.push_back(p);
    out.per_p.resize(ps.size());

    const int jobs = std::min<int>(effective_jobs(cfg.jobs), static_cast<int>(ps.size()));
    if (jobs <= 1) {
      for (std::size_t i = 0; i < ps.size(); ++i)
        out.per_p[i] = analyze_level(hb, out.table, cfg, ps[i]);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> workers;
      for (int w = 0; w < jobs; ++w)
        workers.emplace_back([&] {
          for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= ps.size()) return;
            out.per_p[i] = analyze_level(hb, out.table, cfg, ps[i]);
          }
        });
      for (auto& t : workers) t.join();
    }
    out.timings_sec["oracles"] = seconds_since(t0);
  }

  out.all_passed = out.valid && out.routes_match && out.cor26_ok;
  for (const auto& rep : out.per_p)
    if (!rep.ok()) out.all_passed = false;
  out.timings_sec["total"] = seconds_since(t_total);
  return out;
}

CorpusSummary corpus_runner(const std::vector<RunConfig>& specs) {
  if (specs.empty()) throw std::invalid_argument("empty corpus");
  CorpusSummary sum;
  sum.total = static_cast<long>(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    std::ostringstream line;
    line << "run " << i + 1 << ": ";
    try {
      const ReesAnalysis r = run_analyze(specs[i]);
      if (!r.valid) {
        line << "INVALID (" << r.error << ")";
      } else if (r.all_passed) {
        ++sum.passed;
        line << "PASS (d=" << r.d << ", mu=" << r.mu << ", pmax=" << specs[i].pmax
             << ")";
      } else {
        line << "FAIL";
        for (const auto& gf : r.global_failures) line << "; " << gf;
        for (const auto& rep : r.per_p)
          for (const auto& fl : rep.failures) line << "; " << fl;
      }
    } catch (const std::exception& e) {
      line << "ERROR (" << e.what() << ")";
    }
    sum.lines.push_back(line.str());
  }
  return sum;
}

std::vector<RunConfig> parse_corpus_spec(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("corpus spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("runs") || !doc["runs"].is_array())
    throw std::invalid_argument("corpus spec must be an object with a 'runs' array");

  std::vector<RunConfig> cfgs;
  for (const auto& run : doc["runs"]) {
    RunConfig cfg;
    if (run.contains("ideal")) {
      for (const auto& s : run["ideal"]) cfg.ideal_text.push_back(s.get<std::string>());
    } else if (run.contains("random")) {
      const auto& r = run["random"];
      cfg.random_mu = r.value("mu", 1);
      cfg.random_d = r.value("d", 3);
      cfg.random_seed = r.value("seed", std::uint64_t{1});
      cfg.random_bound = r.value("bound", 5);
    } else {
      throw std::invalid_argument("corpus run needs an 'ideal' or 'random' source");
    }
    cfg.pmax = run.value("pmax", 5);
    if (run.contains("oracles")) {
      cfg.thA = cfg.thB = cfg.thC = cfg.thD = cfg.duality = false;
      for (const auto& o : run["oracles"]) {
        const std::string name = o.get<std::string>();
        if (name == "thA")
          cfg.thA = true;
        else if (name == "thB")
          cfg.thB = true;
        else if (name == "thC")
          cfg.thC = true;
        else if (name == "thD")
          cfg.thD = true;
        else if (name == "duality")
          cfg.duality = true;
        else
          throw std::invalid_argument("unknown oracle '" + name + "' in corpus spec");
      }
    }
    cfg.bcap = run.value("bcap", 0);
    cfg.derham_budget = run.value("derham_budget", 64);
    cfg.jobs = run.value("jobs", 1);
    cfgs.push_back(std::move(cfg));
  }
  if (cfgs.empty()) throw std::invalid_argument("empty corpus");
  return cfgs;
}

}  // namespace reesd
