#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "reesd/parse.hpp"
#include "reesd/report.hpp"

namespace {

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "mu=2,d=5,seed=1,bound=5" -> RunConfig random fields.
void apply_random_spec(const std::string& spec, reesd::RunConfig& cfg) {
  std::istringstream in(spec);
  std::string item;
  bool has_mu = false, has_d = false, has_seed = false;
  while (std::getline(in, item, ',')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("bad --random item '" + item + "' (want key=value)");
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    if (key == "mu") {
      cfg.random_mu = std::stol(val);
      has_mu = true;
    } else if (key == "d") {
      cfg.random_d = std::stol(val);
      has_d = true;
    } else if (key == "seed") {
      cfg.random_seed = std::stoull(val);
      has_seed = true;
    } else if (key == "bound") {
      cfg.random_bound = std::stol(val);
    } else {
      throw std::runtime_error("unknown --random key '" + key + "'");
    }
  }
  if (!has_mu || !has_d) throw std::runtime_error("--random needs mu= and d=");
  if (!has_seed) cfg.random_seed = 1;
}

void apply_oracle_list(const std::string& list, reesd::RunConfig& cfg) {
  cfg.thA = cfg.thB = cfg.thC = cfg.thD = cfg.duality = false;
  std::istringstream in(list);
  std::string name;
  while (std::getline(in, name, ',')) {
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
      throw std::runtime_error("unknown oracle '" + name + "'");
  }
}

void load_ideal(const std::string& path, reesd::RunConfig& cfg) {
  const std::string text = read_source(path);
  const auto polys = reesd::parse_ideal_text(text, reesd::base_ring());
  cfg.ideal_text.clear();
  for (const auto& p : polys) cfg.ideal_text.push_back(p.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rees algebra equations of height-two ideals in Q[x1,x2], with "
               "D-module cross-checks"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "full pipeline with oracle checks");
  std::string ideal_path, random_spec, oracle_list, format = "json";
  reesd::RunConfig cfg;
  analyze->add_option("--ideal", ideal_path,
                      "file with three polynomials, one per line ('-' for stdin)");
  analyze->add_option("--random", random_spec, "random ideal spec mu=,d=,seed=,bound=");
  analyze->add_option("--pmax", cfg.pmax, "largest T-degree p (range [2,64])");
  analyze->add_option("--oracles", oracle_list,
                      "comma list from thA,thB,thC,thD,duality (default "
                      "thA,thB,thD,duality)");
  analyze->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  analyze->add_option("--bcap", cfg.bcap, "b-function degree cap (0: 4(d+p))");
  analyze->add_option("--derham-budget", cfg.derham_budget,
                      "max de Rham truncation degree");
  analyze->add_option("--jobs", cfg.jobs, "parallel p-levels (REES_DMOD_JOBS overrides)");

  // bfunction
  auto* bfun = app.add_subcommand("bfunction", "factored b-function of one level");
  std::string bf_ideal_path, bf_random_spec;
  long bf_p = 2;
  long bf_cap = 0;
  bfun->add_option("--ideal", bf_ideal_path,
                   "file with three polynomials, one per line ('-' for stdin)");
  bfun->add_option("--random", bf_random_spec, "random ideal spec mu=,d=,seed=,bound=");
  bfun->add_option("-p,--p", bf_p, "T-degree p (>= 2)")->required();
  bfun->add_option("--bcap", bf_cap, "b-function degree cap (0: 4(d+p))");

  // corpus
  auto* corpus = app.add_subcommand("corpus", "run a JSON batch spec");
  std::string corpus_path;
  corpus->add_option("--spec", corpus_path, "JSON file {\"runs\": [...]}")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) {
      if (ideal_path.empty() == random_spec.empty()) {
        std::cerr << "error: exactly one of --ideal / --random is required\n";
        return 2;
      }
      if (!ideal_path.empty()) load_ideal(ideal_path, cfg);
      if (!random_spec.empty()) apply_random_spec(random_spec, cfg);
      if (!oracle_list.empty()) apply_oracle_list(oracle_list, cfg);
      const reesd::ReesAnalysis r = reesd::run_analyze(cfg);
      std::cout << reesd::emit_report(r, format);
      if (!r.valid) {
        std::cerr << "error: " << r.error << "\n";
        return 2;
      }
      return r.all_passed ? 0 : 1;
    }

    if (app.got_subcommand(bfun)) {
      if (bf_ideal_path.empty() == bf_random_spec.empty()) {
        std::cerr << "error: exactly one of --ideal / --random is required\n";
        return 2;
      }
      reesd::RunConfig bcfg;
      if (!bf_ideal_path.empty()) load_ideal(bf_ideal_path, bcfg);
      if (!bf_random_spec.empty()) apply_random_spec(bf_random_spec, bcfg);

      std::vector<reesd::CommPoly> f;
      const reesd::RingCtx base = reesd::base_ring();
      if (!bcfg.ideal_text.empty()) {
        for (const auto& t : bcfg.ideal_text) f.push_back(reesd::parse_polynomial(t, base));
      } else {
        f = reesd::random_hb_ideal(bcfg.random_mu, bcfg.random_d, *bcfg.random_seed,
                                   bcfg.random_bound)
                .f;
      }
      reesd::validate_input(f);
      const reesd::HilbertBurchData hb = reesd::hilbert_burch(f);
      const reesd::RestrictionSystem sys = reesd::restriction_matrices(hb, bf_p);
      const long cap = bf_cap > 0 ? bf_cap : 4 * (hb.d + bf_p);
      const reesd::BFunctionResult bf = reesd::module_bfunction(sys, cap);
      std::cout << reesd::factored_bfunction(bf.b) << "\n";
      return 0;
    }

    if (app.got_subcommand(corpus)) {
      const auto specs = reesd::parse_corpus_spec(read_source(corpus_path));
      const reesd::CorpusSummary sum = reesd::corpus_runner(specs);
      for (const auto& line : sum.lines) std::cout << line << "\n";
      std::cout << "passed " << sum.passed << "/" << sum.total << "\n";
      return sum.all_passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
