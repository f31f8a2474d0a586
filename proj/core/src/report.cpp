#include "reesd/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace reesd {

namespace {

using Json = nlohmann::ordered_json;

Json version_block() {
  Json v;
  v["name"] = "rees-dmod";
  v["version"] = "1.0.0";
  v["prng"] = "splitmix64-v1";
  return v;
}

std::string emit_json(const ReesAnalysis& r) {
  Json doc;
  if (!r.valid) {
    doc["error"] = r.error;
    doc["version"] = version_block();
    return doc.dump(2) + "\n";
  }

  Json input;
  input["f"] = r.f_str;
  input["d"] = r.d;
  input["mu"] = r.mu;
  doc["input"] = input;
  doc["phi"] = r.phi_str;
  doc["g"] = r.g_str;
  doc["L"] = r.L_str;

  Json table = Json::object();
  for (const auto& [pq, dim] : r.table.k_dim) {
    std::ostringstream key;
    key << pq.first << "," << pq.second;
    table[key.str()] = dim;
  }
  doc["table"] = table;

  Json min_gens = Json::array();
  for (const auto& [p, q] : r.table.min_gens) min_gens.push_back(Json::array({p, q}));
  doc["min_gens"] = min_gens;

  Json bfs = Json::object();
  for (const auto& rep : r.per_p) {
    if (!rep.bf) continue;
    Json b;
    b["factored"] = rep.bf->factored;
    b["coeffs"] = rep.bf->coeffs;
    b["components"] = rep.bf->components;
    bfs[std::to_string(rep.p)] = b;
  }
  doc["bfunctions"] = bfs;

  Json oracles = Json::object();
  auto all_p = [&](bool PReport::* flag) {
    return std::all_of(r.per_p.begin(), r.per_p.end(),
                       [&](const PReport& rep) { return rep.*flag; });
  };
  if (r.cfg.thA) oracles["thA"] = all_p(&PReport::thA_ok);
  if (r.cfg.thB) oracles["thB"] = all_p(&PReport::thB_ok);
  if (r.cfg.thC) {
    Json thc = Json::object();
    for (const auto& rep : r.per_p) {
      if (!rep.derham) continue;
      Json one;
      one["dim"] = rep.derham->dim;
      one["stabilized"] = rep.derham->stabilized;
      one["N"] = rep.derham->N;
      thc[std::to_string(rep.p)] = one;
    }
    thc["ok"] = all_p(&PReport::thC_ok);
    oracles["thC"] = thc;
  }
  if (r.cfg.thD) oracles["thD"] = all_p(&PReport::thD_ok);
  if (r.cfg.duality) oracles["duality"] = all_p(&PReport::duality_ok);
  doc["oracles"] = oracles;

  Json failures = Json::array();
  for (const auto& gf : r.global_failures) failures.push_back(gf);
  for (const auto& rep : r.per_p)
    for (const auto& fl : rep.failures) failures.push_back(fl);
  if (!failures.empty()) doc["failures"] = failures;
  doc["routes_match"] = r.routes_match;
  doc["all_passed"] = r.all_passed;

  Json timings = Json::object();
  for (const auto& [name, sec] : r.timings_sec) timings[name] = sec;
  doc["timings"] = timings;
  doc["version"] = version_block();
  return doc.dump(2) + "\n";
}

std::string emit_text(const ReesAnalysis& r) {
  std::ostringstream os;
  if (!r.valid) {
    os << "error: " << r.error << "\n";
    return os.str();
  }

  for (std::size_t i = 0; i < r.f_str.size(); ++i)
    os << "f" << i + 1 << " = " << r.f_str[i] << "\n";
  os << "d = " << r.d << "\n";
  os << "mu = " << r.mu << "\n";
  os << "phi:\n";
  for (const auto& row : r.phi_str) {
    os << "  [";
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? ", " : "") << row[c];
    os << "]\n";
  }
  os << "g1 = " << r.g_str[0] << "\n";
  os << "g2 = " << r.g_str[1] << "\n";
  os << "L1 = " << r.L_str[0] << "\n";
  os << "L2 = " << r.L_str[1] << "\n";

  os << "dim K_{p,q}:\n";
  std::size_t width = 4;
  for (const auto& [pq, dim] : r.table.k_dim)
    width = std::max(width, std::to_string(dim).size() + 1);
  os << "      ";
  for (long q = 0; q <= r.d - 2; ++q)
    os << std::setw(static_cast<int>(width)) << ("q=" + std::to_string(q));
  os << "\n";
  for (long p = 2; p <= r.table.pmax; ++p) {
    os << "  p=" << std::left << std::setw(3) << p << std::right;
    for (long q = 0; q <= r.d - 2; ++q)
      os << std::setw(static_cast<int>(width)) << r.table.k(p, q);
    os << "\n";
  }

  os << "minimal generators (p,q):";
  for (const auto& [p, q] : r.table.min_gens) os << " (" << p << "," << q << ")";
  os << "\n";

  bool any_bf = false;
  for (const auto& rep : r.per_p)
    if (rep.bf) any_bf = true;
  if (any_bf) {
    os << "b-functions:\n";
    for (const auto& rep : r.per_p)
      if (rep.bf) os << rep.bf->factored << "\n";
  }

  for (const auto& rep : r.per_p)
    if (rep.derham)
      os << "de Rham p=" << rep.p << ": dim=" << rep.derham->dim
         << " N=" << rep.derham->N
         << " stabilized=" << (rep.derham->stabilized ? "yes" : "no") << "\n";

  os << "checks:";
  os << " routes=" << (r.routes_match ? "pass" : "FAIL");
  os << " bounds=" << (r.cor26_ok ? "pass" : "FAIL");
  auto flag_line = [&](const char* name, bool enabled, bool PReport::* flag) {
    if (!enabled) return;
    bool ok = true;
    for (const auto& rep : r.per_p) ok = ok && rep.*flag;
    os << " " << name << "=" << (ok ? "pass" : "FAIL");
  };
  flag_line("thA", r.cfg.thA, &PReport::thA_ok);
  flag_line("thB", r.cfg.thB, &PReport::thB_ok);
  flag_line("thC", r.cfg.thC, &PReport::thC_ok);
  flag_line("thD", r.cfg.thD, &PReport::thD_ok);
  flag_line("duality", r.cfg.duality, &PReport::duality_ok);
  os << "\n";

  for (const auto& gf : r.global_failures) os << "failure: " << gf << "\n";
  for (const auto& rep : r.per_p)
    for (const auto& fl : rep.failures) os << "failure: " << fl << "\n";

  os << "result: " << (r.all_passed ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace

std::string emit_report(const ReesAnalysis& r, const std::string& format) {
  if (format == "json") return emit_json(r);
  if (format == "text") return emit_text(r);
  throw std::invalid_argument("unknown report format '" + format + "'");
}

}  // namespace reesd
