#include "riccilab/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace ricci {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> split_doubles(const std::string& s) {
  std::vector<double> out;
  for (const auto& tok : split_list(s)) out.push_back(std::stod(tok));
  return out;
}

using KV = std::map<std::string, std::string>;

std::map<std::string, KV> parse_sections(const std::string& text) {
  std::map<std::string, KV> sections;
  std::string current = "";
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("config line " + std::to_string(lineno) + ": malformed section");
      current = trim(line.substr(1, line.size() - 2));
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    sections[current][key] = val;
  }
  return sections;
}

double get_d(const KV& kv, const std::string& key, double dflt) {
  auto it = kv.find(key);
  return it == kv.end() ? dflt : std::stod(it->second);
}

int get_i(const KV& kv, const std::string& key, int dflt) {
  auto it = kv.find(key);
  return it == kv.end() ? dflt : std::stoi(it->second);
}

bool get_b(const KV& kv, const std::string& key, bool dflt) {
  auto it = kv.find(key);
  if (it == kv.end()) return dflt;
  std::string v = it->second;
  std::transform(v.begin(), v.end(), v.begin(), ::tolower);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config: boolean expected for " + key);
}

std::string get_s(const KV& kv, const std::string& key, const std::string& dflt) {
  auto it = kv.find(key);
  return it == kv.end() ? dflt : it->second;
}

}  // namespace

RunConfig RunConfig::parse_text(const std::string& text) {
  auto sections = parse_sections(text);
  RunConfig c;
  c.raw_text = text;

  const KV& sc = sections["scenario"];
  c.scenario_type = get_s(sc, "type", "");
  c.rescale = get_d(sc, "rescale", 1.0);
  c.a = get_d(sc, "a", 1.0);
  c.b_sq = get_d(sc, "b", 2.0);
  c.c0 = get_d(sc, "c0", 1.0);
  c.x_max = get_d(sc, "x_max", 1.5);
  c.perturbation = get_d(sc, "perturbation", 0.01);
  c.r0 = get_d(sc, "r0", 1.0);
  c.r1 = get_d(sc, "r1", 3.0);
  c.grid = get_i(sc, "grid", 257);
  c.r_N = get_d(sc, "r_N", 0.0);
  c.collar_width = get_d(sc, "collar_width", 0.0);
  c.snapshots = get_i(sc, "snapshots", 200);
  c.cfl = get_d(sc, "cfl", 0.25);

  const KV& w = sections["weight"];
  c.V = get_d(w, "V", 1.0);
  c.alpha = get_d(w, "alpha", 0.05);
  c.T = get_d(w, "T", 1.0);
  c.b_mode = get_s(w, "b_mode", "basic");
  c.b_value = get_d(w, "b", 0.0);

  const KV& m = sections["monitor"];
  c.checks = split_list(get_s(m, "checks", ""));
  c.horizon = get_d(m, "horizon", 0.0);
  c.rs_grid = get_i(m, "rs_grid", 5);
  c.rs_graded = get_b(m, "rs_graded", false);
  c.sample_times = get_i(m, "sample_times", 10);
  if (m.count("evolution_times")) c.evolution_times = split_doubles(m.at("evolution_times"));
  c.evolution_dt = get_d(m, "evolution_dt", 1e-4);
  c.evolution_refinements = get_i(m, "evolution_refinements", 3);
  c.sigma = get_d(m, "sigma", 1e-4);
  c.noninflating_ladder = get_i(m, "noninflating_ladder", 6);
  if (m.count("slab_s")) c.slab_s = split_doubles(m.at("slab_s"));
  c.ball_radius = get_d(m, "ball_radius", 0.5);
  c.c1_rm2 = get_d(m, "c1_rm2", 0.0);
  c.c1_slab = get_d(m, "c1_slab", 0.0);
  c.fit_tol = get_d(m, "fit_tol", 0.2);
  c.hypothesis_violation = get_b(m, "hypothesis_violation", false);
  c.tol_identity = get_d(m, "tol_identity", 1e-6);
  c.tol_inequality = get_d(m, "tol_inequality", 1e-3);

  const KV& r = sections["run"];
  c.seed = static_cast<std::uint64_t>(get_d(r, "seed", 1.0));

  const KV& o = sections["output"];
  c.output_dir = get_s(o, "directory", "");

  return c;
}

RunConfig RunConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

double RunConfig::resolved_b() const {
  if (b_mode == "basic") return 10.0 * T / alpha;
  if (b_mode == "main") return 2000.0 * T / alpha;
  return b_value;
}

void RunConfig::validate() const {
  static const std::set<std::string> known_types = {
      "sphere4", "product_spheres", "fubini_study_cp2",
      "warped_round", "warped_perturbed", "warped_flat_annulus"};
  if (!known_types.count(scenario_type))
    throw ConfigError("unknown scenario type: '" + scenario_type + "'");

  if (!(alpha > 0.0 && alpha < 1.0 / 12.0))
    throw ConfigError("alpha outside (0, 1/12)");

  static const std::set<std::string> known_checks = {
      "hypotheses", "evolution", "basic", "main", "gauss_bonnet", "rm2_bound",
      "chebyshev", "riemann_l2", "slab", "noninflating", "kahler_l2", "c_bounded"};
  for (const auto& ch : checks)
    if (!known_checks.count(ch)) throw ConfigError("unknown check: '" + ch + "'");

  auto has = [&](const std::string& ch) {
    return std::find(checks.begin(), checks.end(), ch) != checks.end();
  };

  if (b_mode != "basic" && b_mode != "main" && b_mode != "value")
    throw ConfigError("b_mode must be basic, main or value");
  double b = resolved_b();
  if (has("main") && b < 2000.0 * T / alpha - 1e-9)
    throw ConfigError("b mode inconsistent: the absorbed estimate needs b >= 2000 T / alpha");
  if (has("basic") && b < 10.0 * T / alpha - 1e-9)
    throw ConfigError("b mode inconsistent: the basic estimate needs b >= 10 T / alpha");

  bool weighted = has("basic") || has("main") || has("slab") || has("riemann_l2");
  if (weighted && V < 1.0)
    throw ConfigError("weighted estimates need V >= 1 (rescale the scenario)");
  if (weighted && !(V < T)) throw ConfigError("weighted estimates need V < T");

  if (has("slab") && slab_s.empty()) throw ConfigError("slab check needs slab_s values");
  for (double s : slab_s) {
    if (!(s > 0.0 && s < 1.0)) throw ConfigError("slab_s values must lie in (0,1)");
    if (!(V - 3.0 * s > 0.0)) throw ConfigError("slab check needs V - 3s > 0");
  }
  if (has("riemann_l2") && !(c1_rm2 > 0.0))
    throw ConfigError("riemann_l2 needs a frozen c1_rm2 constant");
  if (has("slab") && !(c1_slab > 0.0)) throw ConfigError("slab needs a frozen c1_slab constant");
  if (has("noninflating")) {
    if (!(sigma > 0.0 && sigma <= alpha * alpha * alpha))
      throw ConfigError("noninflating needs 0 < sigma <= alpha^3");
    if (noninflating_ladder < 4) throw ConfigError("noninflating needs >= 4 ladder points");
  }
  if (grid < 17) throw ConfigError("warped grid too small");
  if (rs_grid < 2) throw ConfigError("rs_grid must be >= 2");
  if (sample_times < 2) throw ConfigError("sample_times must be >= 2");
}

SweepGrid SweepGrid::parse_text(const std::string& text) {
  auto sections = parse_sections(text);
  SweepGrid g;
  auto it = sections.find("sweep");
  if (it == sections.end()) return g;
  if (it->second.count("alpha")) g.alpha_values = split_doubles(it->second.at("alpha"));
  if (it->second.count("V")) g.V_values = split_doubles(it->second.at("V"));
  return g;
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string format_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace ricci
