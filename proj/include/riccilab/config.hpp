#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ricci {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat key-value run configuration with one section per module.
struct RunConfig {
  // [scenario]
  std::string scenario_type;  // sphere4 | product_spheres | fubini_study_cp2 |
                              // warped_round | warped_perturbed | warped_flat_annulus
  double rescale = 1.0;
  double a = 1.0, b_sq = 2.0;  // product squared radii at t = 0
  double c0 = 1.0;             // warped round squared radius
  double x_max = 1.5;
  double perturbation = 0.01;
  double r0 = 1.0, r1 = 3.0;  // annulus
  int grid = 257;
  double r_N = 0.0, collar_width = 0.0;
  int snapshots = 200;
  double cfl = 0.25;

  // [weight]
  double V = 1.0;
  double alpha = 0.05;
  double T = 1.0;
  std::string b_mode = "basic";  // basic | main | value
  double b_value = 0.0;

  // [monitor]
  std::vector<std::string> checks;
  double horizon = 0.0;  // 0: derived from V and the singular time
  int rs_grid = 5;
  bool rs_graded = false;
  int sample_times = 10;
  std::vector<double> evolution_times;
  double evolution_dt = 1e-4;
  int evolution_refinements = 3;
  double sigma = 1e-4;
  int noninflating_ladder = 6;
  std::vector<double> slab_s;
  double ball_radius = 0.5;
  double c1_rm2 = 0.0, c1_slab = 0.0;
  double fit_tol = 0.2;
  bool hypothesis_violation = false;
  double tol_identity = 1e-6;
  double tol_inequality = 1e-3;

  // [run]
  std::uint64_t seed = 1;

  // [output]
  std::string output_dir;

  std::string raw_text;  // exact text the config was parsed from

  static RunConfig parse_text(const std::string& text);
  static RunConfig parse_file(const std::string& path);

  void validate() const;  // throws ConfigError
  double resolved_b() const;
};

// Parsed [sweep] section: every listed key expands the base config over a
// cartesian grid.
struct SweepGrid {
  std::vector<double> alpha_values;
  std::vector<double> V_values;
  static SweepGrid parse_text(const std::string& text);
  bool empty() const { return alpha_values.empty() && V_values.empty(); }
};

std::uint64_t fnv1a64(const std::string& data);
std::string format_full(double v);  // 17 significant digits

}  // namespace ricci
