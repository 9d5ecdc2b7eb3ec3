#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ricci {

// Rotationally symmetric metric g = phi^2 dx^2 + psi^2 g_{S^3} on a fixed
// coordinate grid x; phi carries the radial gauge so the coordinate grid can
// stay uniform while geodesic radii evolve.
struct WarpedProfile {
  double x0 = 0.0;  // inner coordinate; 0 at a smooth pole
  double dx = 0.0;
  std::vector<double> phi;
  std::vector<double> psi;
  bool pole = true;  // psi(x0) = 0, psi_r(x0) = 1
  double t = 0.0;

  int size() const { return static_cast<int>(psi.size()); }
  // geodesic radius of each node: cumulative integral of phi
  std::vector<double> radii() const;
};

WarpedProfile round_profile(double c0, double x_max, int n);
WarpedProfile perturbed_round_profile(double c0, double x_max, int n, double eps);
WarpedProfile flat_annulus_profile(double r0, double r1, int n);

// Pointwise curvature data of a profile, second-order finite differences,
// pole values by even/odd extension. k_rad = -psi_rr/psi (radial sectional),
// k_sph = (1 - psi_r^2)/psi^2 (spherical sectional).
struct CurvatureProfile {
  std::vector<double> r;
  std::vector<double> k_rad, k_sph;
  std::vector<double> scalar, ric2, rm2;
  std::vector<double> grad_rm2;   // |grad Rm|^2
  std::vector<double> grad_ric2;  // |grad Ric|^2
  std::vector<double> q_rm_ric;   // R_{ikjl} Ric_ij Ric_kl
  std::vector<double> dR_dr, dric2_dr;
  double max_rm() const;
};

// Throws on nonpositive psi in the interior (degenerate profile).
CurvatureProfile curvature_fields(const WarpedProfile& p);

// Dirichlet data on the clamped ends: either frozen at the initial values or
// following the exact homothetic round evolution of the initial data. The
// reference boundary values are captured once from the t = 0 profile.
struct BoundaryModel {
  enum class Kind { frozen, round_homothetic };
  Kind kind = Kind::frozen;
  double c0 = 1.0;
  double rate = -6.0;  // dc/dt of the round model
  double psi_outer0 = 0.0, phi_outer0 = 1.0;
  double psi_inner0 = 0.0, phi_inner0 = 1.0;
  bool clamp_inner = false;

  static BoundaryModel frozen_from(const WarpedProfile& p);
  static BoundaryModel round_from(const WarpedProfile& p, double c0, double rate);
  void capture(const WarpedProfile& p);
  double factor(double t) const;
  void apply(WarpedProfile& p) const;
};

struct WarpedDiagnostics {
  double max_rm = 0.0;
  double cfl_number = 0.0;
  double time_error_estimate = 0.0;  // accumulated first-order bound
  long long steps = 0;
};

struct FlowState {
  WarpedProfile profile;
  WarpedDiagnostics diag;
};

enum class StepOutcome { ok, singularity, degenerate };

struct WarpedFlowParams {
  double cfl = 0.25;
  double blowup_threshold = 0.5;  // halt when sup|Rm| * dt exceeds this
  long long max_steps = 100000000;
};

// One explicit RK2 step of the reduced flow. dt must satisfy the CFL
// precondition dt <= cfl * dr_min^2 / max(1, sup|Rm| dr_min^2); violations
// are rejected.
StepOutcome step(FlowState& state, double dt, const BoundaryModel& bc,
                 const WarpedFlowParams& params);

// Advances to t_target choosing admissible step sizes.
StepOutcome advance_to(FlowState& state, double t_target, const BoundaryModel& bc,
                       const WarpedFlowParams& params);

// Region N = {x <= x_N} with a collar of the given geodesic width on both
// sides of the boundary sphere.
struct RegionSpec {
  double r_N = 0.0;          // geodesic radius of the region boundary at t = 0
  double collar_width = 0.0;
};

struct RegionData {
  int i_boundary = 0;
  int i_collar_lo = 0, i_collar_hi = 0;
  double boundary_area = 0.0;
  double sup_rm_collar = 0.0;
  double sup_grad_rm_collar = 0.0;
};

// Resolves the region indices on the initial grid; throws when the collar
// exits the grid.
struct RegionIndices {
  int i_boundary, i_collar_lo, i_collar_hi;
};
RegionIndices resolve_region(const WarpedProfile& p, const RegionSpec& spec);

RegionData region_data(const WarpedProfile& p, const CurvatureProfile& c,
                       const RegionIndices& idx);

// Outward normal derivative of a nodal field at the region boundary.
double normal_derivative(const WarpedProfile& p, const std::vector<double>& field,
                         int i_boundary);

}  // namespace ricci
