#include "riccilab/warped.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ricci {

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;

// derivative of a nodal field w.r.t. x, second order; `odd` controls the
// pole extension (odd: f(-x) = -f(x), else even)
std::vector<double> ddx(const std::vector<double>& f, double dx, bool pole, bool odd) {
  int n = static_cast<int>(f.size());
  std::vector<double> out(n);
  for (int i = 1; i + 1 < n; ++i) out[i] = (f[i + 1] - f[i - 1]) / (2.0 * dx);
  if (pole) {
    double fm1 = odd ? -f[1] : f[1];
    out[0] = (f[1] - fm1) / (2.0 * dx);
  } else {
    out[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * dx);
  }
  out[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * dx);
  return out;
}
}  // namespace

std::vector<double> WarpedProfile::radii() const {
  std::vector<double> r(psi.size());
  double acc = x0;
  r[0] = acc;
  for (size_t i = 1; i < psi.size(); ++i) {
    acc += 0.5 * (phi[i - 1] + phi[i]) * dx;
    r[i] = acc;
  }
  return r;
}

WarpedProfile round_profile(double c0, double x_max, int n) {
  if (n < 8) throw std::invalid_argument("round_profile: grid too small");
  WarpedProfile p;
  p.dx = x_max / (n - 1);
  p.pole = true;
  p.phi.assign(n, 1.0);
  p.psi.resize(n);
  double rc = std::sqrt(c0);
  for (int i = 0; i < n; ++i) p.psi[i] = rc * std::sin(i * p.dx / rc);
  return p;
}

WarpedProfile perturbed_round_profile(double c0, double x_max, int n, double eps) {
  WarpedProfile p = round_profile(c0, x_max, n);
  for (int i = 0; i < n; ++i) {
    double s = std::sin(kPi * i * p.dx / x_max);
    p.psi[i] *= 1.0 + eps * s * s;
  }
  return p;
}

WarpedProfile flat_annulus_profile(double r0, double r1, int n) {
  if (!(0.0 < r0 && r0 < r1)) throw std::invalid_argument("flat_annulus: need 0 < r0 < r1");
  WarpedProfile p;
  p.x0 = r0;
  p.dx = (r1 - r0) / (n - 1);
  p.pole = false;
  p.phi.assign(n, 1.0);
  p.psi.resize(n);
  for (int i = 0; i < n; ++i) p.psi[i] = r0 + i * p.dx;
  return p;
}

double CurvatureProfile::max_rm() const {
  double m = 0.0;
  for (double v : rm2) m = std::max(m, v);
  return std::sqrt(m);
}

CurvatureProfile curvature_fields(const WarpedProfile& p) {
  int n = p.size();
  if (n < 8) throw std::invalid_argument("curvature_fields: grid too small");
  for (int i = p.pole ? 1 : 0; i < n; ++i)
    if (!(p.psi[i] > 0.0)) throw std::domain_error("curvature_fields: degenerate profile");

  CurvatureProfile c;
  c.r = p.radii();

  std::vector<double> psi_x = ddx(p.psi, p.dx, p.pole, /*odd=*/true);
  std::vector<double> psi_r(n);
  for (int i = 0; i < n; ++i) psi_r[i] = psi_x[i] / p.phi[i];
  std::vector<double> psir_x = ddx(psi_r, p.dx, p.pole, /*odd=*/false);
  std::vector<double> psi_rr(n);
  for (int i = 0; i < n; ++i) psi_rr[i] = psir_x[i] / p.phi[i];

  c.k_rad.resize(n);
  c.k_sph.resize(n);
  for (int i = 0; i < n; ++i) {
    if (p.pole && i == 0) {
      // A(0) = -psi_rrr(0); both sectional curvatures agree at the pole
      double psi_rrr0 = 2.0 * (psi_r[1] - psi_r[0]) / (p.dx * p.dx * p.phi[0] * p.phi[0]);
      c.k_rad[i] = -psi_rrr0;
      c.k_sph[i] = -psi_rrr0;
    } else {
      c.k_rad[i] = -psi_rr[i] / p.psi[i];
      c.k_sph[i] = (1.0 - psi_r[i] * psi_r[i]) / (p.psi[i] * p.psi[i]);
    }
  }

  c.scalar.resize(n);
  c.ric2.resize(n);
  c.rm2.resize(n);
  c.q_rm_ric.resize(n);
  for (int i = 0; i < n; ++i) {
    double A = c.k_rad[i], B = c.k_sph[i];
    double rho0 = 3.0 * A, rho1 = A + 2.0 * B;
    c.scalar[i] = 6.0 * (A + B);
    c.ric2[i] = rho0 * rho0 + 3.0 * rho1 * rho1;
    c.rm2[i] = 12.0 * (A * A + B * B);
    c.q_rm_ric[i] = 6.0 * A * rho0 * rho1 + 6.0 * B * rho1 * rho1;
  }

  // derivative fields; curvatures are even in r across a pole
  std::vector<double> A_x = ddx(c.k_rad, p.dx, p.pole, false);
  std::vector<double> B_x = ddx(c.k_sph, p.dx, p.pole, false);
  std::vector<double> R_x = ddx(c.scalar, p.dx, p.pole, false);
  std::vector<double> ric2_x = ddx(c.ric2, p.dx, p.pole, false);
  c.grad_rm2.resize(n);
  c.grad_ric2.resize(n);
  c.dR_dr.resize(n);
  c.dric2_dr.resize(n);
  for (int i = 0; i < n; ++i) {
    double A1 = A_x[i] / p.phi[i], B1 = B_x[i] / p.phi[i];
    double A = c.k_rad[i], B = c.k_sph[i];
    double rot = (p.pole && i == 0) ? 0.0 : (psi_r[i] / p.psi[i]) * (A - B);
    c.grad_rm2[i] = 12.0 * (A1 * A1 + B1 * B1) + 48.0 * rot * rot;
    double rho0_r = 3.0 * A1, rho1_r = A1 + 2.0 * B1;
    c.grad_ric2[i] = rho0_r * rho0_r + 3.0 * rho1_r * rho1_r + 6.0 * (2.0 * rot) * (2.0 * rot);
    c.dR_dr[i] = R_x[i] / p.phi[i];
    c.dric2_dr[i] = ric2_x[i] / p.phi[i];
  }
  return c;
}

double BoundaryModel::factor(double t) const {
  if (kind == Kind::frozen) return 1.0;
  double c = c0 + rate * t;
  if (!(c > 0.0)) throw std::domain_error("boundary model: round factor hit zero");
  return std::sqrt(c / c0);
}

BoundaryModel BoundaryModel::frozen_from(const WarpedProfile& p) {
  BoundaryModel bc;
  bc.kind = Kind::frozen;
  bc.capture(p);
  return bc;
}

BoundaryModel BoundaryModel::round_from(const WarpedProfile& p, double c0, double rate) {
  BoundaryModel bc;
  bc.kind = Kind::round_homothetic;
  bc.c0 = c0;
  bc.rate = rate;
  bc.capture(p);
  return bc;
}

void BoundaryModel::capture(const WarpedProfile& p) {
  int n = p.size();
  psi_outer0 = p.psi[n - 1];
  phi_outer0 = p.phi[n - 1];
  psi_inner0 = p.psi[0];
  phi_inner0 = p.phi[0];
  clamp_inner = !p.pole;
}

void BoundaryModel::apply(WarpedProfile& p) const {
  double f = factor(p.t);
  int n = p.size();
  p.psi[n - 1] = f * psi_outer0;
  p.phi[n - 1] = f * phi_outer0;
  if (clamp_inner) {
    p.psi[0] = f * psi_inner0;
    p.phi[0] = f * phi_inner0;
  }
}

namespace {

struct Derivative {
  std::vector<double> dpsi, dphi;
  double max_rm;
};

// dpsi/dt = -psi (A + 2B), dphi/dt = -3 A phi
Derivative flow_rhs(const WarpedProfile& p) {
  CurvatureProfile c = curvature_fields(p);
  int n = p.size();
  Derivative d;
  d.dpsi.resize(n);
  d.dphi.resize(n);
  for (int i = 0; i < n; ++i) {
    double A = c.k_rad[i], B = c.k_sph[i];
    d.dpsi[i] = -p.psi[i] * (A + 2.0 * B);
    d.dphi[i] = -3.0 * A * p.phi[i];
  }
  if (p.pole) d.dpsi[0] = 0.0;
  d.max_rm = c.max_rm();
  return d;
}

double min_dr(const WarpedProfile& p) {
  double m = p.phi[0];
  for (double v : p.phi) m = std::min(m, v);
  return m * p.dx;
}

bool positive_interior(const WarpedProfile& p) {
  for (int i = p.pole ? 1 : 0; i < p.size(); ++i)
    if (!(p.psi[i] > 0.0)) return false;
  return true;
}

StepOutcome rk2_step(FlowState& state, double dt, const BoundaryModel& bc,
                     const WarpedFlowParams& params) {
  WarpedProfile& p = state.profile;
  Derivative k1 = flow_rhs(p);
  if (k1.max_rm * dt > params.blowup_threshold) return StepOutcome::singularity;

  WarpedProfile mid = p;
  for (int i = 0; i < p.size(); ++i) {
    mid.psi[i] += dt * k1.dpsi[i];
    mid.phi[i] += dt * k1.dphi[i];
  }
  mid.t = p.t + dt;
  bc.apply(mid);
  if (!positive_interior(mid)) return StepOutcome::degenerate;

  Derivative k2 = flow_rhs(mid);
  for (int i = 0; i < p.size(); ++i) {
    p.psi[i] += 0.5 * dt * (k1.dpsi[i] + k2.dpsi[i]);
    p.phi[i] += 0.5 * dt * (k1.dphi[i] + k2.dphi[i]);
  }
  p.t += dt;
  bc.apply(p);
  if (!positive_interior(p)) return StepOutcome::degenerate;

  state.diag.max_rm = k2.max_rm;
  state.diag.time_error_estimate += dt * dt;
  state.diag.steps += 1;
  return StepOutcome::ok;
}

}  // namespace

StepOutcome step(FlowState& state, double dt, const BoundaryModel& bc,
                 const WarpedFlowParams& params) {
  double dr = min_dr(state.profile);
  CurvatureProfile c = curvature_fields(state.profile);
  double cfl_limit = params.cfl * dr * dr / std::max(1.0, c.max_rm() * dr * dr);
  if (dt > cfl_limit * (1.0 + 1e-12))
    throw std::invalid_argument("step: dt violates the CFL precondition");
  state.diag.cfl_number = dt / cfl_limit;
  return rk2_step(state, dt, bc, params);
}

StepOutcome advance_to(FlowState& state, double t_target, const BoundaryModel& bc,
                       const WarpedFlowParams& params) {
  while (state.profile.t < t_target - 1e-15) {
    if (state.diag.steps >= params.max_steps)
      throw std::runtime_error("advance_to: step budget exhausted");
    double dr = min_dr(state.profile);
    CurvatureProfile c = curvature_fields(state.profile);
    double dt = params.cfl * dr * dr / std::max(1.0, c.max_rm() * dr * dr);
    dt = std::min(dt, t_target - state.profile.t);
    state.diag.cfl_number = 1.0;
    StepOutcome out = rk2_step(state, dt, bc, params);
    if (out != StepOutcome::ok) return out;
  }
  return StepOutcome::ok;
}

RegionIndices resolve_region(const WarpedProfile& p, const RegionSpec& spec) {
  auto r = p.radii();
  int n = p.size();
  auto locate = [&](double target) {
    int best = 0;
    double bd = std::fabs(r[0] - target);
    for (int i = 1; i < n; ++i) {
      double d = std::fabs(r[i] - target);
      if (d < bd) { bd = d; best = i; }
    }
    return best;
  };
  RegionIndices idx;
  idx.i_boundary = locate(spec.r_N);
  idx.i_collar_lo = locate(spec.r_N - spec.collar_width);
  idx.i_collar_hi = locate(spec.r_N + spec.collar_width);
  if (idx.i_boundary <= 2 || idx.i_boundary >= n - 3)
    throw std::invalid_argument("region: boundary too close to the grid ends");
  if (r[n - 1] < spec.r_N + spec.collar_width - 1e-12)
    throw std::invalid_argument("region: collar exits the grid");
  return idx;
}

RegionData region_data(const WarpedProfile& p, const CurvatureProfile& c,
                       const RegionIndices& idx) {
  RegionData out;
  out.i_boundary = idx.i_boundary;
  out.i_collar_lo = idx.i_collar_lo;
  out.i_collar_hi = idx.i_collar_hi;
  double psi_b = p.psi[idx.i_boundary];
  out.boundary_area = 2.0 * kPi * kPi * psi_b * psi_b * psi_b;
  for (int i = idx.i_collar_lo; i <= idx.i_collar_hi; ++i) {
    out.sup_rm_collar = std::max(out.sup_rm_collar, std::sqrt(c.rm2[i]));
    out.sup_grad_rm_collar = std::max(out.sup_grad_rm_collar, std::sqrt(c.grad_rm2[i]));
  }
  return out;
}

double normal_derivative(const WarpedProfile& p, const std::vector<double>& field,
                         int i_boundary) {
  int n = static_cast<int>(field.size());
  if (i_boundary <= 0 || i_boundary >= n - 1)
    throw std::invalid_argument("normal_derivative: boundary index not interior");
  double fx = (field[i_boundary + 1] - field[i_boundary - 1]) / (2.0 * p.dx);
  return fx / p.phi[i_boundary];
}

}  // namespace ricci
