#include "riccilab/run.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ricci {

Potentials FlowRun::potentials(double) const {
  throw std::logic_error(name() + ": potentials need a Kahler run");
}

// --- HomogeneousRun ---

HomogeneousRun::HomogeneousRun(std::shared_ptr<Scenario> scenario, double horizon)
    : scenario_(std::move(scenario)), horizon_(horizon) {
  if (!(horizon_ > 0.0) || !(horizon_ < scenario_->singular_time()))
    throw std::invalid_argument("HomogeneousRun: horizon must sit inside [0, T_sing)");
}

PointData HomogeneousRun::point(double t) const {
  CurvatureScalars s = scenario_->scalars(t);
  PointData d;
  d.R = s.scalar;
  d.ric2 = s.ric2;
  d.rm2 = s.rm2;
  d.q_rm_ric = scenario_->rm_ric_ric_value(t);
  return d;
}

double HomogeneousRun::integrate(double t, const PointFn& fn) const {
  return fn(point(t)) * scenario_->volume(t);
}

double HomogeneousRun::sup_field(double t, const PointFn& fn) const { return fn(point(t)); }
double HomogeneousRun::inf_field(double t, const PointFn& fn) const { return fn(point(t)); }

double HomogeneousRun::ball_volume(double t, double radius) const {
  return scenario_->ball_volume(radius, t);
}

double HomogeneousRun::integrate_ball(double t, double radius, const PointFn& fn) const {
  return fn(point(t)) * scenario_->ball_volume(radius, t);
}

double HomogeneousRun::sup_ball(double t, double, const PointFn& fn) const {
  return fn(point(t));
}

double HomogeneousRun::collar_sup_rm(double t) const {
  return std::sqrt(scenario_->scalars(t).rm2);
}

// --- WarpedRun ---

WarpedRun::WarpedRun(const Config& cfg) {
  initial_pole_ = cfg.initial.pole;
  region_idx_ = resolve_region(cfg.initial, cfg.region);

  FlowState state;
  state.profile = cfg.initial;
  snaps_.push_back({0.0, state.profile, curvature_fields(state.profile)});
  int n_snap = std::max(2, cfg.snapshots);
  for (int k = 1; k <= n_snap; ++k) {
    double target = cfg.t_end * k / n_snap;
    outcome_ = advance_to(state, target, cfg.bc, cfg.flow);
    if (outcome_ != StepOutcome::ok) break;
    snaps_.push_back({state.profile.t, state.profile, curvature_fields(state.profile)});
  }
  diag_ = state.diag;
  if (snaps_.size() < 2) throw std::runtime_error("WarpedRun: flow halted before first snapshot");
}

int WarpedRun::euler_characteristic() const {
  throw std::logic_error("warped run: region has boundary, no closed-manifold invariant");
}

PointData WarpedRun::node_data(const Snapshot& s, int i) const {
  PointData d;
  d.R = s.fields.scalar[i];
  d.ric2 = s.fields.ric2[i];
  d.rm2 = s.fields.rm2[i];
  d.q_rm_ric = s.fields.q_rm_ric[i];
  d.dR_dr = s.fields.dR_dr[i];
  d.dric2_dr = s.fields.dric2_dr[i];
  d.grad_ric2 = s.fields.grad_ric2[i];
  return d;
}

template <class F>
double WarpedRun::lerp_in_t(double t, F&& eval) const {
  double t_lo = snaps_.front().t, t_hi = snaps_.back().t;
  if (t < t_lo - 1e-12 || t > t_hi + 1e-12)
    throw std::domain_error("warped run: time outside the stored window");
  t = std::clamp(t, t_lo, t_hi);
  size_t hi = 1;
  while (hi + 1 < snaps_.size() && snaps_[hi].t < t) ++hi;
  const Snapshot& a = snaps_[hi - 1];
  const Snapshot& b = snaps_[hi];
  double va = eval(a), vb = eval(b);
  double span = b.t - a.t;
  double w = span > 0 ? (t - a.t) / span : 0.0;
  return va + w * (vb - va);
}

double WarpedRun::integrate(double t, const PointFn& fn) const {
  return lerp_in_t(t, [&](const Snapshot& s) {
    int n = s.profile.size();
    std::vector<double> vals(n, 0.0);
    for (int i = 0; i <= last_region_node(s); ++i) vals[i] = fn(node_data(s, i));
    auto r = s.profile.radii();
    return radial_shell_integral(r, vals, s.profile.psi, 0, last_region_node(s)).value;
  });
}

double WarpedRun::volume(double t) const {
  return integrate(t, [](const PointData&) { return 1.0; });
}

double WarpedRun::sup_field(double t, const PointFn& fn) const {
  return lerp_in_t(t, [&](const Snapshot& s) {
    double m = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= last_region_node(s); ++i) m = std::max(m, fn(node_data(s, i)));
    return m;
  });
}

double WarpedRun::inf_field(double t, const PointFn& fn) const {
  return lerp_in_t(t, [&](const Snapshot& s) {
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= last_region_node(s); ++i) m = std::min(m, fn(node_data(s, i)));
    return m;
  });
}

double WarpedRun::ball_volume(double t, double radius) const {
  return integrate_ball(t, radius, [](const PointData&) { return 1.0; });
}

double WarpedRun::integrate_ball(double t, double radius, const PointFn& fn) const {
  if (!initial_pole_) throw std::logic_error("warped run: ball data needs a pole");
  return lerp_in_t(t, [&](const Snapshot& s) {
    auto r = s.profile.radii();
    int hi = 0;
    while (hi + 1 < s.profile.size() && r[hi + 1] <= radius) ++hi;
    hi = std::min(hi, last_region_node(s));
    if (hi < 1) return 0.0;
    std::vector<double> vals(s.profile.size(), 0.0);
    for (int i = 0; i <= hi; ++i) vals[i] = fn(node_data(s, i));
    return radial_shell_integral(r, vals, s.profile.psi, 0, hi).value;
  });
}

double WarpedRun::sup_ball(double t, double radius, const PointFn& fn) const {
  if (!initial_pole_) throw std::logic_error("warped run: ball data needs a pole");
  return lerp_in_t(t, [&](const Snapshot& s) {
    auto r = s.profile.radii();
    double m = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= last_region_node(s) && r[i] <= radius; ++i)
      m = std::max(m, fn(node_data(s, i)));
    return m;
  });
}

double WarpedRun::boundary_flux(double t, double V, double alpha) const {
  return lerp_in_t(t, [&](const Snapshot& s) {
    double w = std::pow(V - s.t, 1.0 - alpha);
    int n = s.profile.size();
    std::vector<double> f(n);
    for (int i = 0; i < n; ++i) {
      double L = 2.0 * V + s.fields.scalar[i] * w;
      f[i] = s.fields.ric2[i] / L;
    }
    int ib = region_idx_.i_boundary;
    double area = 2.0 * 3.1415926535897932384626433832795 * 3.1415926535897932384626433832795 *
                  s.profile.psi[ib] * s.profile.psi[ib] * s.profile.psi[ib];
    double flux = normal_derivative(s.profile, f, ib) * area;
    if (!initial_pole_) {
      // inner boundary sphere, outward normal points to smaller r
      int ia = 0;
      double fa = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * s.profile.dx) / s.profile.phi[0];
      double area_a = 2.0 * 3.1415926535897932384626433832795 *
                      3.1415926535897932384626433832795 * s.profile.psi[ia] *
                      s.profile.psi[ia] * s.profile.psi[ia];
      flux += -fa * area_a;
    }
    return flux;
  });
}

double WarpedRun::collar_sup_rm(double t) const {
  return lerp_in_t(t, [&](const Snapshot& s) {
    double m = 0.0;
    for (int i = region_idx_.i_collar_lo; i <= region_idx_.i_collar_hi; ++i)
      m = std::max(m, std::sqrt(s.fields.rm2[i]));
    return m;
  });
}

double WarpedRun::collar_sup_grad_rm(double t) const {
  return lerp_in_t(t, [&](const Snapshot& s) {
    double m = 0.0;
    for (int i = region_idx_.i_collar_lo; i <= region_idx_.i_collar_hi; ++i)
      m = std::max(m, std::sqrt(s.fields.grad_rm2[i]));
    return m;
  });
}

double WarpedRun::round_oracle_error(double c0, double rate) const {
  double err = 0.0;
  for (const auto& s : snaps_) {
    double c = c0 + rate * s.t;
    auto r = s.profile.radii();
    // skip the clamped outermost node
    for (int i = 0; i + 1 < s.profile.size(); ++i) {
      double oracle = std::sqrt(c) * std::sin(r[i] / std::sqrt(c));
      err = std::max(err, std::fabs(s.profile.psi[i] - oracle));
    }
  }
  return err;
}

}  // namespace ricci
