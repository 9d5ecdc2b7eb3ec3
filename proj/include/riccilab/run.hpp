#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "riccilab/quadrature.hpp"
#include "riccilab/scenario.hpp"
#include "riccilab/warped.hpp"

namespace ricci {

// Pointwise data handed to monitor integrands. Gradient entries are zero on
// homogeneous runs.
struct PointData {
  double R = 0.0;
  double ric2 = 0.0;
  double rm2 = 0.0;
  double q_rm_ric = 0.0;  // R_{ikjl} Ric_ij Ric_kl
  double dR_dr = 0.0;
  double dric2_dr = 0.0;
  double grad_ric2 = 0.0;  // |grad Ric|^2
};

using PointFn = std::function<double(const PointData&)>;

// What the estimate monitor consumes: spatial integrals, extrema, boundary
// flux and ball data of a Ricci flow run on a region N over [0, horizon].
class FlowRun {
public:
  virtual ~FlowRun() = default;

  virtual std::string name() const = 0;
  virtual double horizon() const = 0;
  virtual bool closed() const = 0;
  virtual bool is_kahler() const = 0;
  virtual int complex_dim() const { return 0; }
  virtual int euler_characteristic() const = 0;

  virtual double integrate(double t, const PointFn& fn) const = 0;
  virtual double volume(double t) const = 0;
  virtual double sup_field(double t, const PointFn& fn) const = 0;
  virtual double inf_field(double t, const PointFn& fn) const = 0;

  virtual bool ball_supported() const = 0;
  virtual double ball_volume(double t, double radius) const = 0;
  virtual double integrate_ball(double t, double radius, const PointFn& fn) const = 0;
  virtual double sup_ball(double t, double radius, const PointFn& fn) const = 0;

  // int_{dN} <grad f, nu> dA for the weighted integrand f = |Ric|^2 / L_V;
  // exactly zero on closed runs.
  virtual double boundary_flux(double t, double V, double alpha) const = 0;

  virtual double collar_sup_rm(double t) const = 0;
  virtual double collar_sup_grad_rm(double t) const = 0;

  virtual const Scenario* scenario() const { return nullptr; }
  virtual Potentials potentials(double t) const;
};

// Closed-form homogeneous scenario on a closed manifold; spatial integrals
// are field x volume, evaluated at arbitrary t in [0, horizon].
class HomogeneousRun : public FlowRun {
public:
  HomogeneousRun(std::shared_ptr<Scenario> scenario, double horizon);

  std::string name() const override { return scenario_->name(); }
  double horizon() const override { return horizon_; }
  bool closed() const override { return true; }
  bool is_kahler() const override { return scenario_->kahler(); }
  int complex_dim() const override { return scenario_->complex_dim(); }
  int euler_characteristic() const override { return scenario_->euler_characteristic(); }

  double integrate(double t, const PointFn& fn) const override;
  double volume(double t) const override { return scenario_->volume(t); }
  double sup_field(double t, const PointFn& fn) const override;
  double inf_field(double t, const PointFn& fn) const override;

  bool ball_supported() const override { return scenario_->ball_volume_supported(); }
  double ball_volume(double t, double radius) const override;
  double integrate_ball(double t, double radius, const PointFn& fn) const override;
  double sup_ball(double t, double radius, const PointFn& fn) const override;

  double boundary_flux(double, double, double) const override { return 0.0; }
  double collar_sup_rm(double t) const override;
  double collar_sup_grad_rm(double) const override { return 0.0; }

  const Scenario* scenario() const override { return scenario_.get(); }
  Potentials potentials(double t) const override { return scenario_->potentials(t); }

  PointData point(double t) const;

private:
  std::shared_ptr<Scenario> scenario_;
  double horizon_;
};

// Numerically integrated rotationally symmetric run with a genuine boundary.
// Fields are stored at snapshot times; queries between snapshots linearly
// interpolate the assembled quantity in t.
class WarpedRun : public FlowRun {
public:
  struct Config {
    WarpedProfile initial;
    BoundaryModel bc;
    WarpedFlowParams flow;
    RegionSpec region;
    double t_end = 0.0;
    int snapshots = 200;
  };

  explicit WarpedRun(const Config& cfg);

  std::string name() const override { return "warped"; }
  double horizon() const override { return snaps_.back().t; }
  bool closed() const override { return false; }
  bool is_kahler() const override { return false; }
  int euler_characteristic() const override;

  double integrate(double t, const PointFn& fn) const override;
  double volume(double t) const override;
  double sup_field(double t, const PointFn& fn) const override;
  double inf_field(double t, const PointFn& fn) const override;

  bool ball_supported() const override { return initial_pole_; }
  double ball_volume(double t, double radius) const override;
  double integrate_ball(double t, double radius, const PointFn& fn) const override;
  double sup_ball(double t, double radius, const PointFn& fn) const override;

  double boundary_flux(double t, double V, double alpha) const override;
  double collar_sup_rm(double t) const override;
  double collar_sup_grad_rm(double t) const override;

  StepOutcome outcome() const { return outcome_; }
  const WarpedDiagnostics& diagnostics() const { return diag_; }

  struct Snapshot {
    double t;
    WarpedProfile profile;
    CurvatureProfile fields;
  };
  const std::vector<Snapshot>& snapshots() const { return snaps_; }
  const RegionIndices& region() const { return region_idx_; }

  // max over interior nodes of |psi - oracle(r)| against the homothetic
  // round profile of squared radius c0 + rate * t
  double round_oracle_error(double c0, double rate) const;

private:
  PointData node_data(const Snapshot& s, int i) const;
  template <class F>
  double lerp_in_t(double t, F&& eval) const;
  int last_region_node(const Snapshot& s) const { return region_idx_.i_boundary; }

  std::vector<Snapshot> snaps_;
  RegionIndices region_idx_;
  bool initial_pole_ = true;
  StepOutcome outcome_ = StepOutcome::ok;
  WarpedDiagnostics diag_;
};

}  // namespace ricci
