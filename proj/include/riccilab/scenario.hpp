#pragma once

#include <array>
#include <memory>
#include <string>

#include "riccilab/curvature.hpp"

namespace ricci {

// Kahler potential data at time t. The closed-form scenarios here are
// homothetic or product-homothetic, so f and phi are spatially constant and
// the second-derivative / Christoffel-difference blocks vanish identically;
// the flags record that exactness.
struct Potentials {
  double f = 0.0;    // log(omega_0^n / omega_t^n)
  double phi = 0.0;  // int_0^t log(omega^n(s)/omega_0^n) ds
  bool ddbar_f_zero = true;
  bool ddbar_phi_zero = true;
  bool christoffel_diff_zero = true;
};

// A closed-form Ricci flow solution on a closed manifold, homogeneous in
// space: curvature scalars depend on t only and spatial integrals reduce to
// field x volume.
class Scenario {
public:
  virtual ~Scenario() = default;

  virtual std::string name() const = 0;
  virtual double singular_time() const = 0;
  virtual bool kahler() const = 0;
  virtual int complex_dim() const { return 0; }
  virtual int euler_characteristic() const = 0;

  virtual CurvatureScalars scalars(double t) const = 0;
  virtual double volume(double t) const = 0;

  // Geodesic ball volume about the scenario base point, when a closed form
  // is available (round sphere); throws otherwise.
  virtual bool ball_volume_supported() const { return false; }
  virtual double ball_volume(double radius, double t) const;

  virtual RiemannTensor4 frame_curvature(double t) const = 0;
  virtual KahlerCurvature kahler_curvature(double t) const;
  virtual Potentials potentials(double t) const;

  // R_{ikjl} Ric_ij Ric_kl; by default contracted from the frame tensor.
  virtual double rm_ric_ric_value(double t) const;

  // Diagonal coordinate metric/Ricci blocks, for flow-consistency checks
  // (dg/dt = -2 Ric componentwise).
  virtual std::array<double, 16> metric_components(double t) const = 0;
  virtual std::array<double, 16> ricci_components(double t) const = 0;

protected:
  void require_time(double t) const;
};

// Round S^4, g(t) = c(t) g_round with c(t) = 1 - 6t; T_sing = 1/6.
class HomotheticSphere4 : public Scenario {
public:
  std::string name() const override { return "sphere4"; }
  double singular_time() const override { return 1.0 / 6.0; }
  bool kahler() const override { return false; }
  int euler_characteristic() const override { return 2; }
  CurvatureScalars scalars(double t) const override;
  double volume(double t) const override;
  bool ball_volume_supported() const override { return true; }
  double ball_volume(double radius, double t) const override;
  RiemannTensor4 frame_curvature(double t) const override;
  std::array<double, 16> metric_components(double t) const override;
  std::array<double, 16> ricci_components(double t) const override;
  double scale(double t) const { return 1.0 - 6.0 * t; }
};

// S^2 x S^2 = CP^1 x CP^1 with squared radii p(t) = a - 2t, q(t) = b - 2t.
class ProductSpheres : public Scenario {
public:
  ProductSpheres(double a, double b);
  std::string name() const override { return "product_spheres"; }
  double singular_time() const override { return 0.5 * a_; }
  bool kahler() const override { return true; }
  int complex_dim() const override { return 2; }
  int euler_characteristic() const override { return 4; }
  CurvatureScalars scalars(double t) const override;
  double volume(double t) const override;
  RiemannTensor4 frame_curvature(double t) const override;
  KahlerCurvature kahler_curvature(double t) const override;
  Potentials potentials(double t) const override;
  std::array<double, 16> metric_components(double t) const override;
  std::array<double, 16> ricci_components(double t) const override;
  double p(double t) const { return a_ - 2.0 * t; }
  double q(double t) const { return b_ - 2.0 * t; }

private:
  double a_, b_;
};

// Fubini-Study CP^2, Kahler-Einstein: rho_0 = (lambda_E/2) omega_0 and
// c(t) = 1 - lambda_E t with lambda_E = 6 in the normalization used here
// (holomorphic sectional curvature 2 at t = 0).
class FubiniStudyCP2 : public Scenario {
public:
  std::string name() const override { return "fubini_study_cp2"; }
  double singular_time() const override { return 1.0 / kLambdaE; }
  bool kahler() const override { return true; }
  int complex_dim() const override { return 2; }
  int euler_characteristic() const override { return 3; }
  CurvatureScalars scalars(double t) const override;
  double volume(double t) const override;
  RiemannTensor4 frame_curvature(double t) const override;
  KahlerCurvature kahler_curvature(double t) const override;
  Potentials potentials(double t) const override;
  double rm_ric_ric_value(double t) const override;
  std::array<double, 16> metric_components(double t) const override;
  std::array<double, 16> ricci_components(double t) const override;
  static constexpr double kLambdaE = 6.0;
  double scale(double t) const { return 1.0 - kLambdaE * t; }
};

// Parabolic rescaling g -> C g, t -> t/C applied to a scenario; curvature
// scales by 1/C, volume by C^2 (n = 4), times by C.
class RescaledScenario : public Scenario {
public:
  RescaledScenario(std::shared_ptr<Scenario> inner, double factor);
  std::string name() const override;
  double singular_time() const override { return factor_ * inner_->singular_time(); }
  bool kahler() const override { return inner_->kahler(); }
  int complex_dim() const override { return inner_->complex_dim(); }
  int euler_characteristic() const override { return inner_->euler_characteristic(); }
  CurvatureScalars scalars(double t) const override;
  double volume(double t) const override;
  bool ball_volume_supported() const override { return inner_->ball_volume_supported(); }
  double ball_volume(double radius, double t) const override;
  RiemannTensor4 frame_curvature(double t) const override;
  KahlerCurvature kahler_curvature(double t) const override;
  Potentials potentials(double t) const override;
  double rm_ric_ric_value(double t) const override;
  std::array<double, 16> metric_components(double t) const override;
  std::array<double, 16> ricci_components(double t) const override;
  double factor() const { return factor_; }

private:
  std::shared_ptr<Scenario> inner_;
  double factor_;
};

}  // namespace ricci
