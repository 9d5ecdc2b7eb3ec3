#include "riccilab/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace ricci {

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kPiSq = kPi * kPi;

// antiderivative of sin^3 from 0: 2/3 - cos x + cos^3 x / 3
double sin3_integral(double x) {
  double c = std::cos(x);
  return 2.0 / 3.0 - c + c * c * c / 3.0;
}

// int_0^t log(a - 2s) ds = [ -(a-2s)(log(a-2s) - 1)/2 ]_0^t
double log_linear_integral(double a, double t) {
  auto F = [a](double s) {
    double u = a - 2.0 * s;
    return -0.5 * u * (std::log(u) - 1.0);
  };
  return F(t) - F(0.0);
}
}  // namespace

void Scenario::require_time(double t) const {
  if (!(t >= 0.0) || !(t < singular_time()))
    throw std::domain_error(name() + ": time outside [0, T_sing)");
}

double Scenario::ball_volume(double, double) const {
  throw std::logic_error(name() + ": ball volume has no closed form here");
}

KahlerCurvature Scenario::kahler_curvature(double) const {
  throw std::logic_error(name() + ": not a Kahler scenario");
}

Potentials Scenario::potentials(double) const {
  throw std::logic_error(name() + ": potentials need a Kahler scenario");
}

double Scenario::rm_ric_ric_value(double t) const { return rm_ric_ric(frame_curvature(t)); }

// --- HomotheticSphere4 ---

CurvatureScalars HomotheticSphere4::scalars(double t) const {
  require_time(t);
  double c = scale(t);
  return {12.0 / c, 36.0 / (c * c), 24.0 / (c * c)};
}

double HomotheticSphere4::volume(double t) const {
  require_time(t);
  double c = scale(t);
  return c * c * 8.0 * kPiSq / 3.0;
}

double HomotheticSphere4::ball_volume(double radius, double t) const {
  require_time(t);
  if (radius < 0.0) throw std::invalid_argument("ball_volume: negative radius");
  double c = scale(t);
  double s = std::min(radius / std::sqrt(c), kPi);
  return c * c * 2.0 * kPiSq * sin3_integral(s);
}

RiemannTensor4 HomotheticSphere4::frame_curvature(double t) const {
  require_time(t);
  return RiemannTensor4::constant_curvature(1.0 / scale(t));
}

std::array<double, 16> HomotheticSphere4::metric_components(double t) const {
  require_time(t);
  std::array<double, 16> g{};
  for (int i = 0; i < 4; ++i) g[i * 4 + i] = scale(t);
  return g;
}

std::array<double, 16> HomotheticSphere4::ricci_components(double t) const {
  require_time(t);
  std::array<double, 16> r{};
  for (int i = 0; i < 4; ++i) r[i * 4 + i] = 3.0;
  return r;
}

// --- ProductSpheres ---

ProductSpheres::ProductSpheres(double a, double b) : a_(a), b_(b) {
  if (!(a > 0.0) || !(b > 0.0) || !(a <= b))
    throw std::invalid_argument("product_spheres: need 0 < a <= b");
}

CurvatureScalars ProductSpheres::scalars(double t) const {
  require_time(t);
  double P = p(t), Q = q(t);
  return {2.0 / P + 2.0 / Q, 2.0 / (P * P) + 2.0 / (Q * Q), 4.0 / (P * P) + 4.0 / (Q * Q)};
}

double ProductSpheres::volume(double t) const {
  require_time(t);
  return 16.0 * kPiSq * p(t) * q(t);
}

RiemannTensor4 ProductSpheres::frame_curvature(double t) const {
  require_time(t);
  return RiemannTensor4::product_surfaces(1.0 / p(t), 1.0 / q(t));
}

KahlerCurvature ProductSpheres::kahler_curvature(double t) const {
  require_time(t);
  return KahlerCurvature::product_lines(1.0 / p(t), 1.0 / q(t));
}

Potentials ProductSpheres::potentials(double t) const {
  require_time(t);
  Potentials pot;
  pot.f = -std::log(p(t) * q(t) / (a_ * b_));
  pot.phi = log_linear_integral(a_, t) + log_linear_integral(b_, t) -
            t * std::log(a_ * b_);
  return pot;
}

std::array<double, 16> ProductSpheres::metric_components(double t) const {
  require_time(t);
  std::array<double, 16> g{};
  g[0] = g[5] = p(t);
  g[10] = g[15] = q(t);
  return g;
}

std::array<double, 16> ProductSpheres::ricci_components(double) const {
  std::array<double, 16> r{};
  for (int i = 0; i < 4; ++i) r[i * 4 + i] = 1.0;
  return r;
}

// --- FubiniStudyCP2 ---

CurvatureScalars FubiniStudyCP2::scalars(double t) const {
  require_time(t);
  double c = scale(t);
  return {12.0 / c, 36.0 / (c * c), 48.0 / (c * c)};
}

double FubiniStudyCP2::volume(double t) const {
  require_time(t);
  double c = scale(t);
  return 2.0 * kPiSq * c * c;
}

RiemannTensor4 FubiniStudyCP2::frame_curvature(double) const {
  // The real frame tensor of CP^2 is not assembled here; the real-convention
  // scalars above are what the monitors consume.
  throw std::logic_error("fubini_study_cp2: real frame tensor not provided");
}

KahlerCurvature FubiniStudyCP2::kahler_curvature(double t) const {
  require_time(t);
  return KahlerCurvature::constant_holomorphic(2, 2.0 / scale(t));
}

Potentials FubiniStudyCP2::potentials(double t) const {
  require_time(t);
  Potentials pot;
  double c = scale(t);
  pot.f = -2.0 * std::log(c);
  // phi = 2 int_0^t log(1 - lambda s) ds
  pot.phi = 2.0 * (-(c * (std::log(c) - 1.0)) + (1.0 * (std::log(1.0) - 1.0))) / kLambdaE;
  return pot;
}

double FubiniStudyCP2::rm_ric_ric_value(double t) const {
  // Einstein: Ric = (R/4) g, so Q = (R/4)^2 R
  require_time(t);
  double R = 12.0 / scale(t);
  return R * R * R / 16.0;
}

std::array<double, 16> FubiniStudyCP2::metric_components(double t) const {
  require_time(t);
  std::array<double, 16> g{};
  for (int i = 0; i < 4; ++i) g[i * 4 + i] = scale(t);
  return g;
}

std::array<double, 16> FubiniStudyCP2::ricci_components(double) const {
  std::array<double, 16> r{};
  for (int i = 0; i < 4; ++i) r[i * 4 + i] = 3.0;
  return r;
}

// --- RescaledScenario ---

RescaledScenario::RescaledScenario(std::shared_ptr<Scenario> inner, double factor)
    : inner_(std::move(inner)), factor_(factor) {
  if (!(factor_ > 0.0)) throw std::invalid_argument("rescale factor must be positive");
}

std::string RescaledScenario::name() const { return inner_->name() + "_rescaled"; }

CurvatureScalars RescaledScenario::scalars(double t) const {
  auto s = inner_->scalars(t / factor_);
  double C = factor_;
  return {s.scalar / C, s.ric2 / (C * C), s.rm2 / (C * C)};
}

double RescaledScenario::volume(double t) const {
  return factor_ * factor_ * inner_->volume(t / factor_);
}

double RescaledScenario::ball_volume(double radius, double t) const {
  return factor_ * factor_ * inner_->ball_volume(radius / std::sqrt(factor_), t / factor_);
}

RiemannTensor4 RescaledScenario::frame_curvature(double t) const {
  return inner_->frame_curvature(t / factor_).scaled(1.0 / factor_);
}

KahlerCurvature RescaledScenario::kahler_curvature(double t) const {
  return inner_->kahler_curvature(t / factor_).scaled(1.0 / factor_);
}

Potentials RescaledScenario::potentials(double t) const {
  Potentials pot = inner_->potentials(t / factor_);
  pot.phi *= factor_;
  return pot;
}

double RescaledScenario::rm_ric_ric_value(double t) const {
  double C = factor_;
  return inner_->rm_ric_ric_value(t / C) / (C * C * C);
}

std::array<double, 16> RescaledScenario::metric_components(double t) const {
  auto g = inner_->metric_components(t / factor_);
  for (auto& v : g) v *= factor_;
  return g;
}

std::array<double, 16> RescaledScenario::ricci_components(double t) const {
  return inner_->ricci_components(t / factor_);
}

}  // namespace ricci
