#pragma once

#include <functional>
#include <vector>

#include "riccilab/bigreal.hpp"

namespace ricci {

struct Integral {
  double value = 0.0;
  double error_estimate = 0.0;
};

// Composite trapezoid / Simpson on a uniform grid. Simpson requires an odd
// number of points.
double trapezoid_uniform(const std::vector<double>& y, double h);
double simpson_uniform(const std::vector<double>& y, double h);

// Trapezoid on arbitrary monotone nodes.
double trapezoid(const std::vector<double>& x, const std::vector<double>& y);

// Trapezoid over a sampled series with a Richardson error estimate obtained
// by comparing against the half-sampled rule. Throws on fewer than 2 samples
// or non-monotone abscissae.
Integral integrate_series(const std::vector<double>& t, const std::vector<double>& v);

// Radial integral with the 3-sphere area weight: int f(r) 2 pi^2 psi(r)^3 dr
// over [x_lo..x_hi] node indices of a (possibly non-uniform) radius grid.
// Simpson when the node count is odd and the grid uniform, trapezoid
// otherwise; the error estimate compares against the coarser rule.
Integral radial_shell_integral(const std::vector<double>& r, const std::vector<double>& f,
                               const std::vector<double>& psi, int i_lo, int i_hi);

// int_r^s (V-t)^{power} H(t) dt computed in the substitution w = (V-t)^alpha,
// which turns the near-singular weights (power = alpha-1) into smooth
// integrands on a uniform w grid (a geometrically graded t grid toward V).
// Requires r <= s <= V.
double power_weighted_time_integral(const std::function<double(double)>& H, double r, double s,
                                    double V, double alpha, double power, int n = 256);

// int_r^s e^{b (V-t)^alpha} (V-t)^{power} H(t) dt in scaled arithmetic.
// Linear-in-w pieces are integrated against e^{b w} exactly, so the result
// stays accurate when b w is far beyond double range.
Big exp_weighted_time_integral(const std::function<double(double)>& H, double r, double s,
                               double V, double alpha, double power, double b, int n = 256);

// Least squares fit y ~ slope x + intercept.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};
LineFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

// Geometrically graded nodes from a toward b, refined near b.
std::vector<double> graded_nodes(double a, double b, int n, double ratio = 0.75);

}  // namespace ricci
