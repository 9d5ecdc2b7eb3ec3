#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "riccilab/bigreal.hpp"
#include "riccilab/run.hpp"

namespace ricci {

// Parameters of the weight L_V(t) = 2V + R (V-t)^{1-alpha} and the
// exponential factor e^{b (V-t)^alpha}.
struct WeightSpec {
  double V = 1.0;
  double alpha = 0.05;
  double b = 0.0;
  double T = 1.0;  // horizon entering the b thresholds

  // b = 10 T / alpha, enough for the basic weighted estimate
  static WeightSpec basic(double V, double alpha, double T);
  // b = 2000 T / alpha, enough for the absorbed estimate
  static WeightSpec main(double V, double alpha, double T);

  double exp_weight_ln(double t) const;  // b (V-t)^alpha
};

// Pointwise weight; rejects t >= V.
double weight_L(double R, const WeightSpec& spec, double t);

struct HypothesisReport {
  double inf_R = 0.0;
  double sup_rm_collar = 0.0;
  double sup_grad_rm_collar = 0.0;
  double C0 = 0.0;  // sup over samples of int |R|^{2+12 alpha} dV
  bool C0_diverging = false;
  double C0_growth_exponent = 0.0;  // fitted e in (T_sing - t)^{-e}
  double sigma1 = 0.0;              // sup Vol(B(p, sqrt(V-t)))/(V-t)^2
  bool ball_data = false;
  bool scalar_lower_bound_ok = false;  // inf R >= -1
  bool collar_ok = false;              // sup |Rm|, |grad Rm| <= 1
  double min_weight_L = 0.0;           // min over samples and space of L_V
  bool weight_floor_ok = false;        // L_V >= V wherever R >= -1 held
};

struct LedgerEntry {
  std::string theorem;
  std::map<std::string, double> params;
  Big lhs, rhs, margin;
  double margin_over_rhs = 0.0;
  std::map<std::string, double> constants;
  std::string verdict;  // "pass" | "fail" | "report-only"
  std::string note;
};

struct SuperlevelReport {
  double t = 0.0;
  double m_Z = 0.0;      // Vol{ R (V-t)^{1-2a} >= 1 }
  double m_Omega = 0.0;  // Vol{ R (V-t)^{1-a} >= 1 }
  double m_V = 0.0;      // complement of Omega_t in N
  double chebyshev_rhs = 0.0;
};

struct Theorem15Params {
  double sigma = 0.0;
  double eps_sigma = 0.0;
  double beta_sigma = 0.0;
  double v = 0.0;
  // sigma <= alpha^3 demanded; derived v must land in (11 alpha/2, 6 alpha)
  static Theorem15Params derive(double alpha, double sigma);
};

struct SlopeFit {
  std::vector<double> log_gap;  // log(V - S)
  std::vector<double> log_lhs;
  double slope = 0.0;
  double intercept = 0.0;
  double c_hat = 0.0;  // max LHS / (V-S)^{1+alpha/16}
};

// How the L^2-Riemann control constant is obtained on closed runs.
enum class RmBoundRoute { gauss_bonnet, kahler };

class Monitor {
public:
  explicit Monitor(const FlowRun& run);

  double tol_identity = 1e-6;    // exact identities
  double tol_inequality = 1e-3;  // numerically integrated inequalities
  int time_nodes = 512;

  HypothesisReport check_hypotheses(const WeightSpec& spec, int samples = 33) const;

  // |d/dt int f dV - (flux + reaction + weight terms)| at time t with a
  // central difference of width dt; the identity is exact in the continuum.
  double evolution_identity_residual(const WeightSpec& spec, double t, double dt) const;

  // sup_t |I_0| over the run window, the boundary constant of the basic
  // estimate (exactly zero on closed runs).
  double measured_boundary_constant(const WeightSpec& spec, int samples = 65) const;

  LedgerEntry basic_estimate(const WeightSpec& spec, double r, double s,
                             double c_hat_boundary) const;

  // int |Rm|^2 <= 4 int |Ric|^2 + int R^2 + c_hat, with c_hat from the
  // closed-manifold Euler identity or the Kahler L^2 identity.
  LedgerEntry rm2_bound(double t, RmBoundRoute route) const;

  LedgerEntry main_estimate(const WeightSpec& spec, double r, double s,
                            const std::map<std::string, double>& c0_parts) const;

  // Assembles the absorbed-estimate constant from the run: boundary
  // constant, Euler/Kahler constant, and the polynomial-domination constant
  // c(alpha, T).
  std::map<std::string, double> assemble_c0(const WeightSpec& spec, RmBoundRoute route,
                                            double c_hat_boundary) const;

  LedgerEntry riemann_l2_uniform(double c1, int samples = 33) const;

  LedgerEntry slab_ricci4(const WeightSpec& spec, double s, double ball_radius,
                          double c1) const;

  SuperlevelReport superlevel_measures(const WeightSpec& spec, double t) const;
  LedgerEntry chebyshev_bound(const WeightSpec& spec, double t) const;

  double noninflating_lhs(double V, double S, double sigma) const;
  // Fits log LHS(S) against log(V-S); verdict requires slope
  // >= 1 + alpha/16 - fit_tol when render_verdict, else report-only.
  std::pair<LedgerEntry, SlopeFit> noninflating(const WeightSpec& spec,
                                                const Theorem15Params& params,
                                                const std::vector<double>& S_values,
                                                double fit_tol, bool render_verdict) const;

  // Kahler L^2 identity at complex dimension 2; complex dimension > 2 is
  // refused (the boundary constant for general dimension is out of scope).
  LedgerEntry kahler_l2(double t) const;

  // Time series of the boundary constant C(t); identically zero on closed
  // runs and on the potential-flat scenarios in scope.
  LedgerEntry c_bounded(const std::vector<double>& times) const;

  double weighted_ricci_integral(double t, const WeightSpec& spec) const;  // A(t)

  const FlowRun& run() const { return run_; }

private:
  double integrate_R_power(double t, double expo) const;
  Big exp_factor(const WeightSpec& spec, double t) const;
  const FlowRun& run_;
};

// max over x >= 0 of 2000 x^2 + T x^{2+4a} - x^{2+12a}
double polynomial_domination_constant(double alpha, double T);

}  // namespace ricci
