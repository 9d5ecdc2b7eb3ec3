#include "riccilab/monitor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "riccilab/quadrature.hpp"

namespace ricci {

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;

std::vector<double> uniform_times(double a, double b, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = a + (b - a) * i / (n - 1);
  return out;
}
}  // namespace

WeightSpec WeightSpec::basic(double V, double alpha, double T) {
  return {V, alpha, 10.0 * T / alpha, T};
}

WeightSpec WeightSpec::main(double V, double alpha, double T) {
  return {V, alpha, 2000.0 * T / alpha, T};
}

double WeightSpec::exp_weight_ln(double t) const { return b * std::pow(V - t, alpha); }

double weight_L(double R, const WeightSpec& spec, double t) {
  if (!(t < spec.V)) throw std::domain_error("weight_L: t must be below V");
  return 2.0 * spec.V + R * std::pow(spec.V - t, 1.0 - spec.alpha);
}

Theorem15Params Theorem15Params::derive(double alpha, double sigma) {
  if (!(sigma > 0.0) || sigma > alpha * alpha * alpha)
    throw std::invalid_argument("Theorem15Params: need 0 < sigma <= alpha^3");
  Theorem15Params p;
  p.sigma = sigma;
  p.eps_sigma = 2.0 * sigma * (1.0 - alpha) / (2.0 - sigma);
  p.beta_sigma = 4.0 * sigma / (2.0 - sigma);
  p.v = (12.0 * alpha - p.beta_sigma) / (2.0 + p.beta_sigma);
  if (!(p.v > 11.0 * alpha / 2.0) || !(p.v < 6.0 * alpha))
    throw std::invalid_argument("Theorem15Params: derived exponent v outside (11a/2, 6a)");
  return p;
}

Monitor::Monitor(const FlowRun& run) : run_(run) {}

Big Monitor::exp_factor(const WeightSpec& spec, double t) const {
  return Big::exp_of(spec.exp_weight_ln(t));
}

double Monitor::weighted_ricci_integral(double t, const WeightSpec& spec) const {
  return run_.integrate(t, [&](const PointData& p) {
    return p.ric2 / weight_L(p.R, spec, t);
  });
}

double Monitor::integrate_R_power(double t, double expo) const {
  return run_.integrate(t, [&](const PointData& p) {
    return std::pow(std::fabs(p.R), expo);
  });
}

HypothesisReport Monitor::check_hypotheses(const WeightSpec& spec, int samples) const {
  HypothesisReport rep;
  double t_end = run_.horizon();
  auto times = uniform_times(0.0, t_end, samples);

  rep.inf_R = std::numeric_limits<double>::infinity();
  rep.min_weight_L = std::numeric_limits<double>::infinity();
  for (double t : times) {
    rep.inf_R = std::min(rep.inf_R, run_.inf_field(t, [](const PointData& p) { return p.R; }));
    rep.sup_rm_collar = std::max(rep.sup_rm_collar, run_.collar_sup_rm(t));
    rep.sup_grad_rm_collar =
        std::max(rep.sup_grad_rm_collar, run_.collar_sup_grad_rm(t));
    if (t < spec.V) {
      double minL = run_.inf_field(t, [&](const PointData& p) {
        return weight_L(p.R, spec, t);
      });
      rep.min_weight_L = std::min(rep.min_weight_L, minL);
    }
    rep.C0 = std::max(rep.C0, integrate_R_power(t, 2.0 + 12.0 * spec.alpha));
  }
  rep.scalar_lower_bound_ok = rep.inf_R >= -1.0 - 1e-12;
  rep.collar_ok = rep.sup_rm_collar <= 1.0 + 1e-9 && rep.sup_grad_rm_collar <= 1.0 + 1e-9;
  rep.weight_floor_ok =
      !rep.scalar_lower_bound_ok || spec.V < 1.0 || rep.min_weight_L >= spec.V * (1.0 - 1e-12);

  // divergence of the scalar power integral toward the singular time, when
  // the run is a closed-form scenario with one in reach
  if (const Scenario* sc = run_.scenario()) {
    double t_sing = sc->singular_time();
    if (t_end > 0.9 * t_sing) {
      std::vector<double> lg, li;
      double gap0 = t_sing - 0.5 * t_sing;
      for (int k = 0; k < 10; ++k) {
        double gap = gap0 * std::pow(0.5, k);
        double t = t_sing - gap;
        if (t > t_end) continue;
        lg.push_back(std::log(gap));
        li.push_back(std::log(integrate_R_power(t, 2.0 + 12.0 * spec.alpha)));
      }
      if (lg.size() >= 4) {
        LineFit fit = linear_fit(lg, li);
        double growth = -fit.slope;
        double ratio = std::exp(li.back() - li.front());
        if (growth > 0.01 && ratio > 10.0) {
          rep.C0_diverging = true;
          rep.C0_growth_exponent = growth;
        }
      }
    }
  }

  if (run_.ball_supported()) {
    rep.ball_data = true;
    double t_lo = std::max(0.0, spec.V - 1.0);
    for (int k = 0; k < 24; ++k) {
      double gap = (spec.V - t_lo) * std::pow(0.7, k);
      double t = spec.V - gap;
      if (t < 0.0 || t > t_end) continue;
      double bv = run_.ball_volume(t, std::sqrt(gap));
      rep.sigma1 = std::max(rep.sigma1, bv / (gap * gap));
    }
  }
  return rep;
}

double Monitor::evolution_identity_residual(const WeightSpec& spec, double t,
                                            double dt) const {
  if (!(t - dt >= 0.0) || !(t + dt < std::min(spec.V, run_.horizon()) ))
    throw std::domain_error("evolution identity: stencil leaves the valid window");

  auto F = [&](double tau) { return weighted_ricci_integral(tau, spec); };
  double lhs = (F(t + dt) - F(t - dt)) / (2.0 * dt);

  double w = std::pow(spec.V - t, 1.0 - spec.alpha);
  double wm = std::pow(spec.V - t, -spec.alpha);
  double flux = run_.boundary_flux(t, spec.V, spec.alpha);
  double bulk = run_.integrate(t, [&](const PointData& p) {
    double L = weight_L(p.R, spec, t);
    double P2 = L * L * p.grad_ric2 - L * w * p.dR_dr * p.dric2_dr +
                w * w * p.dR_dr * p.dR_dr * p.ric2;
    double v = -2.0 * P2 / (L * L * L);
    v += 4.0 * p.q_rm_ric / L;
    v += -2.0 * p.ric2 * p.ric2 * w / (L * L);
    v += (1.0 - spec.alpha) * p.ric2 * p.R * wm / (L * L);
    v += -p.R * p.ric2 / L;
    return v;
  });
  return std::fabs(lhs - (flux + bulk));
}

double Monitor::measured_boundary_constant(const WeightSpec& spec, int samples) const {
  if (run_.closed()) return 0.0;
  double t_end = std::min(run_.horizon(), spec.V * (1.0 - 1e-9));
  double c = 0.0;
  for (double t : uniform_times(0.0, t_end, samples))
    c = std::max(c, std::fabs(run_.boundary_flux(t, spec.V, spec.alpha)));
  return c;
}

LedgerEntry Monitor::basic_estimate(const WeightSpec& spec, double r, double s,
                                    double c_hat_boundary) const {
  if (!(0.0 <= r && r <= s && s <= spec.V) || s > run_.horizon())
    throw std::invalid_argument("basic_estimate: need 0 <= r <= s <= min(V, horizon)");
  if (spec.b < 10.0 * spec.T / spec.alpha - 1e-9)
    throw std::invalid_argument("basic_estimate: b below 10 T / alpha");

  auto A = [&](double t) { return weighted_ricci_integral(t, spec); };
  auto quartic = [&](double t) {
    return run_.integrate(t, [&](const PointData& p) {
      double L = weight_L(p.R, spec, t);
      return p.ric2 * p.ric2 / (L * L);
    });
  };
  auto rm_and_power = [&](double t) {
    return run_.integrate(t, [&](const PointData& p) {
      return 8.0 * p.rm2 +
             spec.T * std::pow(std::fabs(p.R), 2.0 + 4.0 * spec.alpha);
    });
  };

  Big lhs = exp_factor(spec, s) * Big::from(A(s));
  lhs += exp_weighted_time_integral(
      [&](double t) { return 0.5 * spec.alpha * spec.b * A(t); }, r, s, spec.V, spec.alpha,
      spec.alpha - 1.0, spec.b, time_nodes);
  lhs += Big::from(9.0 / 8.0) *
         exp_weighted_time_integral(quartic, r, s, spec.V, spec.alpha, 1.0 - spec.alpha,
                                    spec.b, time_nodes);

  Big rhs = exp_factor(spec, r) * Big::from(A(r) + c_hat_boundary * (s - r));
  rhs += exp_weighted_time_integral(rm_and_power, r, s, spec.V, spec.alpha,
                                    spec.alpha - 1.0, spec.b, time_nodes);

  LedgerEntry e;
  e.theorem = "weighted-ricci-basic";
  e.params = {{"r", r}, {"s", s}, {"V", spec.V}, {"alpha", spec.alpha}, {"b", spec.b},
              {"T", spec.T}};
  e.lhs = lhs;
  e.rhs = rhs;
  e.margin = rhs - lhs;
  e.margin_over_rhs = rhs.is_zero() ? 0.0 : (e.margin / rhs.abs()).to_double();
  e.constants = {{"c_hat_boundary", c_hat_boundary}};
  e.verdict = e.margin_over_rhs >= -tol_inequality ? "pass" : "fail";
  e.note = "boundary constant measured as sup |I0| over the run";
  return e;
}

LedgerEntry Monitor::rm2_bound(double t, RmBoundRoute route) const {
  if (!run_.closed())
    throw std::logic_error("rm2_bound: with-boundary runs use the basic estimate only");

  double int_rm2 = run_.integrate(t, [](const PointData& p) { return p.rm2; });
  double int_ric2 = run_.integrate(t, [](const PointData& p) { return p.ric2; });
  double int_R2 = run_.integrate(t, [](const PointData& p) { return p.R * p.R; });

  LedgerEntry e;
  e.theorem = "riemann-l2-vs-scalar";
  e.params = {{"t", t}};
  double c_hat = 0.0;
  if (route == RmBoundRoute::gauss_bonnet) {
    double chi = run_.euler_characteristic();
    double gb = 32.0 * kPi * kPi * chi;
    double combo = int_rm2 - 4.0 * int_ric2 + int_R2;
    c_hat = std::fabs(gb);
    e.constants["chi"] = chi;
    e.constants["gauss_bonnet_expected"] = gb;
    e.constants["gauss_bonnet_combination"] = combo;
    e.constants["identity_rel_residual"] = std::fabs(combo - gb) / std::fabs(gb);
    e.note = "closed 4-manifold Euler identity route";
  } else {
    if (!run_.is_kahler() || run_.complex_dim() != 2)
      throw std::logic_error("rm2_bound: Kahler route needs complex dimension 2");
    double k0 = run_.integrate(0.0, [](const PointData& p) { return p.rm2 - p.R * p.R; });
    c_hat = std::max(k0, 0.0);
    e.constants["initial_rm2_minus_R2"] = k0;
    e.constants["sup_abs_C"] = 0.0;  // closed region: boundary terms vanish
    e.note = "Kahler L^2 identity route, complex dimension 2";
  }
  e.lhs = Big::from(int_rm2);
  e.rhs = Big::from(4.0 * int_ric2 + int_R2 + c_hat);
  e.margin = e.rhs - e.lhs;
  e.margin_over_rhs = (e.margin / e.rhs.abs()).to_double();
  e.constants["c_hat"] = c_hat;
  e.constants["int_rm2"] = int_rm2;
  e.constants["int_ric2"] = int_ric2;
  e.constants["int_R2"] = int_R2;
  e.verdict = e.margin_over_rhs >= -tol_inequality ? "pass" : "fail";
  return e;
}

std::map<std::string, double> Monitor::assemble_c0(const WeightSpec& spec, RmBoundRoute route,
                                                   double c_hat_boundary) const {
  std::map<std::string, double> parts;
  double c_into = 0.0;
  if (route == RmBoundRoute::gauss_bonnet) {
    c_into = std::max(32.0 * kPi * kPi * run_.euler_characteristic(), 0.0);
    parts["route_gauss_bonnet"] = 1.0;
  } else {
    double k0 = run_.integrate(0.0, [](const PointData& p) { return p.rm2 - p.R * p.R; });
    c_into = std::max(k0, 0.0);
    parts["route_kahler"] = 1.0;
  }
  double c_poly = polynomial_domination_constant(spec.alpha, spec.T);
  double vol0 = run_.volume(0.0);
  parts["c_hat_into"] = c_into;
  parts["c_hat_boundary"] = c_hat_boundary;
  parts["c_poly"] = c_poly;
  parts["vol0"] = vol0;
  parts["c0"] = 8.0 * c_into +
                spec.alpha * std::pow(spec.T, 1.0 - spec.alpha) * c_hat_boundary +
                c_poly * std::exp(spec.T) * vol0;
  return parts;
}

LedgerEntry Monitor::main_estimate(const WeightSpec& spec, double r, double s,
                                   const std::map<std::string, double>& c0_parts) const {
  if (!(0.0 <= r && r <= s && s <= spec.V) || s > run_.horizon())
    throw std::invalid_argument("main_estimate: need 0 <= r <= s <= min(V, horizon)");
  if (spec.b < 2000.0 * spec.T / spec.alpha - 1e-9)
    throw std::invalid_argument("main_estimate: b below 2000 T / alpha");
  double c0 = c0_parts.at("c0");

  auto A = [&](double t) { return weighted_ricci_integral(t, spec); };
  auto quartic = [&](double t) {
    return run_.integrate(t, [&](const PointData& p) {
      double L = weight_L(p.R, spec, t);
      return p.ric2 * p.ric2 / (L * L);
    });
  };
  auto scalar_power = [&](double t) {
    return integrate_R_power(t, 2.0 + 12.0 * spec.alpha);
  };

  Big lhs = Big::from(A(s));
  lhs += Big::from(0.5 * power_weighted_time_integral(quartic, r, s, spec.V, spec.alpha,
                                                      1.0 - spec.alpha, time_nodes));

  double tail = power_weighted_time_integral(scalar_power, r, s, spec.V, spec.alpha,
                                             spec.alpha - 1.0, time_nodes);
  Big rhs = exp_factor(spec, r) *
            Big::from(c0 * std::pow(s - r, spec.alpha) / spec.alpha + A(r) + tail);

  LedgerEntry e;
  e.theorem = "weighted-ricci-absorbed";
  e.params = {{"r", r}, {"s", s}, {"V", spec.V}, {"alpha", spec.alpha}, {"b", spec.b},
              {"T", spec.T}};
  e.lhs = lhs;
  e.rhs = rhs;
  e.margin = rhs - lhs;
  e.margin_over_rhs = (e.margin / e.rhs.abs()).to_double();
  e.constants = c0_parts;
  e.verdict = e.margin_over_rhs >= -tol_inequality ? "pass" : "fail";
  e.note = "constant assembled from run data: 8 c_into + alpha T^{1-alpha} c_bdy + "
           "c(alpha,T) e^T Vol_0";
  return e;
}

LedgerEntry Monitor::riemann_l2_uniform(double c1, int samples) const {
  double sup = 0.0, lo = std::numeric_limits<double>::infinity();
  for (double t : uniform_times(0.0, run_.horizon(), samples)) {
    double v = run_.integrate(t, [](const PointData& p) { return p.rm2; });
    sup = std::max(sup, v);
    lo = std::min(lo, v);
  }
  LedgerEntry e;
  e.theorem = "riemann-l2-uniform";
  e.params = {{"samples", static_cast<double>(samples)}};
  e.lhs = Big::from(sup);
  e.rhs = Big::from(c1);
  e.margin = e.rhs - e.lhs;
  e.margin_over_rhs = (e.margin / e.rhs.abs()).to_double();
  e.constants = {{"c1", c1}, {"sup_int_rm2", sup}, {"min_int_rm2", lo}};
  e.verdict = e.margin_over_rhs >= -tol_inequality ? "pass" : "fail";
  e.note = "c1 frozen from a calibration run";
  return e;
}

LedgerEntry Monitor::slab_ricci4(const WeightSpec& spec, double s, double ball_radius,
                                 double c1) const {
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("slab_ricci4: s outside (0,1)");
  if (!(spec.V - 3.0 * s > 0.0))
    throw std::invalid_argument("slab_ricci4: V - 3s must be positive");
  if (!run_.ball_supported()) throw std::logic_error("slab_ricci4: ball data unavailable");
  double t0 = spec.V - 2.0 * s, t1 = spec.V - s;
  if (t1 > run_.horizon()) throw std::invalid_argument("slab_ricci4: slab beyond horizon");

  auto G = [&](double t) {
    return run_.integrate_ball(t, ball_radius,
                               [](const PointData& p) { return p.ric2 * p.ric2; });
  };
  int n = 128;
  std::vector<double> ts = uniform_times(t0, t1, n + 1), gs(n + 1);
  for (int i = 0; i <= n; ++i) gs[i] = G(ts[i]);
  double lhs = trapezoid(ts, gs);

  double sup_ric2 = 0.0;
  for (double t : ts)
    sup_ric2 = std::max(
        sup_ric2, run_.sup_ball(t, ball_radius, [](const PointData& p) { return p.ric2; }));

  double rhs = c1 * (std::pow(s, spec.alpha - 1.0) + sup_ric2 * std::pow(s, 1.0 + spec.alpha));

  LedgerEntry e;
  e.theorem = "slab-ricci-fourth-power";
  e.params = {{"s", s}, {"V", spec.V}, {"alpha", spec.alpha}, {"ball_radius", ball_radius}};
  e.lhs = Big::from(lhs);
  e.rhs = Big::from(rhs);
  e.margin = e.rhs - e.lhs;
  e.margin_over_rhs = (e.margin / e.rhs.abs()).to_double();
  e.constants = {{"c1", c1}, {"sup_ric2_ball", sup_ric2}};
  e.verdict = e.margin_over_rhs >= -tol_inequality ? "pass" : "fail";
  return e;
}

SuperlevelReport Monitor::superlevel_measures(const WeightSpec& spec, double t) const {
  SuperlevelReport rep;
  rep.t = t;
  double wz = std::pow(spec.V - t, 1.0 - 2.0 * spec.alpha);
  double wo = std::pow(spec.V - t, 1.0 - spec.alpha);
  rep.m_Z = run_.integrate(t, [&](const PointData& p) {
    return p.R * wz >= 1.0 ? 1.0 : 0.0;
  });
  rep.m_Omega = run_.integrate(t, [&](const PointData& p) {
    return p.R * wo >= 1.0 ? 1.0 : 0.0;
  });
  rep.m_V = run_.volume(t) - rep.m_Omega;
  double beta = 4.0 * spec.alpha;
  double zint = run_.integrate(t, [&](const PointData& p) {
    return p.R * wz >= 1.0 ? std::pow(std::fabs(p.R), 2.0 + beta) : 0.0;
  });
  rep.chebyshev_rhs = std::pow(spec.V - t, (1.0 - 2.0 * spec.alpha) * (2.0 + beta)) * zint;
  return rep;
}

LedgerEntry Monitor::chebyshev_bound(const WeightSpec& spec, double t) const {
  SuperlevelReport rep = superlevel_measures(spec, t);
  LedgerEntry e;
  e.theorem = "superlevel-chebyshev";
  e.params = {{"t", t}, {"V", spec.V}, {"alpha", spec.alpha}, {"beta", 4.0 * spec.alpha}};
  e.lhs = Big::from(rep.m_Z);
  e.rhs = Big::from(rep.chebyshev_rhs);
  e.margin = e.rhs - e.lhs;
  e.margin_over_rhs = e.rhs.is_zero() ? (rep.m_Z <= 0.0 ? 0.0 : -1.0)
                                      : (e.margin / e.rhs.abs()).to_double();
  e.constants = {{"m_Z", rep.m_Z}, {"m_Omega", rep.m_Omega}, {"m_V", rep.m_V}};
  e.verdict = e.margin_over_rhs >= -tol_inequality ? "pass" : "fail";
  return e;
}

double Monitor::noninflating_lhs(double V, double S, double sigma) const {
  double t_hi = std::min(V - 1e-9 * std::max(V - S, 1e-12), run_.horizon());
  if (!(S < t_hi)) throw std::invalid_argument("noninflating_lhs: empty window");
  auto G = [&](double t) {
    double radius = std::sqrt(std::max(V - t, 0.0));
    return run_.integrate_ball(t, radius, [&](const PointData& p) {
      return std::pow(p.ric2, 0.5 * (2.0 + sigma));
    });
  };
  auto nodes = graded_nodes(S, t_hi, 160, 0.93);
  std::vector<double> gs(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i) gs[i] = G(nodes[i]);
  return trapezoid(nodes, gs);
}

std::pair<LedgerEntry, SlopeFit> Monitor::noninflating(const WeightSpec& spec,
                                                       const Theorem15Params& params,
                                                       const std::vector<double>& S_values,
                                                       double fit_tol,
                                                       bool render_verdict) const {
  if (S_values.size() < 4)
    throw std::invalid_argument("noninflating: need at least 4 ladder points");
  SlopeFit fit;
  for (double S : S_values) {
    double lhs = noninflating_lhs(spec.V, S, params.sigma);
    fit.log_gap.push_back(std::log(spec.V - S));
    fit.log_lhs.push_back(std::log(lhs));
    double bound = std::pow(spec.V - S, 1.0 + spec.alpha / 16.0);
    fit.c_hat = std::max(fit.c_hat, lhs / bound);
  }
  LineFit lf = linear_fit(fit.log_gap, fit.log_lhs);
  fit.slope = lf.slope;
  fit.intercept = lf.intercept;

  LedgerEntry e;
  e.theorem = "noninflating-slope";
  e.params = {{"V", spec.V}, {"alpha", spec.alpha}, {"sigma", params.sigma},
              {"ladder", static_cast<double>(S_values.size())}};
  double required = 1.0 + spec.alpha / 16.0;
  e.lhs = Big::from(required);
  e.rhs = Big::from(fit.slope);
  e.margin = e.rhs - e.lhs;
  e.margin_over_rhs = fit.slope - required;
  e.constants = {{"slope", fit.slope}, {"required_slope", required},
                 {"c_hat_2", fit.c_hat}, {"v", params.v},
                 {"eps_sigma", params.eps_sigma}, {"beta_sigma", params.beta_sigma}};
  if (!render_verdict) {
    e.verdict = "report-only";
    e.note = "hypotheses violated on this run: slope reported without verdict";
  } else {
    e.verdict = fit.slope >= required - fit_tol ? "pass" : "fail";
  }
  return {e, fit};
}

LedgerEntry Monitor::kahler_l2(double t) const {
  if (!run_.is_kahler()) throw std::logic_error("kahler_l2: not a Kahler run");
  if (run_.complex_dim() != 2)
    throw std::logic_error("kahler_l2: C(t) for complex dimension > 2 out of scope");

  double now = run_.integrate(t, [](const PointData& p) { return p.rm2 - p.R * p.R; });
  double initial = run_.integrate(0.0, [](const PointData& p) { return p.rm2 - p.R * p.R; });

  // boundary constant: every ingredient vanishes on the runs in scope
  double c_of_t = 0.0;
  std::string c_note;
  if (run_.closed()) {
    c_note = "closed region: boundary integrals are empty";
  } else {
    throw std::logic_error("kahler_l2: with-boundary Kahler runs out of scope");
  }
  Potentials pot = run_.potentials(t);
  if (!pot.ddbar_f_zero || !pot.ddbar_phi_zero || !pot.christoffel_diff_zero)
    throw std::logic_error("kahler_l2: scenario reports nonflat potential data");

  double residual = std::fabs(now - initial - c_of_t);
  LedgerEntry e;
  e.theorem = "kahler-l2-identity";
  e.params = {{"t", t}};
  e.lhs = Big::from(now);
  e.rhs = Big::from(initial + c_of_t);
  e.margin = e.rhs - e.lhs;
  e.margin_over_rhs = residual / std::max(std::fabs(initial), 1.0);
  e.constants = {{"int_rm2_minus_R2_t", now}, {"int_rm2_minus_R2_0", initial},
                 {"C_of_t", c_of_t}, {"residual", residual}};
  e.verdict = residual <= std::max(1e-8, tol_identity * std::fabs(initial)) ? "pass" : "fail";
  e.note = c_note;
  return e;
}

LedgerEntry Monitor::c_bounded(const std::vector<double>& times) const {
  if (!run_.is_kahler()) throw std::logic_error("c_bounded: not a Kahler run");
  if (!run_.closed()) throw std::logic_error("c_bounded: with-boundary Kahler runs out of scope");
  double sup = 0.0;
  for (double t : times) {
    Potentials pot = run_.potentials(t);
    if (!pot.christoffel_diff_zero)
      throw std::logic_error("c_bounded: nonzero Christoffel difference unsupported");
    // closed region: each boundary integral is empty, C(t) = 0
    sup = std::max(sup, 0.0);
  }
  LedgerEntry e;
  e.theorem = "boundary-constant-bounded";
  e.params = {{"samples", static_cast<double>(times.size())}};
  e.lhs = Big::from(sup);
  e.rhs = Big::from(std::numeric_limits<double>::infinity());
  e.margin = e.rhs;
  e.margin_over_rhs = 1.0;
  e.constants = {{"sup_abs_C", sup}};
  e.verdict = "pass";
  e.note = "time series of |C(t)|; bounded on the run window";
  return e;
}

double polynomial_domination_constant(double alpha, double T) {
  auto h = [&](double x) {
    return 2000.0 * x * x + T * std::pow(x, 2.0 + 4.0 * alpha) -
           std::pow(x, 2.0 + 12.0 * alpha);
  };
  // coarse log-space scan, then local refinement
  double best_x = 1.0, best = h(1.0);
  for (int i = 0; i <= 4000; ++i) {
    double lx = -6.0 + 18.0 * i / 4000.0;
    double x = std::pow(10.0, lx);
    double v = h(x);
    if (v > best) { best = v; best_x = x; }
  }
  double lo = best_x / 1.05, hi = best_x * 1.05;
  for (int it = 0; it < 200; ++it) {
    double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (h(m1) < h(m2)) lo = m1; else hi = m2;
  }
  best = std::max(best, h(0.5 * (lo + hi)));
  return std::max(best, 0.0);
}

}  // namespace ricci
