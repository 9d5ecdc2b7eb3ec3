#include "riccilab/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace ricci {

namespace {
constexpr double kTwoPiSq = 2.0 * 3.1415926535897932384626433832795 *
                            3.1415926535897932384626433832795;
}

double trapezoid_uniform(const std::vector<double>& y, double h) {
  if (y.size() < 2) throw std::invalid_argument("trapezoid: needs >= 2 samples");
  double s = 0.5 * (y.front() + y.back());
  for (size_t i = 1; i + 1 < y.size(); ++i) s += y[i];
  return s * h;
}

double simpson_uniform(const std::vector<double>& y, double h) {
  if (y.size() < 3 || y.size() % 2 == 0)
    throw std::invalid_argument("simpson: needs an odd number of points >= 3");
  double s = y.front() + y.back();
  for (size_t i = 1; i + 1 < y.size(); ++i) s += (i % 2 ? 4.0 : 2.0) * y[i];
  return s * h / 3.0;
}

double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("trapezoid: needs >= 2 matching samples");
  double s = 0.0;
  for (size_t i = 0; i + 1 < x.size(); ++i) s += 0.5 * (y[i] + y[i + 1]) * (x[i + 1] - x[i]);
  return s;
}

Integral integrate_series(const std::vector<double>& t, const std::vector<double>& v) {
  if (t.size() != v.size() || t.size() < 2)
    throw std::invalid_argument("integrate_series: needs >= 2 samples");
  for (size_t i = 0; i + 1 < t.size(); ++i)
    if (!(t[i + 1] > t[i])) throw std::invalid_argument("integrate_series: non-monotone times");
  double fine = trapezoid(t, v);
  if (t.size() < 3) return {fine, std::fabs(fine)};
  std::vector<double> tc, vc;
  for (size_t i = 0; i < t.size(); i += 2) {
    tc.push_back(t[i]);
    vc.push_back(v[i]);
  }
  if (tc.back() != t.back()) {
    tc.push_back(t.back());
    vc.push_back(v.back());
  }
  double coarse = trapezoid(tc, vc);
  // trapezoid error halves like h^2: Richardson gives |fine-coarse|/3
  return {fine, std::fabs(fine - coarse) / 3.0};
}

Integral radial_shell_integral(const std::vector<double>& r, const std::vector<double>& f,
                               const std::vector<double>& psi, int i_lo, int i_hi) {
  if (i_lo < 0 || i_hi >= static_cast<int>(r.size()) || i_hi - i_lo < 1)
    throw std::invalid_argument("radial_shell_integral: bad index range");
  std::vector<double> xs, ys;
  xs.reserve(i_hi - i_lo + 1);
  for (int i = i_lo; i <= i_hi; ++i) {
    xs.push_back(r[i]);
    ys.push_back(f[i] * kTwoPiSq * psi[i] * psi[i] * psi[i]);
  }
  int n = static_cast<int>(xs.size());
  bool uniform = true;
  double h = xs[1] - xs[0];
  for (int i = 1; i + 1 < n; ++i)
    if (std::fabs((xs[i + 1] - xs[i]) - h) > 1e-9 * std::fabs(h)) { uniform = false; break; }
  double value, other;
  if (uniform && n % 2 == 1 && n >= 3) {
    value = simpson_uniform(ys, h);
    other = trapezoid(xs, ys);
  } else {
    value = trapezoid(xs, ys);
    std::vector<double> xc, yc;
    for (int i = 0; i < n; i += 2) { xc.push_back(xs[i]); yc.push_back(ys[i]); }
    if (xc.back() != xs.back()) { xc.push_back(xs.back()); yc.push_back(ys.back()); }
    other = xc.size() >= 2 ? trapezoid(xc, yc) : value;
  }
  return {value, std::fabs(value - other)};
}

double power_weighted_time_integral(const std::function<double(double)>& H, double r, double s,
                                    double V, double alpha, double power, int n) {
  if (!(r <= s) || !(s <= V)) throw std::invalid_argument("power_weighted: need r <= s <= V");
  if (r == s) return 0.0;
  // w = (V-t)^alpha, t = V - w^{1/alpha}:
  //   int (V-t)^power H dt = (1/alpha) int_{w(s)}^{w(r)} w^{(1+power)/alpha - 1} H(t(w)) dw
  double wlo = std::pow(V - s, alpha), whi = std::pow(V - r, alpha);
  double expo = (1.0 + power) / alpha - 1.0;
  double h = (whi - wlo) / n;
  double acc = 0.0;
  for (int i = 0; i <= n; ++i) {
    double w = wlo + h * i;
    double g = (w == 0.0 && expo > 0.0) ? 0.0
               : std::pow(w, expo) * H(V - std::pow(w, 1.0 / alpha));
    acc += (i == 0 || i == n) ? 0.5 * g : g;
  }
  return acc * h / alpha;
}

Big exp_weighted_time_integral(const std::function<double(double)>& H, double r, double s,
                               double V, double alpha, double power, double b, int n) {
  if (!(r <= s) || !(s <= V)) throw std::invalid_argument("exp_weighted: need r <= s <= V");
  Big total;
  if (r == s) return total;
  double wlo = std::pow(V - s, alpha), whi = std::pow(V - r, alpha);
  double expo = (1.0 + power) / alpha - 1.0;
  double h = (whi - wlo) / n;
  auto G = [&](double w) {
    if (w == 0.0 && expo > 0.0) return 0.0;
    return std::pow(w, expo) * H(V - std::pow(w, 1.0 / alpha)) / alpha;
  };
  double g_hi = G(wlo);
  for (int i = 0; i < n; ++i) {
    double w0 = wlo + h * i, w1 = w0 + h;
    double g0 = g_hi, g1 = G(w1);
    g_hi = g1;
    // int_{w0}^{w1} e^{bw} (c0 + c1 (w - w0)) dw
    //   = e^{b w0} [ c0 (e^{bh}-1)/b + c1 (h e^{bh} - (e^{bh}-1)/b)/b ]
    double c1 = (g1 - g0) / h;
    double bh = b * h;
    Big term;
    if (bh < 700.0) {
      double em1 = std::expm1(bh);
      double bracket = g0 * em1 / b + c1 * (h * std::exp(bh) - em1 / b) / b;
      term = Big::exp_of(b * w0) * Big::from(bracket);
    } else {
      // e^{bh} dominates; no cancellation in the scaled subtraction
      Big E0 = Big::exp_of(b * w0), E1 = Big::exp_of(b * w1);
      Big ib = Big::from(1.0 / b);
      term = (E1 - E0) * ib * Big::from(g0);
      term += (E1 * Big::from(h) - (E1 - E0) * ib) * ib * Big::from(c1);
    }
    total += term;
  }
  return total;
}

LineFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("linear_fit: bad input");
  size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += x[i]; sy += y[i];
    sxx += x[i] * x[i]; sxy += x[i] * y[i]; syy += y[i] * y[i];
  }
  double den = n * sxx - sx * sx;
  LineFit fit;
  fit.slope = (n * sxy - sx * sy) / den;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss_tot = syy - sy * sy / n;
  double ss_res = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double e = y[i] - (fit.slope * x[i] + fit.intercept);
    ss_res += e * e;
  }
  fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

std::vector<double> graded_nodes(double a, double b, int n, double ratio) {
  if (n < 2) throw std::invalid_argument("graded_nodes: n >= 2");
  std::vector<double> out;
  out.reserve(n);
  // spacing shrinks by `ratio` toward b
  double total = 0.0;
  std::vector<double> steps(n - 1);
  double w = 1.0;
  for (int i = 0; i < n - 1; ++i) { steps[i] = w; total += w; w *= ratio; }
  double x = a;
  out.push_back(a);
  for (int i = 0; i < n - 1; ++i) {
    x += (b - a) * steps[i] / total;
    out.push_back(i == n - 2 ? b : x);
  }
  return out;
}

}  // namespace ricci
