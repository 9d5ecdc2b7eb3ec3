#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace ricci {

// Frame-component norms. The Kahler case uses the unitary-frame component
// sums (R = sum R_{i ibar k kbar}, etc.), which differ from the real-tensor
// sums by fixed factors (R_real = 2 R_kahler, |Rm|^2_real = 4 |Rm|^2_kahler
// on a Kahler manifold). Callers pick the convention by picking the tensor.
struct CurvatureScalars {
  double scalar = 0.0;  // R
  double ric2 = 0.0;    // |Ric|^2
  double rm2 = 0.0;     // |Rm|^2
};

// Algebraic curvature tensor R_{abcd} in an orthonormal frame, n = 4.
// Invariants: R_{abcd} = -R_{bacd} = -R_{abdc} = R_{cdab},
// R_{abcd} + R_{acdb} + R_{adbc} = 0.
class RiemannTensor4 {
public:
  RiemannTensor4() : c_{} {}

  double at(int a, int b, int c, int d) const { return c_[idx(a, b, c, d)]; }
  double& at(int a, int b, int c, int d) { return c_[idx(a, b, c, d)]; }

  static RiemannTensor4 zero() { return RiemannTensor4(); }

  // R_{abcd} = K (d_ac d_bd - d_ad d_bc)
  static RiemannTensor4 constant_curvature(double K);

  // Orthogonal product of two surfaces with Gauss curvatures K1 (directions
  // 0,1) and K2 (directions 2,3).
  static RiemannTensor4 product_surfaces(double K1, double K2);

  // Gaussian raw components projected onto the symmetric subspace by group
  // averaging; deterministic in the seed.
  static RiemannTensor4 random(std::uint64_t seed);

  // Group-average projection enforcing all three invariants exactly.
  RiemannTensor4 projected() const;
  double symmetry_residual() const;

  // Ric_{ab} = sum_c R_{acbc}
  std::array<double, 16> ricci() const;
  CurvatureScalars scalar_norms() const;

  RiemannTensor4 scaled(double lambda) const;
  // Frame change by a 4x4 matrix O (row-major), conjugating all four slots.
  RiemannTensor4 rotated(const std::array<double, 16>& O) const;

private:
  static int idx(int a, int b, int c, int d) { return ((a * 4 + b) * 4 + c) * 4 + d; }
  std::array<double, 256> c_;
};

// Q = R_{ikjl} Ric_{ij} Ric_{kl}; the reaction term in the |Ric|^2 evolution.
double rm_ric_ric(const RiemannTensor4& rm);

// Kahler curvature R_{i jbar k lbar} in a unitary frame (g_{i jbar} = d_ij),
// complex dimension m >= 2. Invariants: symmetric under i<->k and j<->l,
// conj R_{i jbar k lbar} = R_{j ibar l kbar}.
class KahlerCurvature {
public:
  explicit KahlerCurvature(int m);

  int dim() const { return m_; }
  std::complex<double> at(int i, int j, int k, int l) const { return c_[idx(i, j, k, l)]; }
  std::complex<double>& at(int i, int j, int k, int l) { return c_[idx(i, j, k, l)]; }

  static KahlerCurvature zero(int m) { return KahlerCurvature(m); }

  // m >= 2 required; Gaussian raw components projected by averaging over the
  // 8-element symmetry group. Deterministic in (m, seed).
  static KahlerCurvature random(int m, std::uint64_t seed);

  // Constant holomorphic sectional curvature H:
  // R_{i jbar k lbar} = (H/2)(d_ij d_kl + d_il d_kj).
  static KahlerCurvature constant_holomorphic(int m, double H);

  // CP^1 x CP^1 block tensor, factors with Gauss curvatures K1, K2.
  static KahlerCurvature product_lines(double K1, double K2);

  KahlerCurvature projected() const;
  double symmetry_residual() const;

  // Ric_{k lbar} = sum_i R_{i ibar k lbar}, Hermitian, row-major m x m.
  std::vector<std::complex<double>> ricci() const;
  double ricci_hermitian_residual() const;

  // Unitary-frame component sums (see note on CurvatureScalars).
  CurvatureScalars scalar_norms() const;

  KahlerCurvature scaled(double lambda) const;
  // Unitary frame change, U row-major m x m: conjugates holomorphic slots by
  // U and antiholomorphic slots by conj(U).
  KahlerCurvature rotated(const std::vector<std::complex<double>>& U) const;

private:
  int idx(int i, int j, int k, int l) const { return ((i * m_ + j) * m_ + k) * m_ + l; }
  int m_;
  std::vector<std::complex<double>> c_;
};

}  // namespace ricci
