#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "riccilab/curvature.hpp"

namespace ricci {

// A (p,q)-form at a point in a unitary frame of complex dimension m.
// Coefficients are stored on the monomial basis dz^I ^ dzbar^J with I, J
// strictly increasing index tuples, all scalar factors (including the
// sqrt(-1)/2pi of each dz^dzbar pair) folded into the coefficient. So the
// Kahler form is omega = (i/2pi) sum_i dz^i ^ dzbar^i with coefficients
// (i/2pi) on the diagonal, and the Apte identities read without extra
// constants.
class PQForm {
public:
  PQForm() = default;
  PQForm(int m, int p, int q);

  int m() const { return m_; }
  int p() const { return p_; }
  int q() const { return q_; }

  // coefficient on the monomial indexed by increasing tuples I (size p)
  // and J (size q), each given as a bitmask over {0..m-1}
  std::complex<double>& at_mask(std::uint32_t I, std::uint32_t J);
  std::complex<double> at_mask(std::uint32_t I, std::uint32_t J) const;

  const std::vector<std::complex<double>>& coefficients() const { return coef_; }
  std::vector<std::complex<double>>& coefficients() { return coef_; }
  const std::vector<std::uint32_t>& holo_masks() const { return masks_p_; }
  const std::vector<std::uint32_t>& anti_masks() const { return masks_q_; }

  PQForm operator+(const PQForm& o) const;
  PQForm operator-(const PQForm& o) const;
  PQForm operator*(std::complex<double> s) const;

  double max_abs() const;
  // 0 when conj(f) with slots swapped, signed by (-1)^{pq}, equals f
  double reality_residual() const;

  static PQForm kahler_form(int m);

private:
  int m_ = 0, p_ = 0, q_ = 0;
  std::vector<std::uint32_t> masks_p_, masks_q_;  // increasing-mask bases
  std::vector<int> rank_p_, rank_q_;              // mask -> basis rank
  std::vector<std::complex<double>> coef_;
  friend PQForm wedge(const PQForm&, const PQForm&);
};

// Graded-commutative exterior product. Throws on dimension mismatch or
// degree overflow (p_a+p_b > m or q_a+q_b > m).
PQForm wedge(const PQForm& a, const PQForm& b);

PQForm wedge_power(const PQForm& a, int k);
PQForm omega_power(int m, int k);

// For a top-degree (m,m) real form f = lambda omega^m, returns lambda.
// The imaginary residual of the coefficient ratio is written to imag_residual
// when non-null. Throws if f is not of top degree.
double top_coefficient(const PQForm& f, double* imag_residual = nullptr);

// rho = (i/2pi) Ric_{k lbar} dz^k ^ dzbar^l
PQForm ricci_form(const KahlerCurvature& K);
// Omega^i_j = (i/2pi) R_{j ibar k lbar} dz^k ^ dzbar^l (unitary frame)
PQForm curvature_two_form(const KahlerCurvature& K, int i_up, int j_down);
// c2(omega) = 1/2 sum_{ij} (Omega^i_i ^ Omega^j_j - Omega^i_j ^ Omega^j_i)
PQForm second_chern_form(const KahlerCurvature& K);

// Residuals of the three pointwise identities relating rho^2 ^ omega^{m-2},
// c2 ^ omega^{m-2} and (rho^2 - 2 c2) ^ omega^{m-2} to the scalar norms.
std::array<double, 3> apte_residuals(const KahlerCurvature& K);

// Difference of Christoffel symbols of two Kahler metrics in one unitary
// frame; a tensor, components G^i_{jk} symmetric in (j,k).
struct ChristoffelDiff {
  int m = 0;
  std::vector<std::complex<double>> g;  // [((i*m)+j)*m+k]
  explicit ChristoffelDiff(int m_) : m(m_), g(static_cast<size_t>(m_) * m_ * m_, {0.0, 0.0}) {}
  std::complex<double>& at(int i, int j, int k) { return g[(i * m + j) * m + k]; }
  std::complex<double> at(int i, int j, int k) const { return g[(i * m + j) * m + k]; }
  double symmetry_residual() const;
};

// The boundary 3-form built from a Christoffel difference and the curvatures
// of the two metrics, with the 1/8pi^2 normalization: a (2,1) part plus its
// conjugate (1,2) part.
struct BetaForm {
  PQForm part21, part12;
  double reality_residual() const;
};

BetaForm beta_form(const ChristoffelDiff& dgamma, const KahlerCurvature& curv,
                   const KahlerCurvature& curv0);

}  // namespace ricci
