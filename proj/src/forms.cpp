#include "riccilab/forms.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace ricci {

namespace {

std::vector<std::uint32_t> increasing_masks(int m, int k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
    if (std::popcount(mask) == k) out.push_back(mask);
  return out;  // ascending mask order
}

std::vector<int> rank_table(int m, const std::vector<std::uint32_t>& masks) {
  std::vector<int> rank(1u << m, -1);
  for (size_t i = 0; i < masks.size(); ++i) rank[masks[i]] = static_cast<int>(i);
  return rank;
}

// Sign of merging the increasing sequences S and T (disjoint): parity of the
// number of pairs (a in S, b in T) with a > b.
int merge_sign(std::uint32_t S, std::uint32_t T) {
  int inv = 0;
  for (std::uint32_t s = S; s; s &= s - 1) {
    int a = std::countr_zero(s);
    std::uint32_t below = T & ((1u << a) - 1);
    inv += std::popcount(below);
  }
  return (inv & 1) ? -1 : 1;
}

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.1415926535897932384626433832795;

constexpr int kMaxDim = 8;

struct OmegaTable {
  // pow[m][k] = omega^k in complex dimension m
  std::vector<std::vector<PQForm>> pow;
  OmegaTable() {
    pow.resize(kMaxDim + 1);
    for (int m = 1; m <= kMaxDim; ++m) {
      pow[m].resize(m + 1);
      PQForm acc(m, 0, 0);
      acc.at_mask(0, 0) = 1.0;
      pow[m][0] = acc;
      PQForm w = PQForm::kahler_form(m);
      for (int k = 1; k <= m; ++k) {
        acc = wedge(acc, w);
        pow[m][k] = acc;
      }
    }
  }
};

const PQForm& cached_omega_power(int m, int k) {
  static const OmegaTable table;
  if (m < 1 || m > kMaxDim || k < 0 || k > m)
    throw std::invalid_argument("omega_power: out of range");
  return table.pow[m][k];
}

}  // namespace

PQForm::PQForm(int m, int p, int q) : m_(m), p_(p), q_(q) {
  if (m < 0 || p < 0 || q < 0 || p > m || q > m)
    throw std::invalid_argument("PQForm: invalid degrees");
  masks_p_ = increasing_masks(m, p);
  masks_q_ = increasing_masks(m, q);
  rank_p_ = rank_table(m, masks_p_);
  rank_q_ = rank_table(m, masks_q_);
  coef_.assign(masks_p_.size() * masks_q_.size(), {0.0, 0.0});
}

std::complex<double>& PQForm::at_mask(std::uint32_t I, std::uint32_t J) {
  return coef_[rank_p_[I] * masks_q_.size() + rank_q_[J]];
}

std::complex<double> PQForm::at_mask(std::uint32_t I, std::uint32_t J) const {
  return coef_[rank_p_[I] * masks_q_.size() + rank_q_[J]];
}

PQForm PQForm::operator+(const PQForm& o) const {
  if (m_ != o.m_ || p_ != o.p_ || q_ != o.q_)
    throw std::invalid_argument("PQForm: shape mismatch in +");
  PQForm out = *this;
  for (size_t i = 0; i < coef_.size(); ++i) out.coef_[i] += o.coef_[i];
  return out;
}

PQForm PQForm::operator-(const PQForm& o) const {
  if (m_ != o.m_ || p_ != o.p_ || q_ != o.q_)
    throw std::invalid_argument("PQForm: shape mismatch in -");
  PQForm out = *this;
  for (size_t i = 0; i < coef_.size(); ++i) out.coef_[i] -= o.coef_[i];
  return out;
}

PQForm PQForm::operator*(std::complex<double> s) const {
  PQForm out = *this;
  for (auto& c : out.coef_) c *= s;
  return out;
}

double PQForm::max_abs() const {
  double r = 0.0;
  for (const auto& c : coef_) r = std::max(r, std::abs(c));
  return r;
}

double PQForm::reality_residual() const {
  if (p_ != q_) throw std::invalid_argument("reality_residual: needs p == q");
  double sgn = (p_ * q_) % 2 ? -1.0 : 1.0;
  double r = 0.0;
  for (auto I : masks_p_)
    for (auto J : masks_q_)
      r = std::max(r, std::abs(at_mask(I, J) - sgn * std::conj(at_mask(J, I))));
  return r;
}

PQForm PQForm::kahler_form(int m) {
  PQForm w(m, 1, 1);
  std::complex<double> unit{0.0, 1.0 / kTwoPi};
  for (int i = 0; i < m; ++i) w.at_mask(1u << i, 1u << i) = unit;
  return w;
}

PQForm wedge(const PQForm& a, const PQForm& b) {
  if (a.m() != b.m()) throw std::invalid_argument("wedge: dimension mismatch");
  int m = a.m(), p = a.p() + b.p(), q = a.q() + b.q();
  if (p > m || q > m) throw std::invalid_argument("wedge: degree overflow");
  PQForm out(m, p, q);
  // sign from moving b's holomorphic block past a's antiholomorphic block
  double swap_sgn = (a.q() * b.p()) % 2 ? -1.0 : 1.0;
  for (auto I : out.masks_p_) {
    // enumerate sub-masks of I with popcount p_a
    for (std::uint32_t S = I;; S = (S - 1) & I) {
      if (std::popcount(S) == a.p()) {
        std::uint32_t Sc = I & ~S;
        int sI = merge_sign(S, Sc);
        for (auto J : out.masks_q_) {
          for (std::uint32_t T = J;; T = (T - 1) & J) {
            if (std::popcount(T) == a.q()) {
              std::uint32_t Tc = J & ~T;
              int sJ = merge_sign(T, Tc);
              out.at_mask(I, J) +=
                  swap_sgn * sI * sJ * a.at_mask(S, T) * b.at_mask(Sc, Tc);
            }
            if (T == 0) break;
          }
        }
      }
      if (S == 0) break;
    }
  }
  return out;
}

PQForm wedge_power(const PQForm& a, int k) {
  if (k < 0) throw std::invalid_argument("wedge_power: negative power");
  PQForm out(a.m(), 0, 0);
  out.at_mask(0, 0) = 1.0;
  for (int i = 0; i < k; ++i) out = wedge(out, a);
  return out;
}

PQForm omega_power(int m, int k) { return cached_omega_power(m, k); }

double top_coefficient(const PQForm& f, double* imag_residual) {
  int m = f.m();
  if (f.p() != m || f.q() != m) throw std::invalid_argument("top_coefficient: not top degree");
  std::uint32_t full = (1u << m) - 1;
  std::complex<double> num = f.at_mask(full, full);
  std::complex<double> den = cached_omega_power(m, m).at_mask(full, full);
  std::complex<double> lambda = num / den;
  if (imag_residual) *imag_residual = std::fabs(lambda.imag());
  return lambda.real();
}

PQForm ricci_form(const KahlerCurvature& K) {
  int m = K.dim();
  PQForm rho(m, 1, 1);
  auto ric = K.ricci();
  std::complex<double> unit{0.0, 1.0 / kTwoPi};
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) rho.at_mask(1u << k, 1u << l) = unit * ric[k * m + l];
  return rho;
}

PQForm curvature_two_form(const KahlerCurvature& K, int i_up, int j_down) {
  int m = K.dim();
  PQForm w(m, 1, 1);
  std::complex<double> unit{0.0, 1.0 / kTwoPi};
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) w.at_mask(1u << k, 1u << l) = unit * K.at(j_down, i_up, k, l);
  return w;
}

PQForm second_chern_form(const KahlerCurvature& K) {
  int m = K.dim();
  PQForm rho = ricci_form(K);
  PQForm mixed(m, 2, 2);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      mixed = mixed + wedge(curvature_two_form(K, i, j), curvature_two_form(K, j, i));
  return (wedge(rho, rho) - mixed) * 0.5;
}

std::array<double, 3> apte_residuals(const KahlerCurvature& K) {
  int m = K.dim();
  CurvatureScalars s = K.scalar_norms();
  double denom = static_cast<double>(m) * (m - 1);
  PQForm rho2 = wedge_power(ricci_form(K), 2);
  PQForm c2 = second_chern_form(K);
  PQForm wm2 = omega_power(m, m - 2);

  double lhs1 = top_coefficient(wedge(rho2, wm2));
  double rhs1 = (s.scalar * s.scalar - s.ric2) / denom;
  double lhs2 = top_coefficient(wedge(c2, wm2));
  double rhs2 = (s.scalar * s.scalar - 2.0 * s.ric2 + s.rm2) / (2.0 * denom);
  double lhs3 = top_coefficient(wedge(rho2 - c2 * 2.0, wm2));
  double rhs3 = (s.ric2 - s.rm2) / denom;

  return {std::fabs(lhs1 - rhs1), std::fabs(lhs2 - rhs2), std::fabs(lhs3 - rhs3)};
}

double ChristoffelDiff::symmetry_residual() const {
  double r = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) r = std::max(r, std::abs(at(i, j, k) - at(i, k, j)));
  return r;
}

double BetaForm::reality_residual() const {
  // part21 + part12 is real iff part12 is the conjugate of part21 with
  // holomorphic/antiholomorphic slots swapped (the reorder sign is +1 here)
  double r = 0.0;
  const PQForm& a = part21;
  const PQForm& b = part12;
  for (auto I : a.holo_masks())
    for (auto J : a.anti_masks())
      r = std::max(r, std::abs(std::conj(a.at_mask(I, J)) - b.at_mask(J, I)));
  return r;
}

BetaForm beta_form(const ChristoffelDiff& dgamma, const KahlerCurvature& curv,
                   const KahlerCurvature& curv0) {
  int m = dgamma.m;
  if (curv.dim() != m || curv0.dim() != m)
    throw std::invalid_argument("beta_form: dimension mismatch");
  const double norm = 1.0 / (8.0 * kPi * kPi);

  // (2,1) part: (1/8pi^2) (G^i_{jk}) (R_i^j_{g rbar} + R0_i^j_{g rbar})
  // on dzbar^r ^ dz^k ^ dz^g; reordering to dz^k ^ dz^g ^ dzbar^r is an even
  // permutation of the anticommuting factors.
  PQForm part21(m, 2, 1);
  for (int k = 0; k < m; ++k)
    for (int g = 0; g < m; ++g) {
      if (k == g) continue;
      for (int r = 0; r < m; ++r) {
        std::complex<double> t{0.0, 0.0};
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j)
            t += dgamma.at(i, j, k) * (curv.at(i, j, g, r) + curv0.at(i, j, g, r));
        std::uint32_t I = (1u << k) | (1u << g);
        double sgn = (k < g) ? 1.0 : -1.0;
        part21.at_mask(I, 1u << r) += sgn * norm * t;
      }
    }

  // conjugate (1,2) part
  PQForm part12(m, 1, 2);
  for (auto I : part21.holo_masks())
    for (auto J : part21.anti_masks())
      part12.at_mask(J, I) = std::conj(part21.at_mask(I, J));

  return BetaForm{part21, part12};
}

}  // namespace ricci
