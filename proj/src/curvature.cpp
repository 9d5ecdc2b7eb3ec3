#include "riccilab/curvature.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace ricci {

RiemannTensor4 RiemannTensor4::constant_curvature(double K) {
  RiemannTensor4 r;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          r.at(a, b, c, d) = K * ((a == c && b == d ? 1.0 : 0.0) - (a == d && b == c ? 1.0 : 0.0));
  return r;
}

RiemannTensor4 RiemannTensor4::product_surfaces(double K1, double K2) {
  RiemannTensor4 r;
  auto set_block = [&r](int u, int v, double K) {
    r.at(u, v, u, v) = K;
    r.at(v, u, v, u) = K;
    r.at(u, v, v, u) = -K;
    r.at(v, u, u, v) = -K;
  };
  set_block(0, 1, K1);
  set_block(2, 3, K2);
  return r;
}

RiemannTensor4 RiemannTensor4::random(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  RiemannTensor4 raw;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          raw.at(a, b, c, d) = nd(gen);
  return raw.projected();
}

RiemannTensor4 RiemannTensor4::projected() const {
  // pair antisymmetry
  RiemannTensor4 s1;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          s1.at(a, b, c, d) =
              0.25 * (at(a, b, c, d) - at(b, a, c, d) - at(a, b, d, c) + at(b, a, d, c));
  // pair exchange
  RiemannTensor4 s2;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          s2.at(a, b, c, d) = 0.5 * (s1.at(a, b, c, d) + s1.at(c, d, a, b));
  // remove the 4-form part: cyclic average over the last three slots is
  // totally antisymmetric here, and subtracting a third of it kills the
  // first-Bianchi defect while preserving the other symmetries
  RiemannTensor4 out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double cyc = s2.at(a, b, c, d) + s2.at(a, c, d, b) + s2.at(a, d, b, c);
          out.at(a, b, c, d) = s2.at(a, b, c, d) - cyc / 3.0;
        }
  return out;
}

double RiemannTensor4::symmetry_residual() const {
  double r = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          r = std::max(r, std::fabs(at(a, b, c, d) + at(b, a, c, d)));
          r = std::max(r, std::fabs(at(a, b, c, d) + at(a, b, d, c)));
          r = std::max(r, std::fabs(at(a, b, c, d) - at(c, d, a, b)));
          r = std::max(r, std::fabs(at(a, b, c, d) + at(a, c, d, b) + at(a, d, b, c)));
        }
  return r;
}

std::array<double, 16> RiemannTensor4::ricci() const {
  std::array<double, 16> ric{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double s = 0.0;
      for (int c = 0; c < 4; ++c) s += at(a, c, b, c);
      ric[a * 4 + b] = s;
    }
  return ric;
}

CurvatureScalars RiemannTensor4::scalar_norms() const {
  CurvatureScalars out;
  auto ric = ricci();
  for (int a = 0; a < 4; ++a) out.scalar += ric[a * 4 + a];
  for (double v : ric) out.ric2 += v * v;
  for (double v : c_) out.rm2 += v * v;
  return out;
}

RiemannTensor4 RiemannTensor4::scaled(double lambda) const {
  RiemannTensor4 out = *this;
  for (double& v : out.c_) v *= lambda;
  return out;
}

RiemannTensor4 RiemannTensor4::rotated(const std::array<double, 16>& O) const {
  RiemannTensor4 out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double s = 0.0;
          for (int p = 0; p < 4; ++p)
            for (int q = 0; q < 4; ++q)
              for (int u = 0; u < 4; ++u)
                for (int v = 0; v < 4; ++v)
                  s += O[a * 4 + p] * O[b * 4 + q] * O[c * 4 + u] * O[d * 4 + v] * at(p, q, u, v);
          out.at(a, b, c, d) = s;
        }
  return out;
}

double rm_ric_ric(const RiemannTensor4& rm) {
  auto ric = rm.ricci();
  double q = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j)
        for (int l = 0; l < 4; ++l)
          q += rm.at(i, k, j, l) * ric[i * 4 + j] * ric[k * 4 + l];
  return q;
}

KahlerCurvature::KahlerCurvature(int m) : m_(m) {
  if (m < 2) throw std::invalid_argument("KahlerCurvature: complex dimension must be >= 2");
  c_.assign(static_cast<size_t>(m) * m * m * m, {0.0, 0.0});
}

KahlerCurvature KahlerCurvature::random(int m, std::uint64_t seed) {
  KahlerCurvature raw(m);
  std::mt19937_64 gen(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(m)));
  std::normal_distribution<double> nd(0.0, 1.0);
  for (auto& v : raw.c_) v = {nd(gen), nd(gen)};
  return raw.projected();
}

KahlerCurvature KahlerCurvature::constant_holomorphic(int m, double H) {
  KahlerCurvature r(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          r.at(i, j, k, l) =
              0.5 * H * ((i == j && k == l ? 1.0 : 0.0) + (i == l && k == j ? 1.0 : 0.0));
  return r;
}

KahlerCurvature KahlerCurvature::product_lines(double K1, double K2) {
  KahlerCurvature r(2);
  r.at(0, 0, 0, 0) = K1;
  r.at(1, 1, 1, 1) = K2;
  return r;
}

KahlerCurvature KahlerCurvature::projected() const {
  // Average over the group generated by i<->k, j<->l and the conjugation
  // symmetry; 8 elements, an orthogonal projection onto the invariant space.
  KahlerCurvature out(m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      for (int k = 0; k < m_; ++k)
        for (int l = 0; l < m_; ++l) {
          std::complex<double> s =
              at(i, j, k, l) + at(k, j, i, l) + at(i, l, k, j) + at(k, l, i, j);
          s += std::conj(at(j, i, l, k)) + std::conj(at(j, k, l, i)) +
               std::conj(at(l, i, j, k)) + std::conj(at(l, k, j, i));
          out.at(i, j, k, l) = s / 8.0;
        }
  return out;
}

double KahlerCurvature::symmetry_residual() const {
  double r = 0.0;
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      for (int k = 0; k < m_; ++k)
        for (int l = 0; l < m_; ++l) {
          r = std::max(r, std::abs(at(i, j, k, l) - at(k, j, i, l)));
          r = std::max(r, std::abs(at(i, j, k, l) - at(i, l, k, j)));
          r = std::max(r, std::abs(std::conj(at(i, j, k, l)) - at(j, i, l, k)));
        }
  return r;
}

std::vector<std::complex<double>> KahlerCurvature::ricci() const {
  std::vector<std::complex<double>> ric(static_cast<size_t>(m_) * m_, {0.0, 0.0});
  for (int k = 0; k < m_; ++k)
    for (int l = 0; l < m_; ++l) {
      std::complex<double> s{0.0, 0.0};
      for (int i = 0; i < m_; ++i) s += at(i, i, k, l);
      ric[k * m_ + l] = s;
    }
  return ric;
}

double KahlerCurvature::ricci_hermitian_residual() const {
  auto ric = ricci();
  double r = 0.0;
  for (int k = 0; k < m_; ++k)
    for (int l = 0; l < m_; ++l)
      r = std::max(r, std::abs(std::conj(ric[k * m_ + l]) - ric[l * m_ + k]));
  return r;
}

CurvatureScalars KahlerCurvature::scalar_norms() const {
  CurvatureScalars out;
  auto ric = ricci();
  std::complex<double> R{0.0, 0.0}, ric2{0.0, 0.0}, rm2{0.0, 0.0};
  for (int i = 0; i < m_; ++i) R += ric[i * m_ + i];
  for (int k = 0; k < m_; ++k)
    for (int l = 0; l < m_; ++l) ric2 += ric[k * m_ + l] * ric[l * m_ + k];
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      for (int k = 0; k < m_; ++k)
        for (int l = 0; l < m_; ++l) rm2 += at(i, j, k, l) * at(j, i, l, k);
  out.scalar = R.real();
  out.ric2 = ric2.real();
  out.rm2 = rm2.real();
  return out;
}

KahlerCurvature KahlerCurvature::scaled(double lambda) const {
  KahlerCurvature out = *this;
  for (auto& v : out.c_) v *= lambda;
  return out;
}

KahlerCurvature KahlerCurvature::rotated(const std::vector<std::complex<double>>& U) const {
  KahlerCurvature out(m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      for (int k = 0; k < m_; ++k)
        for (int l = 0; l < m_; ++l) {
          std::complex<double> s{0.0, 0.0};
          for (int p = 0; p < m_; ++p)
            for (int q = 0; q < m_; ++q)
              for (int u = 0; u < m_; ++u)
                for (int v = 0; v < m_; ++v)
                  s += U[i * m_ + p] * std::conj(U[j * m_ + q]) * U[k * m_ + u] *
                       std::conj(U[l * m_ + v]) * at(p, q, u, v);
          out.at(i, j, k, l) = s;
        }
  return out;
}

}  // namespace ricci
