#pragma once

#include <cmath>
#include <limits>
#include <string>

namespace ricci {

// Sign + log-magnitude scalar. The weighted estimates carry factors
// e^{b(V-t)^alpha} whose exponents reach ~1e5 for the required b
// thresholds, far past double range, so ledger arithmetic is done here.
class Big {
public:
  Big() : ln_(-std::numeric_limits<double>::infinity()), sign_(0) {}

  static Big from(double v) {
    Big b;
    if (v == 0.0 || !std::isfinite(v)) {
      if (std::isnan(v)) {
        b.sign_ = 0;
        b.ln_ = std::numeric_limits<double>::quiet_NaN();
      } else if (std::isinf(v)) {
        b.sign_ = v > 0 ? 1 : -1;
        b.ln_ = std::numeric_limits<double>::infinity();
      }
      return b;
    }
    b.sign_ = v > 0 ? 1 : -1;
    b.ln_ = std::log(std::fabs(v));
    return b;
  }

  // e^{ln_mag}, exact in the exponent
  static Big exp_of(double ln_mag) {
    Big b;
    b.sign_ = 1;
    b.ln_ = ln_mag;
    return b;
  }

  static Big zero() { return Big(); }

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  double ln_abs() const { return ln_; }
  double log10_abs() const { return ln_ / std::log(10.0); }

  double to_double() const {
    if (sign_ == 0) return 0.0;
    return sign_ * std::exp(ln_);
  }

  Big operator-() const {
    Big b = *this;
    b.sign_ = -b.sign_;
    return b;
  }

  Big abs() const {
    Big b = *this;
    if (b.sign_ != 0) b.sign_ = 1;
    return b;
  }

  Big operator*(const Big& o) const {
    Big b;
    if (sign_ == 0 || o.sign_ == 0) return b;
    b.sign_ = sign_ * o.sign_;
    b.ln_ = ln_ + o.ln_;
    return b;
  }

  Big operator/(const Big& o) const {
    Big b;
    if (sign_ == 0) return b;
    b.sign_ = sign_ * o.sign_;
    b.ln_ = ln_ - o.ln_;
    return b;
  }

  Big operator+(const Big& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    const Big& hi = (ln_ >= o.ln_) ? *this : o;
    const Big& lo = (ln_ >= o.ln_) ? o : *this;
    double d = lo.ln_ - hi.ln_;  // <= 0
    Big b;
    if (hi.sign_ == lo.sign_) {
      b.sign_ = hi.sign_;
      b.ln_ = hi.ln_ + std::log1p(std::exp(d));
      return b;
    }
    double rem = -std::expm1(d);  // 1 - e^d in [0,1]
    if (rem <= 0.0) return Big();  // exact cancellation
    b.sign_ = hi.sign_;
    b.ln_ = hi.ln_ + std::log(rem);
    return b;
  }

  Big operator-(const Big& o) const { return *this + (-o); }

  Big& operator+=(const Big& o) { *this = *this + o; return *this; }

  // exact comparison in the scaled representation
  int compare(const Big& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
    if (sign_ == 0) return 0;
    if (ln_ == o.ln_) return 0;
    bool less = (ln_ < o.ln_);
    if (sign_ > 0) return less ? -1 : 1;
    return less ? 1 : -1;
  }
  bool operator<(const Big& o) const { return compare(o) < 0; }
  bool operator<=(const Big& o) const { return compare(o) <= 0; }

  // |a-b| / |b|, finite whenever the ratio is representable
  double rel_diff_to(const Big& ref) const {
    if (ref.is_zero()) return is_zero() ? 0.0 : std::numeric_limits<double>::infinity();
    return ((*this - ref) / ref).abs().to_double();
  }

  // mantissa in [1,10) and base-10 exponent, for serialization
  void decompose10(double* mantissa, long long* exp10) const {
    if (sign_ == 0) { *mantissa = 0.0; *exp10 = 0; return; }
    double l10 = log10_abs();
    double e = std::floor(l10);
    *mantissa = sign_ * std::pow(10.0, l10 - e);
    *exp10 = static_cast<long long>(e);
  }

private:
  double ln_;
  int sign_;
};

inline Big operator*(double a, const Big& b) { return Big::from(a) * b; }

}  // namespace ricci
