#pragma once

// Signed log-magnitude real: value = sign * exp(lnmag).  Keeps regret sums
// finite when sinh arguments run past double range (|x|/beta ~ 1000).

#include <cmath>
#include <limits>

namespace regult {

class SignedLog {
 public:
  SignedLog() : lnmag_(-kInf), sign_(0) {}

  static SignedLog zero() { return SignedLog(); }

  static SignedLog from_double(double v) {
    SignedLog r;
    if (v == 0.0) return r;
    r.sign_ = v > 0.0 ? 1 : -1;
    r.lnmag_ = std::log(std::fabs(v));
    return r;
  }

  static SignedLog from_ln(int sign, double lnmag) {
    SignedLog r;
    if (sign == 0 || lnmag == -kInf) return r;
    r.sign_ = sign > 0 ? 1 : -1;
    r.lnmag_ = lnmag;
    return r;
  }

  int sign() const { return sign_; }
  double log_abs() const { return lnmag_; }
  bool is_zero() const { return sign_ == 0; }

  // Saturates to +-inf past double range.
  double to_double() const {
    if (sign_ == 0) return 0.0;
    return sign_ * std::exp(lnmag_);
  }

  SignedLog operator-() const {
    SignedLog r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  SignedLog abs() const {
    SignedLog r = *this;
    if (r.sign_ != 0) r.sign_ = 1;
    return r;
  }

  friend SignedLog operator+(const SignedLog& a, const SignedLog& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    const SignedLog& hi = (a.lnmag_ >= b.lnmag_) ? a : b;
    const SignedLog& lo = (a.lnmag_ >= b.lnmag_) ? b : a;
    const double d = lo.lnmag_ - hi.lnmag_;  // <= 0
    if (a.sign_ == b.sign_)
      return from_ln(hi.sign_, hi.lnmag_ + std::log1p(std::exp(d)));
    const double t = std::log1p(-std::exp(d));  // -inf on exact cancellation
    return from_ln(hi.sign_, hi.lnmag_ + t);
  }

  friend SignedLog operator-(const SignedLog& a, const SignedLog& b) { return a + (-b); }

  friend SignedLog operator*(const SignedLog& a, const SignedLog& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return zero();
    return from_ln(a.sign_ * b.sign_, a.lnmag_ + b.lnmag_);
  }

  friend SignedLog operator/(const SignedLog& a, const SignedLog& b) {
    // b == 0 yields +-inf magnitude; callers guard where it matters.
    if (a.sign_ == 0) return zero();
    const int s = b.sign_ == 0 ? a.sign_ : a.sign_ * b.sign_;
    const double m = b.sign_ == 0 ? kInf : a.lnmag_ - b.lnmag_;
    return from_ln(s, m);
  }

  SignedLog& operator+=(const SignedLog& b) { return *this = *this + b; }
  SignedLog& operator-=(const SignedLog& b) { return *this = *this - b; }
  SignedLog& operator*=(const SignedLog& b) { return *this = *this * b; }
  SignedLog& operator/=(const SignedLog& b) { return *this = *this / b; }

  // Scale by an ordinary double (probability weights etc).
  SignedLog scaled(double c) const {
    if (sign_ == 0 || c == 0.0) return zero();
    const int s = c > 0.0 ? sign_ : -sign_;
    return from_ln(s, lnmag_ + std::log(std::fabs(c)));
  }

  friend bool operator<(const SignedLog& a, const SignedLog& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    if (a.sign_ == 0) return false;
    if (a.sign_ > 0) return a.lnmag_ < b.lnmag_;
    return a.lnmag_ > b.lnmag_;
  }
  friend bool operator>(const SignedLog& a, const SignedLog& b) { return b < a; }
  friend bool operator<=(const SignedLog& a, const SignedLog& b) { return !(b < a); }
  friend bool operator>=(const SignedLog& a, const SignedLog& b) { return !(a < b); }

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();
  double lnmag_;
  int sign_;
};

// ln(sinh(z)) for z > 0 without overflow; sinh(z) itself is exact enough
// below the switch point, the asymptotic form takes over before overflow.
inline double ln_sinh(double z) {
  if (z < 0.5) return std::log(std::sinh(z));
  return z - 0.6931471805599453 + std::log1p(-std::exp(-2.0 * z));
}

// sinh(x) as a SignedLog, odd by construction.
inline SignedLog slog_sinh(double x) {
  if (x == 0.0) return SignedLog::zero();
  const double z = std::fabs(x);
  return SignedLog::from_ln(x > 0.0 ? 1 : -1, ln_sinh(z));
}

// |a - b| <= rel * max(|a|, |b|), evaluated on the log scale.
inline bool slog_close(const SignedLog& a, const SignedLog& b, double rel) {
  const SignedLog d = a - b;
  if (d.is_zero()) return true;
  const double scale = std::max(a.log_abs(), b.log_abs());
  return d.log_abs() <= scale + std::log(rel);
}

}  // namespace regult
