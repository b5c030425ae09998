#pragma once

// Complex, dual and double numbers u + iota*v behind one type, selected by
// sigma = iota^2.

#include <ostream>
#include <string>

#include "eph/scalar.hpp"

namespace eph {

enum class Sigma : int { elliptic = -1, parabolic = 0, hyperbolic = 1 };

constexpr int value(Sigma s) noexcept { return static_cast<int>(s); }

inline Sigma sigma_from_int(int s) {
  switch (s) {
    case -1: return Sigma::elliptic;
    case 0: return Sigma::parabolic;
    case 1: return Sigma::hyperbolic;
  }
  throw error(errc::domain_error, "sigma must be -1, 0 or 1, got " + std::to_string(s));
}

constexpr const char* unit_name(Sigma s) noexcept {
  switch (s) {
    case Sigma::elliptic: return "i";
    case Sigma::parabolic: return "e";
    case Sigma::hyperbolic: return "h";
  }
  return "?";
}

template <scalar T>
class HNum {
 public:
  HNum() = default;
  HNum(T re, T im, Sigma s) : re_(std::move(re)), im_(std::move(im)), sigma_(s) {}

  static HNum real(T x, Sigma s) { return HNum(std::move(x), T(0), s); }
  static HNum unit(Sigma s) { return HNum(T(0), T(1), s); }

  const T& re() const noexcept { return re_; }
  const T& im() const noexcept { return im_; }
  Sigma sigma() const noexcept { return sigma_; }

  friend HNum operator+(const HNum& x, const HNum& y) {
    check(x, y);
    return HNum(x.re_ + y.re_, x.im_ + y.im_, x.sigma_);
  }
  friend HNum operator-(const HNum& x, const HNum& y) {
    check(x, y);
    return HNum(x.re_ - y.re_, x.im_ - y.im_, x.sigma_);
  }
  friend HNum operator-(const HNum& x) { return HNum(-x.re_, -x.im_, x.sigma_); }

  friend HNum operator*(const HNum& x, const HNum& y) {
    check(x, y);
    T s(value(x.sigma_));
    return HNum(x.re_ * y.re_ + s * x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_, x.sigma_);
  }
  friend HNum operator*(const T& k, const HNum& x) { return HNum(k * x.re_, k * x.im_, x.sigma_); }
  friend HNum operator*(const HNum& x, const T& k) { return k * x; }
  friend HNum operator/(const HNum& x, const T& k) { return HNum(x.re_ / k, x.im_ / k, x.sigma_); }
  friend HNum operator/(const HNum& x, const HNum& y) { return x * invert(y); }

  HNum& operator+=(const HNum& y) { return *this = *this + y; }
  HNum& operator-=(const HNum& y) { return *this = *this - y; }
  HNum& operator*=(const HNum& y) { return *this = *this * y; }

  friend bool operator==(const HNum& x, const HNum& y) {
    return x.sigma_ == y.sigma_ && x.re_ == y.re_ && x.im_ == y.im_;
  }

  friend HNum conj(const HNum& w) { return HNum(w.re_, -w.im_, w.sigma_); }

  friend T modulus_sq(const HNum& w) {
    return w.re_ * w.re_ - T(value(w.sigma_)) * w.im_ * w.im_;
  }

  // Floats: the modulus must be non-negligible relative to re^2 + im^2, so
  // 1+h*(1+1e-17) still counts as a zero divisor.
  friend bool is_invertible(const HNum& w) {
    if constexpr (is_exact_v<T>) {
      return modulus_sq(w) != 0;
    } else {
      double m = std::abs(modulus_sq(w));
      return m > float_tol * (w.re_ * w.re_ + w.im_ * w.im_);
    }
  }

  friend HNum invert(const HNum& w) {
    if (!is_invertible(w)) throw error(errc::zero_divisor, "invert of " + str(w));
    return conj(w) / modulus_sq(w);
  }

  friend std::string str(const HNum& w) {
    return to_string(w.re_) + (w.im_ < 0 ? "-" : "+") + unit_name(w.sigma_) + "*" +
           to_string(w.im_ < 0 ? T(-w.im_) : w.im_);
  }

  friend std::ostream& operator<<(std::ostream& os, const HNum& w) { return os << str(w); }

 private:
  static void check(const HNum& x, const HNum& y) {
    if (x.sigma_ != y.sigma_)
      throw error(errc::sigma_mismatch, "sigma " + std::to_string(value(x.sigma_)) + " vs " +
                                            std::to_string(value(y.sigma_)));
  }

  T re_{0};
  T im_{0};
  Sigma sigma_{Sigma::elliptic};
};

// Per sigma: angle on (-pi, pi], the ratio y/x, atanh(y/x).
template <scalar T>
T arg(const HNum<T>& w) {
  switch (w.sigma()) {
    case Sigma::elliptic:
      if (w.re() == 0 && w.im() == 0) throw error(errc::arg_undefined, "arg of 0");
      return sc::atan2(w.im(), w.re());
    case Sigma::parabolic:
      if (w.re() == 0) throw error(errc::arg_undefined, "dual arg needs re != 0");
      return w.im() / w.re();
    case Sigma::hyperbolic: {
      T ar = w.re() < 0 ? T(-w.re()) : w.re();
      T ai = w.im() < 0 ? T(-w.im()) : w.im();
      if (!(ar > ai)) throw error(errc::arg_undefined, "double arg needs |re| > |im|");
      return sc::atanh(w.im() / w.re());
    }
  }
  throw error(errc::domain_error, "bad sigma");
}

// e^{iota t}. Exact mode only handles the polynomial dual case (and t = 0).
template <scalar T>
HNum<T> exp_unit(Sigma s, const T& t) {
  switch (s) {
    case Sigma::elliptic: return HNum<T>(sc::cos(t), sc::sin(t), s);
    case Sigma::parabolic: return HNum<T>(T(1), t, s);
    case Sigma::hyperbolic: return HNum<T>(sc::cosh(t), sc::sinh(t), s);
  }
  throw error(errc::domain_error, "bad sigma");
}

// The reciprocal used by generic matrix code.
template <scalar T>
T reciprocal(const T& x) {
  if (x == 0) throw error(errc::division_by_zero, "reciprocal of 0");
  return T(1) / x;
}

template <scalar T>
HNum<T> reciprocal(const HNum<T>& w) {
  return invert(w);
}

template <scalar T>
HNum<T> pow(HNum<T> w, unsigned k) {
  HNum<T> r = HNum<T>::real(T(1), w.sigma());
  for (; k; k >>= 1, w = w * w)
    if (k & 1) r = r * w;
  return r;
}

}  // namespace eph
