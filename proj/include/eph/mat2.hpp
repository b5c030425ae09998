#pragma once

#include <ostream>

#include "eph/hypercomplex.hpp"

namespace eph {

// Row-major 2x2 matrix over any ring-like entry type (scalars or HNum).
template <class E>
struct Mat2 {
  E a, b, c, d;

  E det() const { return a * d - b * c; }
  E trace() const { return a + d; }
  Mat2 adjugate() const { return {d, -b, -c, a}; }
  Mat2 inverse() const {
    E r = reciprocal(det());
    return {r * d, r * -b, r * -c, r * a};
  }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Mat2 operator-(const Mat2& x) { return {-x.a, -x.b, -x.c, -x.d}; }
  friend Mat2 operator*(const E& k, const Mat2& x) { return {k * x.a, k * x.b, k * x.c, k * x.d}; }

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }

  friend std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
  }
};

template <scalar T>
Mat2<T> identity2() {
  return {T(1), T(0), T(0), T(1)};
}

template <scalar T>
Mat2<HNum<T>> lift(const Mat2<T>& m, Sigma s) {
  return {HNum<T>::real(m.a, s), HNum<T>::real(m.b, s), HNum<T>::real(m.c, s),
          HNum<T>::real(m.d, s)};
}

template <scalar T>
double max_abs_diff(const Mat2<T>& x, const Mat2<T>& y) {
  auto f = [](const T& v) { return std::abs(to_double(v)); };
  return std::max({f(x.a - y.a), f(x.b - y.b), f(x.c - y.c), f(x.d - y.d)});
}

template <scalar T>
double max_abs_diff(const Mat2<HNum<T>>& x, const Mat2<HNum<T>>& y) {
  auto f = [](const HNum<T>& v) {
    return std::max(std::abs(to_double(v.re())), std::abs(to_double(v.im())));
  };
  return std::max({f(x.a - y.a), f(x.b - y.b), f(x.c - y.c), f(x.d - y.d)});
}

}  // namespace eph
