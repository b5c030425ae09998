#pragma once

// SL(2,R), its Lie algebra, and the one-parameter subgroups A, N, K, A', N'.

#include <cmath>
#include <numbers>
#include <string>

#include "eph/mat2.hpp"

namespace eph {

template <scalar T>
bool det_is_one(const Mat2<T>& m) {
  if constexpr (is_exact_v<T>) {
    return m.det() == 1;
  } else {
    double ad = m.a * m.d, bc = m.b * m.c;
    return std::abs(ad - bc - 1.0) <= float_tol * std::max(1.0, std::abs(ad) + std::abs(bc));
  }
}

// det = 1, checked on construction. Products of checked elements skip the
// check: the group is closed and float drift stays at rounding level.
template <scalar T>
class SL2 {
 public:
  explicit SL2(const Mat2<T>& m) : m_(m) {
    if (!det_is_one(m)) throw error(errc::domain_error, "det != 1 for SL(2,R) element");
  }
  SL2(T a, T b, T c, T d) : SL2(Mat2<T>{a, b, c, d}) {}

  static SL2 identity() { return SL2(identity2<T>(), trusted{}); }

  const Mat2<T>& mat() const noexcept { return m_; }
  const T& a() const noexcept { return m_.a; }
  const T& b() const noexcept { return m_.b; }
  const T& c() const noexcept { return m_.c; }
  const T& d() const noexcept { return m_.d; }

  SL2 inverse() const { return SL2(m_.adjugate(), trusted{}); }

  friend SL2 operator*(const SL2& x, const SL2& y) { return SL2(x.m_ * y.m_, trusted{}); }
  friend bool operator==(const SL2& x, const SL2& y) { return x.m_ == y.m_; }
  friend std::ostream& operator<<(std::ostream& os, const SL2& g) { return os << g.m_; }

 private:
  struct trusted {};
  SL2(const Mat2<T>& m, trusted) : m_(m) {}
  Mat2<T> m_;
};

template <scalar T>
class Lie {
 public:
  explicit Lie(const Mat2<T>& m) : m_(m) {
    if (!is_zero<T>(m.trace(), to_double(abs_(m.a) + abs_(m.d))))
      throw error(errc::domain_error, "Lie algebra element must be traceless");
  }
  Lie(T a, T b, T c, T d) : Lie(Mat2<T>{a, b, c, d}) {}

  const Mat2<T>& mat() const noexcept { return m_; }
  const T& a() const noexcept { return m_.a; }
  const T& b() const noexcept { return m_.b; }
  const T& c() const noexcept { return m_.c; }

  bool is_zero_element() const { return m_.a == 0 && m_.b == 0 && m_.c == 0 && m_.d == 0; }

  friend Lie operator+(const Lie& x, const Lie& y) { return Lie(x.m_ + y.m_); }
  friend Lie operator-(const Lie& x, const Lie& y) { return Lie(x.m_ - y.m_); }
  friend Lie operator*(const T& k, const Lie& x) { return Lie(k * x.m_); }
  friend bool operator==(const Lie& x, const Lie& y) { return x.m_ == y.m_; }
  friend std::ostream& operator<<(std::ostream& os, const Lie& x) { return os << x.m_; }

 private:
  static T abs_(const T& x) { return x < 0 ? T(-x) : x; }
  Mat2<T> m_;
};

template <scalar T>
Lie<T> commutator(const Lie<T>& x, const Lie<T>& y) {
  return Lie<T>(x.mat() * y.mat() - y.mat() * x.mat());
}

template <scalar T>
struct BasisABZ {
  Lie<T> A, B, Z;
};

template <scalar T>
BasisABZ<T> basis_ABZ() {
  T h = T(1) / T(2);
  return {Lie<T>(-h, T(0), T(0), h), Lie<T>(T(0), h, h, T(0)), Lie<T>(T(0), T(1), T(-1), T(0))};
}

// g = diag(alpha, 1/alpha) * [[1, nu], [0, 1]] * K(phi)
struct IwasawaFactors {
  double alpha;
  double nu;
  double phi;
};

// K(phi) in the [[cos, sin], [-sin, cos]] orientation.
inline Mat2<double> k_matrix(double phi) {
  double c = std::cos(phi), s = std::sin(phi);
  return {c, s, -s, c};
}

inline Mat2<double> recompose(const IwasawaFactors& f) {
  Mat2<double> a{f.alpha, 0.0, 0.0, 1.0 / f.alpha};
  Mat2<double> n{1.0, f.nu, 0.0, 1.0};
  return a * n * k_matrix(f.phi);
}

// The second row of A N K(phi) is (1/alpha)(-sin phi, cos phi), so phi and
// alpha come from (c, d); nu = ac + bd is the first row of g K(phi)^-1
// divided by alpha.
inline IwasawaFactors iwasawa_decompose(const SL2<double>& g) {
  double n2 = g.c() * g.c() + g.d() * g.d();
  double alpha = 1.0 / std::sqrt(n2);
  double phi = sc::atan2(-g.c(), g.d());
  double nu = g.a() * g.c() + g.b() * g.d();
  return {alpha, nu, phi};
}

// Exact inputs are converted; the factors are transcendental in general.
inline IwasawaFactors iwasawa_decompose(const SL2<rational>& g) {
  const auto& m = g.mat();
  return iwasawa_decompose(
      SL2<double>(to_double(m.a), to_double(m.b), to_double(m.c), to_double(m.d)));
}

// exp(tX) from X^2 = delta*I with delta = a^2 + bc = -det X.
template <scalar T>
SL2<T> exp_traceless(const Lie<T>& x, const T& t) {
  const Mat2<T>& m = x.mat();
  T delta = m.a * m.a + m.b * m.c;
  Mat2<T> id = identity2<T>();
  Mat2<T> r;
  if (delta == 0 || t == 0) {
    r = id + t * m;
  } else if (delta < 0) {
    T w = sc::sqrt(T(-delta));
    r = sc::cos(T(w * t)) * id + T(sc::sin(T(w * t)) / w) * m;
  } else {
    T w = sc::sqrt(delta);
    r = sc::cosh(T(w * t)) * id + T(sc::sinh(T(w * t)) / w) * m;
  }
  return SL2<T>(r);
}

enum class SubgroupType { k_type, n_type, a_type };

constexpr const char* name(SubgroupType t) noexcept {
  switch (t) {
    case SubgroupType::k_type: return "K-type";
    case SubgroupType::n_type: return "N-type";
    case SubgroupType::a_type: return "A-type";
  }
  return "?";
}

// Sign of -det X. Floats treat |delta| below rounding of a^2 and bc as zero.
template <scalar T>
SubgroupType classify(const Lie<T>& x) {
  if (x.is_zero_element()) throw error(errc::zero_element, "classify of the zero matrix");
  const Mat2<T>& m = x.mat();
  T aa = m.a * m.a, bc = m.b * m.c;
  T delta = aa + bc;
  double scale = std::abs(to_double(aa)) + std::abs(to_double(bc));
  if (is_zero<T>(delta, scale)) return SubgroupType::n_type;
  return delta < 0 ? SubgroupType::k_type : SubgroupType::a_type;
}

template <scalar T>
Lie<T> standard_generator(SubgroupType t) {
  switch (t) {
    case SubgroupType::k_type: return Lie<T>(T(0), T(1), T(-1), T(0));
    case SubgroupType::n_type: return Lie<T>(T(0), T(1), T(0), T(0));
    case SubgroupType::a_type: return Lie<T>(T(0), T(1), T(1), T(0));
  }
  throw error(errc::domain_error, "bad subgroup type");
}

// S * standard * S^-1 = lambda * X. lambda is positive when possible; the
// opposite orientation of an elliptic or parabolic X forces lambda < 0.
template <scalar T>
struct Conjugation {
  SL2<T> S;
  Lie<T> standard;
  T lambda;
};

template <scalar T>
Conjugation<T> conjugate_to_standard(const Lie<T>& x) {
  SubgroupType type = classify(x);
  const Mat2<T>& m = x.mat();
  Lie<T> std_gen = standard_generator<T>(type);
  switch (type) {
    case SubgroupType::k_type: {
      T delta = m.a * m.a + m.b * m.c;
      T lambda = T(-sign(m.c)) / sc::sqrt(T(-delta));
      T mu = T(1) / sc::sqrt(T(-lambda * m.c));
      T k = -lambda * mu;
      return {SL2<T>(mu, k * m.a, T(0), k * m.c), std_gen, lambda};
    }
    case SubgroupType::n_type: {
      // Columns [lambda X s, s] turn the chain s -> Xs -> 0 into e2 -> e1 -> 0.
      bool use_e2 = !(m.b == 0 && m.d == 0);
      T sx = use_e2 ? T(0) : T(1), sy = use_e2 ? T(1) : T(0);
      T px = m.a * sx + m.b * sy, py = m.c * sx + m.d * sy;
      T lambda = T(1) / (px * sy - sx * py);
      return {SL2<T>(lambda * px, sx, lambda * py, sy), std_gen, lambda};
    }
    case SubgroupType::a_type: {
      T delta = m.a * m.a + m.b * m.c;
      T root = sc::sqrt(delta);
      auto eigvec = [&](const T& mu) -> std::pair<T, T> {
        T x1 = m.b, y1 = mu - m.a;
        if (x1 != 0 || y1 != 0) return {x1, y1};
        return {mu + m.a, m.c};
      };
      auto [px, py] = eigvec(root);
      auto [qx, qy] = eigvec(T(-root));
      T beta = T(-2) / (px * qy - qx * py);
      qx = beta * qx;
      qy = beta * qy;
      // [p, q] * [[1,1],[1,-1]]^-1 with the inverse equal to half of itself.
      T h = T(1) / T(2);
      return {SL2<T>(h * (px + qx), h * (px - qx), h * (py + qy), h * (py - qy)), std_gen,
              T(1) / root};
    }
  }
  throw error(errc::domain_error, "bad subgroup type");
}

enum class Subgroup { A, N, K, Aprime, Nprime };

template <scalar T>
SL2<T> subgroup_element(Subgroup which, const T& t) {
  switch (which) {
    case Subgroup::A: {
      T e = sc::exp(t);
      return SL2<T>(e, T(0), T(0), T(1) / e);
    }
    case Subgroup::N: return SL2<T>(T(1), t, T(0), T(1));
    case Subgroup::K: {
      if (to_double(t) <= -std::numbers::pi || to_double(t) > std::numbers::pi)
        throw error(errc::domain_error, "K parameter must lie in (-pi, pi]");
      T c = sc::cos(t), s = sc::sin(t);
      return SL2<T>(c, s, -s, c);
    }
    case Subgroup::Aprime: {
      T c = sc::cosh(t), s = sc::sinh(t);
      return SL2<T>(c, s, s, c);
    }
    case Subgroup::Nprime: return SL2<T>(T(1), T(0), t, T(1));
  }
  throw error(errc::domain_error, "bad subgroup");
}

// Rational points of K and A for exact tests: (c, s) with c^2 + s^2 = 1,
// and diag(q, 1/q).
template <scalar T>
SL2<T> k_element(const T& c, const T& s) {
  return SL2<T>(c, s, -s, c);
}

template <scalar T>
SL2<T> a_element(const T& q) {
  return SL2<T>(q, T(0), T(0), reciprocal(q));
}

}  // namespace eph
