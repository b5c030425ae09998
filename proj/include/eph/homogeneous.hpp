#pragma once

// The upper half-plane as SL(2,R)/H for H = K, N', A': section s, projection p,
// factor r, both forms of the action, Cayley transforms and the parabolic
// rotations.

#include <optional>

#include "eph/sl2.hpp"

namespace eph {

template <scalar T>
struct HalfPlanePoint {
  T u{0};
  T v{1};

  friend bool operator==(const HalfPlanePoint&, const HalfPlanePoint&) = default;
  friend std::ostream& operator<<(std::ostream& os, const HalfPlanePoint& p) {
    return os << "(" << p.u << ", " << p.v << ")";
  }
};

// The subgroup H whose cosets realise the half-plane for a given sigma.
constexpr Subgroup stabilizer(Sigma s) noexcept {
  switch (s) {
    case Sigma::elliptic: return Subgroup::K;
    case Sigma::parabolic: return Subgroup::Nprime;
    case Sigma::hyperbolic: return Subgroup::Aprime;
  }
  return Subgroup::K;
}

// Radical-free representative [[v, u], [0, 1]] of s(u, v); its determinant is v.
template <scalar T>
Mat2<T> s_map_unnormalized(const HalfPlanePoint<T>& p) {
  if (!(p.v > 0)) throw error(errc::domain_error, "section needs v > 0");
  return {p.v, p.u, T(0), T(1)};
}

template <scalar T>
SL2<T> s_map(const HalfPlanePoint<T>& p) {
  Mat2<T> m = s_map_unnormalized(p);
  T k = reciprocal(sc::sqrt(p.v));
  return SL2<T>(k * m);
}

// Finds h in H with (g h)_{21} = 0; then g h ~ [[alpha, beta], [0, delta]] and
// (u, v) = (beta/delta, alpha/delta). Works projectively, so g may be any
// matrix of positive determinant (the unnormalized section included).
template <scalar T>
HalfPlanePoint<T> p_map(const Mat2<T>& g, Sigma s) {
  const T &a = g.a, &b = g.b, &c = g.c, &d = g.d;
  T det = g.det();
  switch (s) {
    case Sigma::elliptic: {
      T n = c * c + d * d;
      return {(a * c + b * d) / n, det / n};
    }
    case Sigma::parabolic: {
      if (d == 0) throw error(errc::ideal_point, "p_map for N' needs d != 0");
      return {b / d, det / (d * d)};
    }
    case Sigma::hyperbolic: {
      T n = d * d - c * c;
      if (n == 0) throw error(errc::ideal_point, "p_map for A' needs d^2 != c^2");
      return {(b * d - a * c) / n, det / n};
    }
  }
  throw error(errc::domain_error, "bad sigma");
}

template <scalar T>
HalfPlanePoint<T> p_map(const SL2<T>& g, Sigma s) {
  return p_map(g.mat(), s);
}

// r(g) = s(p(g))^-1 g. For N' and A' the identity s(p(g)) r(g) = g holds up
// to the sign of g when d < 0, since -I is in neither subgroup.
template <scalar T>
SL2<T> r_map(const SL2<T>& g, Subgroup h) {
  const T &c = g.c(), &d = g.d();
  switch (h) {
    case Subgroup::K: {
      T k = reciprocal(sc::sqrt(T(c * c + d * d)));
      return SL2<T>(k * d, -k * c, k * c, k * d);
    }
    case Subgroup::Nprime:
      if (d == 0) throw error(errc::factorization_fails, "N' factor needs d != 0");
      return SL2<T>(T(1), T(0), c / d, T(1));
    case Subgroup::Aprime: {
      if (!(d * d > c * c)) throw error(errc::factorization_fails, "A' factor needs d^2 > c^2");
      T k = T(sign(d)) * reciprocal(sc::sqrt(T(d * d - c * c)));
      return SL2<T>(k * d, k * c, k * c, k * d);
    }
    default: throw error(errc::domain_error, "r_map is defined for K, N' and A' only");
  }
}

// ((au+b)(cu+d) - sigma*ac*v^2, v) / ((cu+d)^2 - sigma*(cv)^2)
template <scalar T>
HalfPlanePoint<T> act_brute(const SL2<T>& g, const HalfPlanePoint<T>& p, Sigma s) {
  const T &a = g.a(), &b = g.b(), &c = g.c(), &d = g.d();
  T sig(value(s));
  T cud = c * p.u + d;
  T den = cud * cud - sig * c * c * p.v * p.v;
  if (is_zero<T>(den, to_double(cud * cud))) throw error(errc::ideal_point, "act_brute denominator is 0");
  return {((a * p.u + b) * cud - sig * a * c * p.v * p.v) / den, p.v / den};
}

// Homogeneous pair [w1 : w2]. Affine when w2 is invertible.
template <scalar T>
struct ProjPoint {
  HNum<T> w1;
  HNum<T> w2;

  Sigma sigma() const { return w1.sigma(); }
  bool is_ideal() const { return !is_invertible(w2); }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

template <scalar T>
ProjPoint<T> embed(const HalfPlanePoint<T>& p, Sigma s) {
  return {HNum<T>(p.u, p.v, s), HNum<T>::real(T(1), s)};
}

template <scalar T>
HNum<T> affine_value(const ProjPoint<T>& w) {
  if (w.is_ideal()) throw error(errc::ideal_point, "projective point has no affine value");
  return w.w1 / w.w2;
}

template <scalar T>
HalfPlanePoint<T> affine(const ProjPoint<T>& w) {
  HNum<T> z = affine_value(w);
  return {z.re(), z.im()};
}

template <scalar T>
ProjPoint<T> normalize(const ProjPoint<T>& w) {
  if (!is_invertible(w.w2)) {
    bool degenerate = !is_invertible(w.w1) &&
                      w.w1.re() * w.w2.im() - w.w1.im() * w.w2.re() == 0;
    if (degenerate) throw error(errc::degenerate_point, "both coordinates are zero divisors");
    return w;
  }
  return {w.w1 / w.w2, HNum<T>::real(T(1), w.sigma())};
}

template <scalar T>
ProjPoint<T> act_moebius(const Mat2<HNum<T>>& g, const ProjPoint<T>& w) {
  return normalize(ProjPoint<T>{g.a * w.w1 + g.b * w.w2, g.c * w.w1 + g.d * w.w2});
}

template <scalar T>
ProjPoint<T> act_moebius(const SL2<T>& g, const ProjPoint<T>& w) {
  return act_moebius(lift(g.mat(), w.sigma()), w);
}

// Cayley matrices C and C^-1 as printed: elliptic with a 1/2 prefactor,
// hyperbolic likewise, parabolic with unit prefactor.
template <scalar T>
Mat2<HNum<T>> cayley(Sigma s) {
  auto n = [s](T re, T im) { return HNum<T>(re, im, s); };
  T h = T(1) / T(2);
  switch (s) {
    case Sigma::elliptic: return {n(h, 0), n(0, -h), n(0, -h), n(h, 0)};
    case Sigma::parabolic: return {n(1, 0), n(0, -1), n(0, -1), n(1, 0)};
    case Sigma::hyperbolic: return {n(h, 0), n(0, h), n(0, -h), n(h, 0)};
  }
  throw error(errc::domain_error, "bad sigma");
}

template <scalar T>
Mat2<HNum<T>> cayley_inverse(Sigma s) {
  auto n = [s](T re, T im) { return HNum<T>(re, im, s); };
  switch (s) {
    case Sigma::elliptic: return {n(1, 0), n(0, 1), n(0, 1), n(1, 0)};
    case Sigma::parabolic: return {n(1, 0), n(0, 1), n(0, 1), n(1, 0)};
    case Sigma::hyperbolic: return {n(1, 0), n(0, -1), n(0, 1), n(1, 0)};
  }
  throw error(errc::domain_error, "bad sigma");
}

template <scalar T>
Mat2<HNum<T>> cayley_conjugate(const SL2<T>& g, Sigma s) {
  return cayley<T>(s) * lift(g.mat(), s) * cayley_inverse<T>(s);
}

// Mobius action of the Cayley image of N(t) on dual numbers:
// (1+et)w + t over 1-et expands to u + t, v + 2tu + t^2.
template <scalar T>
HalfPlanePoint<T> parab_rotate_N(const T& t, const HalfPlanePoint<T>& p) {
  return {p.u + t, p.v + T(2) * t * p.u + t * t};
}

// Cayley image of N'(t), [[1-et, 0], [t, 1+et]], acting on u + ev.
template <scalar T>
HalfPlanePoint<T> parab_rotate_Nprime(const T& t, const HalfPlanePoint<T>& p) {
  T q = T(1) + t * p.u;
  if (q == 0) throw error(errc::ideal_point, "N' rotation sends the point to infinity");
  return {p.u / q, (p.v - T(2) * t * p.u - t * t * p.u * p.u) / (q * q)};
}

template <scalar T>
Mat2<HNum<T>> rotation_matrix_N(const T& t) {
  return cayley_conjugate(subgroup_element(Subgroup::N, t), Sigma::parabolic);
}

template <scalar T>
Mat2<HNum<T>> rotation_matrix_Nprime(const T& t) {
  return cayley_conjugate(subgroup_element(Subgroup::Nprime, t), Sigma::parabolic);
}

// The N' reference point 1/e, written projectively as [1 : e].
template <scalar T>
ProjPoint<T> nprime_reference_point() {
  return {HNum<T>::real(T(1), Sigma::parabolic), HNum<T>::unit(Sigma::parabolic)};
}

// Image of [1 : e] under the N' rotation matrix, as an affine point when it
// has one.
template <scalar T>
HalfPlanePoint<T> parab_rotate_Nprime_ideal(const T& t) {
  return affine(act_moebius(rotation_matrix_Nprime(t), nprime_reference_point<T>()));
}

// Parabolic trigonometry read off the N orbit of -e: (sin_p t, -cos_p t).
template <scalar T>
T sin_p(const T& t) {
  return t;
}

template <scalar T>
T cos_p(const T& t) {
  return T(1) - t * t;
}

}  // namespace eph
