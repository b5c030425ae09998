#pragma once

// Exotic parabolic algebra on dual-number points. Norm and argument are the
// invariants of the N or N' rotations; product and addition are defined so
// that those rotations act linearly.
//
// A point is stored in whichever chart it was built in. Homogeneous polar
// [a, r] = [norm * arg, norm] is the chart where addition is componentwise
// and where the N' zero vector lives; the affine chart (u, v) keeps points
// the polar chart collapses (the N null parabola r = 0, the N' axis u = 0).

#include <variant>

#include "eph/homogeneous.hpp"

namespace eph {

enum class Flavor { N, Nprime };

constexpr const char* name(Flavor f) noexcept { return f == Flavor::N ? "N" : "N'"; }

template <scalar T>
struct Affine {
  T u, v;
  friend bool operator==(const Affine&, const Affine&) = default;
};

template <scalar T>
struct HomPolar {
  T a, r;
  friend bool operator==(const HomPolar&, const HomPolar&) = default;
};

template <scalar T>
class PVec {
 public:
  PVec(Flavor f, Affine<T> p) : flavor_(f), coords_(std::move(p)) {}
  PVec(Flavor f, HomPolar<T> p) : flavor_(f), coords_(std::move(p)) {}

  static PVec affine(Flavor f, T u, T v) { return PVec(f, Affine<T>{std::move(u), std::move(v)}); }
  static PVec polar(Flavor f, T a, T r) { return PVec(f, HomPolar<T>{std::move(a), std::move(r)}); }

  Flavor flavor() const noexcept { return flavor_; }
  bool is_affine() const noexcept { return std::holds_alternative<Affine<T>>(coords_); }
  const Affine<T>& affine_coords() const { return std::get<Affine<T>>(coords_); }
  const HomPolar<T>& polar_coords() const { return std::get<HomPolar<T>>(coords_); }

  HomPolar<T> to_polar() const {
    if (!is_affine()) return polar_coords();
    const auto& [u, v] = affine_coords();
    if (flavor_ == Flavor::N) {
      T r = u * u - v;
      return {r * u, r};
    }
    T q = v + T(1);
    if (q == 0) throw error(errc::norm_undefined, "N' point with v = -1 has no polar form");
    return {u / q, u * u / q};
  }

  // N: u = a/r, v = u^2 - r, with [0, 0] read as the zero vector (0, 0).
  // N': u = r/a, v = r/a^2 - 1.
  Affine<T> to_affine() const {
    if (is_affine()) return affine_coords();
    const auto& [a, r] = polar_coords();
    if (flavor_ == Flavor::N) {
      if (r == 0) {
        if (a == 0) return {T(0), T(0)};
        throw error(errc::affine_undefined, "N point with zero norm and nonzero argument");
      }
      T u = a / r;
      return {u, u * u - r};
    }
    if (a == 0 || r == 0) throw error(errc::affine_undefined, "N' point at infinity or on u = 0");
    return {r / a, r / (a * a) - T(1)};
  }

  PVec as_polar() const { return PVec(flavor_, to_polar()); }
  PVec as_affine() const { return PVec(flavor_, to_affine()); }

 private:
  Flavor flavor_;
  std::variant<Affine<T>, HomPolar<T>> coords_;
};

template <scalar T>
void check_flavor(const PVec<T>& p, const PVec<T>& q) {
  if (p.flavor() != q.flavor())
    throw error(errc::flavor_mismatch, std::string(name(p.flavor())) + " vs " + name(q.flavor()));
}

// Equality as points: affine when both are affine, otherwise in polar form.
template <scalar T>
bool same_point(const PVec<T>& p, const PVec<T>& q) {
  if (p.flavor() != q.flavor()) return false;
  if (p.is_affine() && q.is_affine()) return p.affine_coords() == q.affine_coords();
  return p.to_polar() == q.to_polar();
}

template <scalar T>
T norm(const PVec<T>& p) {
  if (!p.is_affine()) return p.polar_coords().r;
  const auto& [u, v] = p.affine_coords();
  if (p.flavor() == Flavor::N) return u * u - v;
  if (v == T(-1)) throw error(errc::norm_undefined, "N' norm needs v != -1");
  return u * u / (v + T(1));
}

template <scalar T>
T argument(const PVec<T>& p) {
  if (!p.is_affine()) {
    const auto& [a, r] = p.polar_coords();
    if (r == 0) throw error(errc::arg_undefined, "argument at zero norm");
    return a / r;
  }
  const auto& [u, v] = p.affine_coords();
  if (p.flavor() == Flavor::N) return u;
  if (u == 0) throw error(errc::arg_undefined, "N' argument needs u != 0");
  return T(1) / u;
}

template <scalar T>
PVec<T> pconj(const PVec<T>& p) {
  if (p.is_affine()) return PVec<T>::affine(p.flavor(), -p.affine_coords().u, p.affine_coords().v);
  return PVec<T>::polar(p.flavor(), -p.polar_coords().a, p.polar_coords().r);
}

template <scalar T>
PVec<T> pmul(const PVec<T>& p, const PVec<T>& q) {
  check_flavor(p, q);
  Flavor f = p.flavor();
  if (p.is_affine() && q.is_affine()) {
    const auto& [u1, v1] = p.affine_coords();
    const auto& [u2, v2] = q.affine_coords();
    T s = u1 + u2;
    if (f == Flavor::N) return PVec<T>::affine(f, s, s * s - (u1 * u1 - v1) * (u2 * u2 - v2));
    if (s == 0) throw error(errc::product_undefined, "N' product needs u + u' != 0");
    return PVec<T>::affine(f, u1 * u2 / s, (v1 + T(1)) * (v2 + T(1)) / (s * s) - T(1));
  }
  auto [a1, r1] = p.to_polar();
  auto [a2, r2] = q.to_polar();
  return PVec<T>::polar(f, a1 * r2 + a2 * r1, r1 * r2);
}

// Scales the norm and keeps the argument; negative scalars use the same formulas.
template <scalar T>
PVec<T> smul(const T& k, const PVec<T>& p) {
  Flavor f = p.flavor();
  if (!p.is_affine()) return PVec<T>::polar(f, k * p.polar_coords().a, k * p.polar_coords().r);
  const auto& [u, v] = p.affine_coords();
  if (f == Flavor::N) return PVec<T>::affine(f, u, k * v + u * u * (T(1) - k));
  if (k == 0) throw error(errc::division_by_zero, "N' scalar 0 lands on the zero vector at infinity");
  return PVec<T>::affine(f, u, (v + T(1)) / k - T(1));
}

template <scalar T>
PVec<T> padd(const PVec<T>& p, const PVec<T>& q) {
  check_flavor(p, q);
  auto [a1, r1] = p.to_polar();
  auto [a2, r2] = q.to_polar();
  return PVec<T>::polar(p.flavor(), a1 + a2, r1 + r2);
}

template <scalar T>
PVec<T> zero(Flavor f) {
  if (f == Flavor::N) return PVec<T>::affine(f, T(0), T(0));
  return PVec<T>::polar(f, T(0), T(0));
}

template <scalar T>
PVec<T> unit(Flavor f) {
  if (f == Flavor::N) return PVec<T>::affine(f, T(0), T(-1));
  return PVec<T>::polar(f, T(0), T(1));
}

template <scalar T>
PVec<T> pneg(const PVec<T>& p) {
  Flavor f = p.flavor();
  if (!p.is_affine()) return PVec<T>::polar(f, -p.polar_coords().a, -p.polar_coords().r);
  const auto& [u, v] = p.affine_coords();
  if (f == Flavor::N) return PVec<T>::affine(f, u, T(2) * u * u - v);
  return PVec<T>::affine(f, u, -v - T(2));
}

template <scalar T>
PVec<T> from_arg_mod(Flavor f, const T& arg, const T& mod) {
  if (f == Flavor::N) return PVec<T>::affine(f, arg, arg * arg - mod);
  return PVec<T>::polar(f, mod * arg, mod);
}

// Re + Im = P in polar form: the real part keeps the norm, the imaginary
// part keeps norm * arg at zero norm.
template <scalar T>
PVec<T> real_part(const PVec<T>& p) {
  return PVec<T>::polar(p.flavor(), T(0), p.to_polar().r);
}

template <scalar T>
PVec<T> imag_part(const PVec<T>& p) {
  return PVec<T>::polar(p.flavor(), p.to_polar().a, T(0));
}

// Rotation by t: the N or N' Mobius rotation, i.e. arg + t at fixed norm.
template <scalar T>
PVec<T> rotate(const T& t, const PVec<T>& p) {
  Flavor f = p.flavor();
  if (!p.is_affine()) {
    const auto& [a, r] = p.polar_coords();
    return PVec<T>::polar(f, a + t * r, r);
  }
  HalfPlanePoint<T> w{p.affine_coords().u, p.affine_coords().v};
  HalfPlanePoint<T> img = f == Flavor::N ? parab_rotate_N(t, w) : parab_rotate_Nprime(t, w);
  return PVec<T>::affine(f, img.u, img.v);
}

enum class TropicalMode { Min, Max };

template <scalar T>
PVec<T> tropical_add(const PVec<T>& p, const PVec<T>& q, TropicalMode mode) {
  check_flavor(p, q);
  Affine<T> x = p.to_affine(), y = q.to_affine();
  bool x_less = x.u < y.u || (x.u == y.u && x.v < y.v);
  bool pick_x = mode == TropicalMode::Min ? x_less : !x_less;
  return PVec<T>(p.flavor(), pick_x ? x : y);
}

template <scalar T>
std::ostream& operator<<(std::ostream& os, const PVec<T>& p) {
  os << name(p.flavor());
  if (p.is_affine()) return os << "(" << p.affine_coords().u << ", " << p.affine_coords().v << ")";
  return os << "[" << p.polar_coords().a << ", " << p.polar_coords().r << "]";
}

}  // namespace eph
