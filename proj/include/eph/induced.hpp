#pragma once

// Characters of K and N', the representations they induce on functions over
// the half-plane, and the invariant inner product used to test unitarity.

#include <cmath>
#include <functional>
#include <vector>

#include "eph/dualalg.hpp"

namespace eph {

enum class CharSubgroup { K, Nprime, Aprime };
enum class CharFlavor { complex, parab_alg, parab_geom };

constexpr const char* name(CharFlavor f) noexcept {
  switch (f) {
    case CharFlavor::complex: return "complex";
    case CharFlavor::parab_alg: return "parab-alg";
    case CharFlavor::parab_geom: return "parab-geom";
  }
  return "?";
}

// Values are complex for the complex flavor and dual otherwise.
constexpr Sigma value_sigma(CharFlavor f) noexcept {
  return f == CharFlavor::complex ? Sigma::elliptic : Sigma::parabolic;
}

template <scalar T>
struct CharacterSpec {
  CharSubgroup subgroup;
  CharFlavor flavor;
  int k = 0;   // K
  T tau{0};    // N'

  static CharacterSpec K(int k) { return {CharSubgroup::K, CharFlavor::complex, k, T(0)}; }
  static CharacterSpec Nprime(CharFlavor f, T tau) { return {CharSubgroup::Nprime, f, 0, tau}; }

  void validate() const {
    if (subgroup == CharSubgroup::Aprime)
      throw error(errc::domain_error, "A'-induced representations are not implemented");
    if (subgroup == CharSubgroup::K && flavor != CharFlavor::complex)
      throw error(errc::domain_error, "K admits complex characters only");
  }
};

template <scalar T>
bool in_K(const SL2<T>& h) {
  double scale = std::abs(to_double(h.a())) + std::abs(to_double(h.b()));
  return approx_eq<T>(h.a(), h.d(), scale) && approx_eq<T>(h.b(), T(-h.c()), scale);
}

template <scalar T>
bool in_Nprime(const SL2<T>& h) {
  return h.a() == 1 && h.d() == 1 && h.b() == 0;
}

// chi_k(h) = (h11 + i h12)^k on K, which is e^{ikt} for [[cos t, sin t],
// [-sin t, cos t]]. This orientation makes the induced representation agree
// with the discrete-series multiplier below; see the README.
template <scalar T>
HNum<T> chi(const CharacterSpec<T>& spec, const SL2<T>& h) {
  spec.validate();
  if (spec.subgroup == CharSubgroup::K) {
    if (!in_K(h)) throw error(errc::not_in_subgroup, "element is not in K");
    HNum<T> z(h.a(), h.b(), Sigma::elliptic);
    return spec.k >= 0 ? pow(z, unsigned(spec.k)) : pow(invert(z), unsigned(-spec.k));
  }
  if (!in_Nprime(h)) throw error(errc::not_in_subgroup, "element is not in N'");
  T t = spec.tau * h.c();
  if (spec.flavor == CharFlavor::complex) return exp_unit(Sigma::elliptic, t);
  return exp_unit(Sigma::parabolic, t);
}

template <scalar T>
struct Rect {
  T u_min, u_max, v_min, v_max;

  bool contains(const Rect& r) const {
    return r.u_min >= u_min && r.u_max <= u_max && r.v_min >= v_min && r.v_max <= v_max;
  }
};

template <scalar T>
struct SampledFunction {
  std::function<HNum<T>(const HalfPlanePoint<T>&)> eval;
  Rect<T> support;

  HNum<T> operator()(const HalfPlanePoint<T>& w) const { return eval(w); }
};

// rho(g) f (w) = multiplier * f(image) + shift, with g^-1 = (a b; c d).
template <scalar T>
struct RepTerms {
  HNum<T> multiplier;
  HNum<T> shift;
  HalfPlanePoint<T> image;
};

// |cw+d|^k / (cw+d)^k, image (aw+b)/(cw+d) in complex numbers.
template <scalar T>
RepTerms<T> rep_K_terms(int k, const SL2<T>& g, const HalfPlanePoint<T>& w) {
  if (k < 1) throw error(errc::domain_error, "discrete series needs k >= 1");
  SL2<T> gi = g.inverse();
  HNum<T> z(gi.c() * w.u + gi.d(), gi.c() * w.v, Sigma::elliptic);
  T len = sc::sqrt(modulus_sq(z));
  T lenk(1);
  for (int i = 0; i < k; ++i) lenk *= len;
  HNum<T> mult = pow(conj(z), unsigned(k)) / lenk;
  return {mult, HNum<T>::real(T(0), Sigma::elliptic), act_brute(gi, w, Sigma::elliptic)};
}

template <scalar T>
HNum<T> rep_K(int k, const SL2<T>& g, const SampledFunction<T>& f, const HalfPlanePoint<T>& w) {
  RepTerms<T> r = rep_K_terms(k, g, w);
  return r.multiplier * f(r.image);
}

// With s = tau*cv/(cu+d): complex e^{is}; parab-alg 1 + e s; parab-geom
// (1 + 2e s) f + s + e s^2, the N rotation of the value by s.
template <scalar T>
RepTerms<T> rep_Nprime_terms(CharFlavor flavor, const T& tau, const SL2<T>& g,
                             const HalfPlanePoint<T>& w) {
  SL2<T> gi = g.inverse();
  T den = gi.c() * w.u + gi.d();
  if (den == 0) throw error(errc::ideal_point, "cu + d = 0");
  T s = tau * gi.c() * w.v / den;
  HalfPlanePoint<T> image = act_brute(gi, w, Sigma::parabolic);
  switch (flavor) {
    case CharFlavor::complex:
      return {exp_unit(Sigma::elliptic, s), HNum<T>::real(T(0), Sigma::elliptic), image};
    case CharFlavor::parab_alg:
      return {exp_unit(Sigma::parabolic, s), HNum<T>::real(T(0), Sigma::parabolic), image};
    case CharFlavor::parab_geom:
      return {HNum<T>(T(1), T(2) * s, Sigma::parabolic), HNum<T>(s, s * s, Sigma::parabolic), image};
  }
  throw error(errc::domain_error, "bad flavor");
}

template <scalar T>
HNum<T> rep_Nprime(CharFlavor flavor, const T& tau, const SL2<T>& g, const SampledFunction<T>& f,
                   const HalfPlanePoint<T>& w) {
  RepTerms<T> r = rep_Nprime_terms(flavor, tau, g, w);
  return r.multiplier * f(r.image) + r.shift;
}

template <scalar T>
RepTerms<T> rep_terms(const CharacterSpec<T>& spec, const SL2<T>& g, const HalfPlanePoint<T>& w) {
  spec.validate();
  if (spec.subgroup == CharSubgroup::K) return rep_K_terms(spec.k, g, w);
  return rep_Nprime_terms(spec.flavor, spec.tau, g, w);
}

template <scalar T>
HNum<T> rep(const CharacterSpec<T>& spec, const SL2<T>& g, const SampledFunction<T>& f,
            const HalfPlanePoint<T>& w) {
  RepTerms<T> r = rep_terms(spec, g, w);
  return r.multiplier * f(r.image) + r.shift;
}

// The induced construction chi(r(g^-1 s(w))) f(g^-1 w) straight from the
// section and factor maps. Multiplicative flavors only.
template <scalar T>
HNum<T> rep_from_section(const CharacterSpec<T>& spec, const SL2<T>& g, const SampledFunction<T>& f,
                         const HalfPlanePoint<T>& w) {
  spec.validate();
  if (spec.flavor == CharFlavor::parab_geom)
    throw error(errc::domain_error, "the geometric flavor is not a multiplier");
  Sigma s = spec.subgroup == CharSubgroup::K ? Sigma::elliptic : Sigma::parabolic;
  SL2<T> gi = g.inverse();
  HalfPlanePoint<T> image = act_brute(gi, w, s);
  if (s == Sigma::parabolic) {
    // r only depends on the ratio of the bottom row, so the radical-free
    // section representative suffices.
    Mat2<T> m = gi.mat() * s_map_unnormalized(w);
    if (m.d == 0) throw error(errc::ideal_point, "cu + d = 0");
    return chi(spec, SL2<T>(T(1), T(0), m.c / m.d, T(1))) * f(image);
  }
  SL2<T> h = r_map(gi * s_map(w), Subgroup::K);
  return chi(spec, h) * f(image);
}

// f_k(w) = |w - i|^k / (w - i)^k
template <scalar T>
SampledFunction<T> f_k(int k) {
  auto eval = [k](const HalfPlanePoint<T>& w) {
    HNum<T> z(w.u, w.v - T(1), Sigma::elliptic);
    T len = sc::sqrt(modulus_sq(z));
    T lenk(1);
    for (int i = 0; i < k; ++i) lenk *= len;
    return pow(conj(z), unsigned(k)) / lenk;
  };
  T big(1e300);
  return {eval, {T(-big), big, T(0), big}};
}

// Image of a rectangle under the Mobius action: boundary samples give the
// bounding box of the image, since the action is a homeomorphism.
inline Rect<double> transport_support(const SL2<double>& g, const Rect<double>& r, Sigma s) {
  constexpr int n = 64;
  Rect<double> out{1e300, -1e300, 1e300, -1e300};
  auto take = [&](double u, double v) {
    HalfPlanePoint<double> p = act_brute(g, HalfPlanePoint<double>{u, v}, s);
    out.u_min = std::min(out.u_min, p.u);
    out.u_max = std::max(out.u_max, p.u);
    out.v_min = std::min(out.v_min, p.v);
    out.v_max = std::max(out.v_max, p.v);
  };
  for (int i = 0; i <= n; ++i) {
    double x = r.u_min + (r.u_max - r.u_min) * i / n;
    double y = r.v_min + (r.v_max - r.v_min) * i / n;
    take(x, r.v_min);
    take(x, r.v_max);
    take(r.u_min, y);
    take(r.u_max, y);
  }
  double mu = 0.01 * (out.u_max - out.u_min), mv = 0.01 * (out.v_max - out.v_min);
  return {out.u_min - mu, out.u_max + mu, out.v_min - mv, out.v_max + mv};
}

template <scalar T>
SampledFunction<T> transport(const CharacterSpec<T>& spec, const SL2<T>& g, const SampledFunction<T>& f) {
  spec.validate();
  Sigma s = spec.subgroup == CharSubgroup::K ? Sigma::elliptic : Sigma::parabolic;
  Rect<T> support = f.support;
  if constexpr (!is_exact_v<T>) support = transport_support(g, f.support, s);
  return {[spec, g, f](const HalfPlanePoint<T>& w) { return rep(spec, g, f, w); }, support};
}

struct QuadratureSpec {
  double u_min, u_max, v_min, v_max;
  int nu, nv;

  Rect<double> rect() const { return {u_min, u_max, v_min, v_max}; }
  QuadratureSpec refined() const { return {u_min, u_max, v_min, v_max, 2 * nu, 2 * nv}; }
};

// f1 * conj(f2): standard conjugation and product for the complex and
// parab-alg flavors; the exotic N product and conjugation of the values, read
// as points, for parab-geom.
inline HNum<double> integrand(const HNum<double>& x, const HNum<double>& y, CharFlavor flavor) {
  if (flavor != CharFlavor::parab_geom) return x * conj(y);
  auto p = PVec<double>::affine(Flavor::N, x.re(), x.im());
  auto q = PVec<double>::affine(Flavor::N, y.re(), y.im());
  Affine<double> r = pmul(p, pconj(q)).affine_coords();
  return HNum<double>(r.u, r.v, Sigma::parabolic);
}

// Tensor midpoint rule for the integral of f1 conj(f2) du dv / v^2. Rows are
// summed in order, so the result is reproducible bit for bit.
inline HNum<double> inner_product(const SampledFunction<double>& f1, const SampledFunction<double>& f2,
                                  CharFlavor flavor, const QuadratureSpec& grid) {
  if (!(grid.v_min > 0)) throw error(errc::domain_error, "quadrature grid needs v_min > 0");
  if (grid.nu < 1 || grid.nv < 1 || !(grid.u_max > grid.u_min) || !(grid.v_max > grid.v_min))
    throw error(errc::domain_error, "empty quadrature grid");
  if (!grid.rect().contains(f1.support) || !grid.rect().contains(f2.support))
    throw error(errc::domain_error, "function support is not inside the grid");
  double du = (grid.u_max - grid.u_min) / grid.nu;
  double dv = (grid.v_max - grid.v_min) / grid.nv;
  Sigma s = value_sigma(flavor);
  double re = 0, im = 0;
  for (int j = 0; j < grid.nv; ++j) {
    double v = grid.v_min + (j + 0.5) * dv;
    double w = du * dv / (v * v);
    double row_re = 0, row_im = 0;
    for (int i = 0; i < grid.nu; ++i) {
      HalfPlanePoint<double> p{grid.u_min + (i + 0.5) * du, v};
      HNum<double> val = integrand(f1(p), f2(p), flavor);
      row_re += val.re();
      row_im += val.im();
    }
    re += w * row_re;
    im += w * row_im;
  }
  return HNum<double>(re, im, s);
}

inline double distance(const HNum<double>& x, const HNum<double>& y) {
  return std::hypot(x.re() - y.re(), x.im() - y.im());
}

inline void check_transported_support(const CharacterSpec<double>& spec, const SL2<double>& g,
                                      const SampledFunction<double>& f, const QuadratureSpec& grid) {
  Sigma s = spec.subgroup == CharSubgroup::K ? Sigma::elliptic : Sigma::parabolic;
  if (!grid.rect().contains(transport_support(g, f.support, s)))
    throw error(errc::support_escaped, "transported support leaves the quadrature grid");
}

inline double unitarity_defect(const CharacterSpec<double>& spec, const SL2<double>& g,
                               const SampledFunction<double>& f1, const SampledFunction<double>& f2,
                               const QuadratureSpec& grid) {
  check_transported_support(spec, g, f1, grid);
  check_transported_support(spec, g, f2, grid);
  HNum<double> before = inner_product(f1, f2, spec.flavor, grid);
  HNum<double> after = inner_product(transport(spec, g, f1), transport(spec, g, f2), spec.flavor, grid);
  return distance(after, before);
}

struct UnitarityReport {
  HNum<double> value;              // <f1, f2> on the grid
  HNum<double> value_transported;  // <rho f1, rho f2> on the grid
  double defect;
  double error_estimate;  // one refinement, summed over both integrals
};

inline UnitarityReport unitarity_report(const CharacterSpec<double>& spec, const SL2<double>& g,
                                        const SampledFunction<double>& f1,
                                        const SampledFunction<double>& f2, const QuadratureSpec& grid) {
  check_transported_support(spec, g, f1, grid);
  check_transported_support(spec, g, f2, grid);
  SampledFunction<double> t1 = transport(spec, g, f1), t2 = transport(spec, g, f2);
  QuadratureSpec fine = grid.refined();
  HNum<double> before = inner_product(f1, f2, spec.flavor, grid);
  HNum<double> after = inner_product(t1, t2, spec.flavor, grid);
  double err = distance(before, inner_product(f1, f2, spec.flavor, fine)) +
               distance(after, inner_product(t1, t2, spec.flavor, fine));
  return {before, after, distance(after, before), err};
}

// (1 - x^2)^2 (1 - y^2)^2 on the rectangle rescaled to [-1,1]^2, zero outside.
// Only C^1 at the edge, so midpoint errors stay visibly above rounding.
inline double poly_bump(const Rect<double>& r, const HalfPlanePoint<double>& w) {
  double x = (2 * w.u - r.u_min - r.u_max) / (r.u_max - r.u_min);
  double y = (2 * w.v - r.v_min - r.v_max) / (r.v_max - r.v_min);
  if (std::abs(x) >= 1 || std::abs(y) >= 1) return 0;
  double px = 1 - x * x, py = 1 - y * y;
  return px * px * py * py;
}

// A bump times a smooth value profile; the profile is evaluated only on the
// support.
inline SampledFunction<double> bump_function(
    const Rect<double>& r, Sigma s,
    std::function<HNum<double>(const HalfPlanePoint<double>&)> profile) {
  return {[r, s, profile](const HalfPlanePoint<double>& w) {
            double b = poly_bump(r, w);
            if (b == 0) return HNum<double>::real(0.0, s);
            return b * profile(w);
          },
          r};
}

}  // namespace eph
