#pragma once

// Curve data for the rotation figures: algebraic orbits x^2 - sigma y^2 = r^2,
// the geometric parabolic orbits (norm level sets of N and N'), spokes, and
// unit cycles, clipped to [-2, 2]^2.

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstring>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "eph/homogeneous.hpp"

namespace eph {

enum class CaseLabel { E, P0, P, Pprime, H };
enum class CurveKind { orbit, unit_cycle, spoke };
// Which equation a P or P' curve satisfies: the plain norm level sets or the
// experimental half-Cayley ("geodesic") families.
enum class Family { standard, geodesic };

constexpr const char* name(CaseLabel c) noexcept {
  switch (c) {
    case CaseLabel::E: return "E";
    case CaseLabel::P0: return "P0";
    case CaseLabel::P: return "P";
    case CaseLabel::Pprime: return "Pprime";
    case CaseLabel::H: return "H";
  }
  return "?";
}

constexpr const char* name(CurveKind k) noexcept {
  switch (k) {
    case CurveKind::orbit: return "orbit";
    case CurveKind::unit_cycle: return "unit_cycle";
    case CurveKind::spoke: return "spoke";
  }
  return "?";
}

struct OrbitCurve {
  CaseLabel case_label;
  double level;
  CurveKind kind;
  Family family = Family::standard;
  std::vector<std::pair<double, double>> samples;
};

inline constexpr double view_half = 2.0;
inline constexpr int samples_per_curve = 256;

// Defining polynomial of the curve, zero on its samples. Orbit and unit-cycle
// levels are r for E/P0/H and the norm value for P/P'; spoke levels are the
// rotation parameter.
inline double residual(const OrbitCurve& c, double x, double y) {
  double l = c.level;
  bool geo = c.family == Family::geodesic;
  if (c.kind == CurveKind::spoke) {
    switch (c.case_label) {
      case CaseLabel::E: return x * std::sin(l) - y * std::cos(l);
      case CaseLabel::P0: return y - l * x;
      case CaseLabel::H: return x * std::sinh(l) - y * std::cosh(l);
      case CaseLabel::P: return x - l;
      case CaseLabel::Pprime: return x - 1.0 / l;
    }
  }
  switch (c.case_label) {
    case CaseLabel::E: return x * x + y * y - l * l;
    case CaseLabel::P0: return x * x - l * l;
    case CaseLabel::H: return x * x - y * y - l * l;
    case CaseLabel::P: return geo ? x * x / 2 - y - l : x * x - y - l;
    case CaseLabel::Pprime: return geo ? x * x - l * (y + 0.5) : x * x - l * (y + 1);
  }
  return NAN;
}

namespace detail {

inline bool in_view(std::pair<double, double> p) {
  return std::abs(p.first) <= view_half && std::abs(p.second) <= view_half;
}

// Splits a parameterised curve into the pieces inside the view box and
// resamples each piece uniformly in its parameter.
inline std::vector<std::vector<std::pair<double, double>>> clip_and_sample(
    const std::function<std::pair<double, double>(double)>& pos, double s0, double s1) {
  constexpr int scan = 4096;
  auto edge = [&](double in, double out) {
    for (int i = 0; i < 60; ++i) {
      double mid = 0.5 * (in + out);
      (in_view(pos(mid)) ? in : out) = mid;
    }
    return in;
  };
  std::vector<std::vector<std::pair<double, double>>> pieces;
  double step = (s1 - s0) / scan;
  int i = 0;
  while (i <= scan) {
    while (i <= scan && !in_view(pos(s0 + i * step))) ++i;
    if (i > scan) break;
    int start = i;
    while (i <= scan && in_view(pos(s0 + i * step))) ++i;
    double a = start == 0 ? s0 : edge(s0 + start * step, s0 + (start - 1) * step);
    double b = i > scan ? s1 : edge(s0 + (i - 1) * step, s0 + i * step);
    if (b <= a) continue;
    std::vector<std::pair<double, double>> pts;
    pts.reserve(samples_per_curve);
    for (int k = 0; k < samples_per_curve; ++k) {
      double s = k == samples_per_curve - 1 ? b : a + (b - a) * k / (samples_per_curve - 1);
      pts.push_back(pos(s));
    }
    pieces.push_back(std::move(pts));
  }
  return pieces;
}

inline void add_curves(std::vector<OrbitCurve>& out, CaseLabel c, CurveKind k, Family f, double level,
                       const std::function<std::pair<double, double>(double)>& pos, double s0,
                       double s1) {
  for (auto& piece : clip_and_sample(pos, s0, s1)) out.push_back({c, level, k, f, std::move(piece)});
}

inline CaseLabel algebraic_case(Sigma s) {
  switch (s) {
    case Sigma::elliptic: return CaseLabel::E;
    case Sigma::parabolic: return CaseLabel::P0;
    case Sigma::hyperbolic: return CaseLabel::H;
  }
  return CaseLabel::E;
}

inline void algebraic_curve(std::vector<OrbitCurve>& out, Sigma s, double r, CurveKind kind) {
  CaseLabel c = algebraic_case(s);
  switch (s) {
    case Sigma::elliptic:
      add_curves(out, c, kind, Family::standard, r,
                 [r](double t) { return std::pair{r * std::cos(t), r * std::sin(t)}; },
                 -std::numbers::pi, std::numbers::pi);
      break;
    case Sigma::parabolic:
      for (double sgn : {1.0, -1.0})
        add_curves(out, c, kind, Family::standard, r,
                   [r, sgn](double t) { return std::pair{sgn * r, t}; }, -2 * view_half, 2 * view_half);
      break;
    case Sigma::hyperbolic:
      for (double sgn : {1.0, -1.0})
        add_curves(out, c, kind, Family::standard, r,
                   [r, sgn](double t) { return std::pair{sgn * r * std::cosh(t), r * std::sinh(t)}; },
                   -4.0, 4.0);
      break;
  }
}

inline void geometric_curve(std::vector<OrbitCurve>& out, CaseLabel c, Family f, double level,
                            CurveKind kind) {
  bool geo = f == Family::geodesic;
  std::function<std::pair<double, double>(double)> pos;
  if (c == CaseLabel::P)
    pos = [=](double x) { return std::pair{x, (geo ? x * x / 2 : x * x) - level}; };
  else
    pos = [=](double x) { return std::pair{x, x * x / level - (geo ? 0.5 : 1.0)}; };
  add_curves(out, c, kind, f, level, pos, -view_half, view_half);
}

}  // namespace detail

inline std::vector<OrbitCurve> algebraic_orbits(Sigma s, const std::vector<double>& levels) {
  std::vector<OrbitCurve> out;
  for (double r : levels) {
    if (!(r > 0)) throw error(errc::domain_error, "orbit levels must be positive");
    detail::algebraic_curve(out, s, r, CurveKind::orbit);
  }
  return out;
}

inline std::vector<OrbitCurve> unit_cycle(Sigma s) {
  std::vector<OrbitCurve> out;
  detail::algebraic_curve(out, s, 1.0, CurveKind::unit_cycle);
  return out;
}

// P: x^2 - y = c. P': x^2/(y+1) = c with c > 0. Geodesic: x^2/2 - y = c and
// x^2/(y+1/2) = c.
inline std::vector<OrbitCurve> geometric_orbits(Flavor flavor, const std::vector<double>& levels,
                                                Family f = Family::standard) {
  CaseLabel c = flavor == Flavor::N ? CaseLabel::P : CaseLabel::Pprime;
  std::vector<OrbitCurve> out;
  for (double level : levels) {
    if (c == CaseLabel::Pprime && !(level > 0))
      throw error(errc::domain_error, "N' norm levels must be positive");
    detail::geometric_curve(out, c, f, level, CurveKind::orbit);
  }
  return out;
}

// Both parabolic families share one unit cycle: y = x^2 - 1, or
// y = x^2/2 - 1/2 for the geodesic variant.
inline std::vector<OrbitCurve> geometric_unit_cycle(Flavor flavor, Family f = Family::standard) {
  std::vector<OrbitCurve> out;
  CaseLabel c = flavor == Flavor::N ? CaseLabel::P : CaseLabel::Pprime;
  double level = flavor == Flavor::N ? (f == Family::geodesic ? 0.5 : 1.0) : (f == Family::geodesic ? 2.0 : 1.0);
  detail::geometric_curve(out, c, f, level, CurveKind::unit_cycle);
  return out;
}

// Algebraic spokes are rays through e^{iota t} (and its negative for P0 and H,
// whose orbits have two branches); geometric spokes are the vertical lines of
// constant argument, x = t for N and x = 1/t for N'.
inline std::vector<OrbitCurve> spokes(CaseLabel c, const std::vector<double>& angles) {
  std::vector<OrbitCurve> out;
  const double reach = 2 * view_half;
  for (double t : angles) {
    switch (c) {
      case CaseLabel::E:
        detail::add_curves(out, c, CurveKind::spoke, Family::standard, t,
                           [t](double s) { return std::pair{s * std::cos(t), s * std::sin(t)}; }, 0, reach);
        break;
      case CaseLabel::P0:
      case CaseLabel::H: {
        double dx = c == CaseLabel::P0 ? 1.0 : std::cosh(t);
        double dy = c == CaseLabel::P0 ? t : std::sinh(t);
        for (double sgn : {1.0, -1.0})
          detail::add_curves(out, c, CurveKind::spoke, Family::standard, t,
                             [=](double s) { return std::pair{sgn * s * dx, sgn * s * dy}; }, 0, reach);
        break;
      }
      case CaseLabel::P:
      case CaseLabel::Pprime: {
        if (c == CaseLabel::Pprime && t == 0)
          throw error(errc::arg_undefined, "N' spoke at argument 0 is the line at infinity");
        double x = c == CaseLabel::P ? t : 1.0 / t;
        detail::add_curves(out, c, CurveKind::spoke, Family::standard, t,
                           [x](double s) { return std::pair{x, s}; }, -view_half, view_half);
        break;
      }
    }
  }
  return out;
}

// Half-Cayley parabolic rotations that preserve the geodesic families:
// (u + t, v + tu + t^2/2) and (u/(1+tu), (v - tu - t^2u^2/2)/(1+tu)^2).
template <scalar T>
HalfPlanePoint<T> geodesic_rotate_N(const T& t, const HalfPlanePoint<T>& p) {
  return {p.u + t, p.v + t * p.u + t * t / T(2)};
}

template <scalar T>
HalfPlanePoint<T> geodesic_rotate_Nprime(const T& t, const HalfPlanePoint<T>& p) {
  T q = T(1) + t * p.u;
  if (q == 0) throw error(errc::ideal_point, "N' rotation sends the point to infinity");
  return {p.u / q, (p.v - t * p.u - t * t * p.u * p.u / T(2)) / (q * q)};
}

inline void sort_curves(std::vector<OrbitCurve>& curves) {
  std::stable_sort(curves.begin(), curves.end(), [](const OrbitCurve& x, const OrbitCurve& y) {
    if (x.case_label != y.case_label) return x.case_label < y.case_label;
    if (x.kind != y.kind) return x.kind < y.kind;
    return x.level < y.level;
  });
}

// Figure 1: algebraic wheels E, P0, H. Figure 2: geometric wheels E, P, P', H,
// with the P and P' levels taken from the drawing-code families.
inline std::vector<OrbitCurve> figure_curves(int figure, bool geodesic = false) {
  if (figure != 1 && figure != 2) throw error(errc::domain_error, "figure must be 1 or 2");
  auto append = [](std::vector<OrbitCurve>& out, std::vector<OrbitCurve> more) {
    for (auto& c : more) out.push_back(std::move(c));
  };
  std::vector<double> radii{0.2, 0.4, 0.6, 0.8};
  std::vector<double> circle_angles, line_params{-1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5};
  for (int k = 0; k < 16; ++k) circle_angles.push_back(k * std::numbers::pi / 8);
  std::vector<OrbitCurve> out;
  append(out, algebraic_orbits(Sigma::elliptic, radii));
  append(out, unit_cycle(Sigma::elliptic));
  append(out, spokes(CaseLabel::E, circle_angles));
  append(out, algebraic_orbits(Sigma::hyperbolic, radii));
  append(out, unit_cycle(Sigma::hyperbolic));
  append(out, spokes(CaseLabel::H, line_params));
  if (figure == 1) {
    append(out, algebraic_orbits(Sigma::parabolic, radii));
    append(out, unit_cycle(Sigma::parabolic));
    append(out, spokes(CaseLabel::P0, line_params));
  } else {
    Family f = geodesic ? Family::geodesic : Family::standard;
    std::vector<double> p_levels, pp_levels;
    for (int i = 1; i <= 5; ++i) p_levels.push_back(geodesic ? 0.5 - i / 2.0 : 1.0 - i / 2.0);
    for (int i = 1; i <= 4; ++i)
      pp_levels.push_back(geodesic ? 1.0 / (0.25 * i * i * i + 0.5) : 1.0 / (0.5 * i * i * i + 1.0));
    append(out, geometric_orbits(Flavor::N, p_levels, f));
    append(out, geometric_unit_cycle(Flavor::N, f));
    append(out, spokes(CaseLabel::P, line_params));
    append(out, geometric_orbits(Flavor::Nprime, pp_levels, f));
    append(out, geometric_unit_cycle(Flavor::Nprime, f));
    append(out, spokes(CaseLabel::Pprime, {-3.0, -2.0, -1.5, -1.0, -0.5, 0.5, 1.0, 1.5, 2.0, 3.0}));
  }
  sort_curves(out);
  return out;
}

enum class OutputFormat { CSV, SVG, JSON };

inline std::string fmt(double x) { return to_string(x); }

inline std::string render(const std::vector<OrbitCurve>& curves, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::CSV:
      os << "case,level,kind,x,y\n";
      for (const auto& c : curves)
        for (auto [x, y] : c.samples)
          os << name(c.case_label) << ',' << fmt(c.level) << ',' << name(c.kind) << ',' << fmt(x) << ','
             << fmt(y) << '\n';
      break;
    case OutputFormat::SVG:
      os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-2 -2 4 4\" width=\"600\" height=\"600\">\n"
         << "<style>polyline{fill:none;stroke-width:0.01}.orbit{stroke:#1f4e9c}"
            ".unit_cycle{stroke:#c0392b;stroke-width:0.02}.spoke{stroke:#2e8b57}</style>\n"
         << "<g transform=\"scale(1,-1)\">\n";
      for (const auto& c : curves) {
        os << "<polyline class=\"" << name(c.case_label) << ' ' << name(c.kind) << "\" data-level=\""
           << fmt(c.level) << "\" points=\"";
        for (std::size_t i = 0; i < c.samples.size(); ++i)
          os << (i ? " " : "") << fmt(c.samples[i].first) << ',' << fmt(c.samples[i].second);
        os << "\"/>\n";
      }
      os << "</g>\n</svg>\n";
      break;
    case OutputFormat::JSON: {
      nlohmann::json doc = nlohmann::json::array();
      for (const auto& c : curves) {
        nlohmann::json pts = nlohmann::json::array();
        for (auto [x, y] : c.samples) pts.push_back({x, y});
        doc.push_back({{"case", name(c.case_label)},
                       {"level", c.level},
                       {"kind", name(c.kind)},
                       {"family", c.family == Family::geodesic ? "geodesic" : "standard"},
                       {"samples", std::move(pts)}});
      }
      os << doc.dump(1) << '\n';
      break;
    }
  }
  return os.str();
}

inline void emit(const std::vector<OrbitCurve>& curves, OutputFormat format, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw error(errc::io_error, path + ": " + std::strerror(errno));
  f << render(curves, format);
  f.close();
  if (!f) throw error(errc::io_error, path + ": " + std::strerror(errno));
}

}  // namespace eph
