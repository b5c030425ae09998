#pragma once

// The executable identity checklist behind `eph verify`: every algebraic
// identity of the exotic parabolic algebra plus the structural properties of
// each module, run on seeded random instances. Exact rationals wherever the
// identity is rational; floats with a stated tolerance otherwise.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eph/induced.hpp"
#include "eph/ladder.hpp"
#include "eph/orbitgen.hpp"
#include "eph/random.hpp"

namespace eph {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed;
  std::string detail;
};

namespace verify_detail {

// Random draws that land on an ideal point or a zero divisor are outside the
// identities' hypotheses; they are redrawn and counted.
inline bool degenerate_draw(errc c) {
  switch (c) {
    case errc::ideal_point:
    case errc::zero_divisor:
    case errc::product_undefined:
    case errc::factorization_fails:
    case errc::arg_undefined:
    case errc::norm_undefined:
    case errc::affine_undefined:
    case errc::division_by_zero: return true;
    default: return false;
  }
}

class Suite {
 public:
  Suite(std::string name, std::uint64_t seed) : name_(std::move(name)), rng_(seed) {}

  template <class F>
  void check(std::string what, int n, F&& body) {
    int done = 0, redrawn = 0;
    std::string failure;
    while (done < n && failure.empty()) {
      if (redrawn > 20 * n) {
        failure = "too many degenerate draws";
        break;
      }
      try {
        if (body(rng_)) ++done;
        else failure = "fails at instance " + std::to_string(done);
      } catch (const error& e) {
        if (degenerate_draw(e.code())) ++redrawn;
        else failure = e.what();
      } catch (const std::exception& e) {
        failure = e.what();
      }
    }
    std::string detail = failure;
    if (failure.empty()) {
      detail = std::to_string(done) + (done == 1 ? " instance" : " instances");
      if (redrawn) detail += ", " + std::to_string(redrawn) + " degenerate draws redrawn";
    }
    results_.push_back({name_, std::move(what), failure.empty(), std::move(detail)});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string name_;
  rng_t rng_;
  std::vector<CheckResult> results_;
};

inline double uniform(rng_t& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Sigma random_sigma(rng_t& rng) {
  return sigma_from_int(std::uniform_int_distribution<int>(-1, 1)(rng));
}

inline HNum<rational> random_hnum(rng_t& rng, Sigma s) {
  return {random_rational(rng), random_rational(rng), s};
}

inline bool close(const HNum<double>& x, const HNum<double>& y, double tol) {
  double scale = std::max({1.0, std::abs(x.re()), std::abs(x.im())});
  return x.sigma() == y.sigma() && std::abs(x.re() - y.re()) <= tol * scale &&
         std::abs(x.im() - y.im()) <= tol * scale;
}

inline bool close(const HalfPlanePoint<double>& p, const HalfPlanePoint<double>& q, double tol) {
  double scale = std::max({1.0, std::abs(p.u), std::abs(p.v)});
  return std::abs(p.u - q.u) <= tol * scale && std::abs(p.v - q.v) <= tol * scale;
}

// N points come in either chart; N' points in the polar chart, where the
// whole algebra is defined without exceptions.
inline PVec<rational> random_pvec(rng_t& rng, Flavor f) {
  if (f == Flavor::Nprime || std::bernoulli_distribution(0.3)(rng))
    return PVec<rational>::polar(f, random_rational(rng), random_nonzero_rational(rng));
  return PVec<rational>::affine(f, random_rational(rng), random_rational(rng));
}

// Affine points with a defined norm and argument in both flavors.
inline PVec<rational> random_affine_pvec(rng_t& rng, Flavor f) {
  rational u = f == Flavor::N ? random_rational(rng) : random_nonzero_rational(rng);
  rational v = random_rational(rng);
  if (f == Flavor::Nprime && v == -1) v = 0;
  return PVec<rational>::affine(f, u, v);
}

inline HalfPlanePoint<rational> random_point(rng_t& rng) {
  return {random_rational(rng), random_positive_rational(rng)};
}

inline HalfPlanePoint<double> random_float_point(rng_t& rng) {
  return {uniform(rng, -1.5, 1.5), uniform(rng, 0.4, 2.5)};
}

inline LieTriple<rational> random_triple(rng_t& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng)};
}

inline Lie<rational> random_lie(rng_t& rng) {
  rational a = random_rational(rng);
  return Lie<rational>(a, random_rational(rng), random_rational(rng), -a);
}

}  // namespace verify_detail

inline std::vector<CheckResult> verify_hypercomplex(std::uint64_t seed = 1) {
  using namespace verify_detail;
  using H = HNum<rational>;
  Suite s("hypercomplex", seed);
  constexpr int n = 300;
  auto triple = [](rng_t& rng) {
    Sigma sg = random_sigma(rng);
    return std::array<H, 3>{random_hnum(rng, sg), random_hnum(rng, sg), random_hnum(rng, sg)};
  };
  s.check("addition is commutative and associative", n, [&](rng_t& rng) {
    auto [x, y, z] = triple(rng);
    return x + y == y + x && (x + y) + z == x + (y + z);
  });
  s.check("multiplication is commutative and associative", n, [&](rng_t& rng) {
    auto [x, y, z] = triple(rng);
    return x * y == y * x && (x * y) * z == x * (y * z);
  });
  s.check("multiplication distributes over addition", n, [&](rng_t& rng) {
    auto [x, y, z] = triple(rng);
    return x * (y + z) == x * y + x * z;
  });
  s.check("modulus_sq is multiplicative", n, [&](rng_t& rng) {
    auto [x, y, z] = triple(rng);
    (void)z;
    return modulus_sq(x * y) == modulus_sq(x) * modulus_sq(y);
  });
  s.check("invert is a two-sided inverse", n, [&](rng_t& rng) {
    auto [x, y, z] = triple(rng);
    (void)y, (void)z;
    H one = H::real(1, x.sigma());
    return x * invert(x) == one && invert(x) * x == one;
  });
  s.check("conjugation is an involutive automorphism", n, [&](rng_t& rng) {
    auto [x, y, z] = triple(rng);
    (void)z;
    return conj(x * y) == conj(x) * conj(y) && conj(conj(x)) == x;
  });
  s.check("exp_unit group law, dual numbers (exact)", n, [&](rng_t& rng) {
    rational t = random_rational(rng), u = random_rational(rng);
    return exp_unit(Sigma::parabolic, t) * exp_unit(Sigma::parabolic, u) ==
           exp_unit(Sigma::parabolic, rational(t + u));
  });
  s.check("exp_unit group law, complex and double numbers (1e-12)", n, [&](rng_t& rng) {
    Sigma sg = std::bernoulli_distribution(0.5)(rng) ? Sigma::elliptic : Sigma::hyperbolic;
    double t = uniform(rng, -2, 2), u = uniform(rng, -2, 2);
    return close(exp_unit(sg, t) * exp_unit(sg, u), exp_unit(sg, t + u), 1e-12);
  });
  s.check("arg(w exp_unit(t)) = arg(w) + t (1e-12)", n, [&](rng_t& rng) {
    Sigma sg = random_sigma(rng);
    double t = uniform(rng, -1, 1);
    // Inside each case's domain of arg: a right half-plane sector, re > 0,
    // and the cone |im| < re.
    double re = uniform(rng, 0.5, 2), im = uniform(rng, -0.4, 0.4) * re;
    HNum<double> w(re, im, sg);
    double lhs = arg(w * exp_unit(sg, t)), rhs = arg(w) + t;
    return std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs));
  });
  return s.take();
}

inline std::vector<CheckResult> verify_sl2(std::uint64_t seed = 2) {
  using namespace verify_detail;
  Suite s("sl2", seed);
  s.check("Iwasawa round trip within 1e-10, phi in (-pi, pi]", 1000, [&](rng_t& rng) {
    SL2<double> g = random_float_sl2(rng);
    IwasawaFactors f = iwasawa_decompose(g);
    return f.phi > -std::numbers::pi && f.phi <= std::numbers::pi && f.alpha > 0 &&
           max_abs_diff(recompose(f), g.mat()) <= 1e-10;
  });
  auto random_float_lie = [](rng_t& rng) {
    double a = uniform(rng, -1, 1);
    return Lie<double>(a, uniform(rng, -1, 1), uniform(rng, -1, 1), -a);
  };
  s.check("exp_traceless one-parameter law (1e-10)", 500, [&](rng_t& rng) {
    Lie<double> x = random_float_lie(rng);
    double t = uniform(rng, -1, 1), u = uniform(rng, -1, 1);
    return max_abs_diff((exp_traceless(x, t) * exp_traceless(x, u)).mat(),
                        exp_traceless(x, t + u).mat()) <= 1e-10;
  });
  s.check("det exp_traceless = 1 (1e-12)", 500, [&](rng_t& rng) {
    Lie<double> x = random_float_lie(rng);
    return std::abs(exp_traceless(x, uniform(rng, -2, 2)).mat().det() - 1) <= 1e-12;
  });
  s.check("exp_traceless of a nilpotent is exact", 200, [&](rng_t& rng) {
    rational p = random_rational(rng), q = random_nonzero_rational(rng);
    Lie<rational> x(p * q, -p * p, q * q, -p * q);  // rank one, square zero
    rational t = random_rational(rng), u = random_rational(rng);
    return exp_traceless(x, t) * exp_traceless(x, u) == exp_traceless(x, rational(t + u));
  });
  s.check("classify is conjugation invariant (exact)", 300, [&](rng_t& rng) {
    Lie<rational> x = random_lie(rng);
    if (x.is_zero_element()) return true;
    SL2<rational> g = random_rational_sl2(rng);
    Lie<rational> y(g.mat() * x.mat() * g.inverse().mat());
    return classify(y) == classify(x);
  });
  s.check("Jacobi identity (exact)", 300, [&](rng_t& rng) {
    Lie<rational> x = random_lie(rng), y = random_lie(rng), z = random_lie(rng);
    Lie<rational> sum = commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) +
                        commutator(z, commutator(x, y));
    return sum.is_zero_element();
  });
  s.check("conjugate_to_standard: S std S^-1 = lambda X", 300, [&](rng_t& rng) {
    Lie<double> x = random_float_lie(rng);
    Conjugation<double> c = conjugate_to_standard(x);
    return max_abs_diff(c.S.mat() * c.standard.mat() * c.S.inverse().mat(), c.lambda * x.mat()) <= 1e-9;
  });
  s.check("conjugate_to_standard of an N-type element is exact", 200, [&](rng_t& rng) {
    rational p = random_rational(rng), q = random_nonzero_rational(rng);
    Lie<rational> x(p * q, -p * p, q * q, -p * q);
    Conjugation<rational> c = conjugate_to_standard(x);
    return c.S.mat() * c.standard.mat() * c.S.inverse().mat() == c.lambda * x.mat();
  });
  return s.take();
}

inline std::vector<CheckResult> verify_homogeneous(std::uint64_t seed = 3) {
  using namespace verify_detail;
  using P = HalfPlanePoint<rational>;
  Suite s("homogeneous", seed);
  constexpr int n = 300;
  s.check("act_brute is an action: (g1 g2) p = g1 (g2 p) (exact)", n, [&](rng_t& rng) {
    Sigma sg = random_sigma(rng);
    SL2<rational> g1 = random_rational_sl2(rng), g2 = random_rational_sl2(rng);
    P p = random_point(rng);
    return act_brute(g1 * g2, p, sg) == act_brute(g1, act_brute(g2, p, sg), sg);
  });
  s.check("act_brute(g, p) = p(g s(p)) (exact)", n, [&](rng_t& rng) {
    Sigma sg = random_sigma(rng);
    SL2<rational> g = random_rational_sl2(rng);
    P p = random_point(rng);
    return act_brute(g, p, sg) == p_map(g.mat() * s_map_unnormalized(p), sg);
  });
  s.check("Mobius action agrees with act_brute (exact)", n, [&](rng_t& rng) {
    Sigma sg = random_sigma(rng);
    SL2<rational> g = random_rational_sl2(rng);
    P p = random_point(rng);
    return affine(act_moebius(g, embed(p, sg))) == act_brute(g, p, sg);
  });
  s.check("Cayley image of K(t) is diag(e^{it}, e^{-it}) (1e-12)", 100, [&](rng_t& rng) {
    double t = uniform(rng, -3, 3);
    auto m = cayley_conjugate(subgroup_element(Subgroup::K, t), Sigma::elliptic);
    HNum<double> zero = HNum<double>::real(0, Sigma::elliptic);
    return close(m.b, zero, 1e-12) && close(m.c, zero, 1e-12) &&
           close(m.a, exp_unit(Sigma::elliptic, t), 1e-12) &&
           close(m.d, exp_unit(Sigma::elliptic, -t), 1e-12);
  });
  s.check("Cayley image of A'(t) is diag(e^{+-ht}) (1e-12)", 100, [&](rng_t& rng) {
    double t = uniform(rng, -2, 2);
    auto m = cayley_conjugate(subgroup_element(Subgroup::Aprime, t), Sigma::hyperbolic);
    HNum<double> zero = HNum<double>::real(0, Sigma::hyperbolic);
    HNum<double> e = exp_unit(Sigma::hyperbolic, t), ei = exp_unit(Sigma::hyperbolic, -t);
    bool diag = close(m.b, zero, 1e-12) && close(m.c, zero, 1e-12);
    return diag && ((close(m.a, e, 1e-12) && close(m.d, ei, 1e-12)) ||
                    (close(m.a, ei, 1e-12) && close(m.d, e, 1e-12)));
  });
  s.check("Cayley image of N(t) is [[1+et, t], [0, 1-et]] (exact)", 100, [&](rng_t& rng) {
    rational t = random_rational(rng);
    auto n_ = [](rational re, rational im) { return HNum<rational>(re, im, Sigma::parabolic); };
    Mat2<HNum<rational>> want{n_(1, t), n_(t, 0), n_(0, 0), n_(1, -t)};
    return cayley_conjugate(subgroup_element(Subgroup::N, t), Sigma::parabolic) == want;
  });
  s.check("parab_rotate_N is the Mobius action of its matrix (exact)", n, [&](rng_t& rng) {
    rational t = random_rational(rng);
    P p{random_rational(rng), random_rational(rng)};
    return affine(act_moebius(rotation_matrix_N(t), embed(p, Sigma::parabolic))) == parab_rotate_N(t, p);
  });
  s.check("parab_rotate_Nprime is the Mobius action of its matrix (exact)", n, [&](rng_t& rng) {
    rational t = random_rational(rng);
    P p{random_rational(rng), random_rational(rng)};
    return affine(act_moebius(rotation_matrix_Nprime(t), embed(p, Sigma::parabolic))) ==
           parab_rotate_Nprime(t, p);
  });
  s.check("parab_rotate_N is a one-parameter flow (exact)", n, [&](rng_t& rng) {
    rational t = random_rational(rng), u = random_rational(rng);
    P p{random_rational(rng), random_rational(rng)};
    return parab_rotate_N(t, parab_rotate_N(u, p)) == parab_rotate_N(rational(t + u), p);
  });
  s.check("parab_rotate_Nprime is a one-parameter flow (exact)", n, [&](rng_t& rng) {
    rational t = random_rational(rng), u = random_rational(rng);
    P p{random_rational(rng), random_rational(rng)};
    return parab_rotate_Nprime(t, parab_rotate_Nprime(u, p)) == parab_rotate_Nprime(rational(t + u), p);
  });
  s.check("parab_rotate_N sends (0, -1) to (t, t^2 - 1) (exact)", n, [&](rng_t& rng) {
    rational t = random_rational(rng);
    return parab_rotate_N(t, P{0, -1}) == P{t, t * t - 1};
  });
  s.check("image of the N' ideal point follows the flow (exact)", n, [&](rng_t& rng) {
    rational t = random_nonzero_rational(rng), u = random_rational(rng);
    return parab_rotate_Nprime(u, parab_rotate_Nprime_ideal(t)) == parab_rotate_Nprime_ideal(rational(t + u));
  });
  s.check("parabolic Pythagoras sin_p^2 + cos_p = 1 (exact)", n, [&](rng_t& rng) {
    rational t = random_rational(rng);
    return sin_p(t) * sin_p(t) + cos_p(t) == 1;
  });
  return s.take();
}

inline std::vector<CheckResult> verify_dualalg(std::uint64_t seed = 4) {
  using namespace verify_detail;
  using V = PVec<rational>;
  Suite s("dualalg", seed);
  constexpr int n = 200;
  for (Flavor f : {Flavor::N, Flavor::Nprime}) {
    std::string tag = std::string(" [") + name(f) + "]";
    auto pv = [f](rng_t& rng) { return random_pvec(rng, f); };
    // Appendix checklist, in its order.
    s.check("P is the sum of Re(P) and Im(P)" + tag, n, [&](rng_t& rng) {
      V p = pv(rng);
      return same_point(padd(real_part(p), imag_part(p)), p);
    });
    s.check("the real part of a real number is itself" + tag, n, [&](rng_t& rng) {
      rational a = random_nonzero_rational(rng);
      return norm(real_part(from_arg_mod(f, rational(0), a))) == a;
    });
    s.check("norm is invariant under rotations" + tag, n, [&](rng_t& rng) {
      V p = pv(rng);
      return norm(rotate(random_rational(rng), p)) == norm(p);
    });
    s.check("product w1 conj(w2) is invariant under rotations" + tag, n, [&](rng_t& rng) {
      V p = pv(rng), q = pv(rng);
      rational t = random_rational(rng);
      return same_point(pmul(p, pconj(q)), pmul(rotate(t, p), pconj(rotate(t, q))));
    });
    s.check("product w conj(w) is norm squared" + tag, n, [&](rng_t& rng) {
      V p = pv(rng);
      rational r = norm(p);
      return same_point(pmul(p, pconj(p)), from_arg_mod(f, rational(0), rational(r * r)));
    });
    s.check("the unit is neutral for the product" + tag, n, [&](rng_t& rng) {
      V p = pv(rng);
      return same_point(pmul(p, unit<rational>(f)), p);
    });
    s.check("addition is commutative" + tag, n, [&](rng_t& rng) {
      V p = pv(rng), q = pv(rng);
      return same_point(padd(p, q), padd(q, p));
    });
    s.check("addition is associative" + tag, n, [&](rng_t& rng) {
      V p = pv(rng), q = pv(rng), r = pv(rng);
      return same_point(padd(padd(p, q), r), padd(p, padd(q, r)));
    });
    s.check("scalar multiplication is commutative" + tag, n, [&](rng_t& rng) {
      V p = pv(rng);
      rational a = random_nonzero_rational(rng);
      V as_point = from_arg_mod(f, rational(0), a);
      return same_point(smul(a, p), pmul(p, as_point)) && same_point(smul(a, p), pmul(as_point, p));
    });
    s.check("scalar multiplication is associative" + tag, n, [&](rng_t& rng) {
      V p = pv(rng);
      rational a = random_nonzero_rational(rng), b = random_nonzero_rational(rng);
      return same_point(smul(b, smul(a, p)), smul(a, smul(b, p))) &&
             same_point(smul(b, smul(a, p)), smul(rational(a * b), p));
    });
    s.check("a (w1 + w2) = a w1 + a w2" + tag, n, [&](rng_t& rng) {
      V p = pv(rng), q = pv(rng);
      rational a = random_nonzero_rational(rng);
      return same_point(smul(a, padd(p, q)), padd(smul(a, p), smul(a, q)));
    });
    s.check("(a + b) w = a w + b w" + tag, n, [&](rng_t& rng) {
      V p = pv(rng);
      rational a = random_nonzero_rational(rng), b = random_nonzero_rational(rng);
      if (a + b == 0) b += 1;
      return same_point(smul(rational(a + b), p), padd(smul(a, p), smul(b, p)));
    });
    s.check("product is commutative" + tag, n, [&](rng_t& rng) {
      V p = pv(rng), q = pv(rng);
      return same_point(pmul(p, q), pmul(q, p));
    });
    s.check("product is associative" + tag, n, [&](rng_t& rng) {
      V p = pv(rng), q = pv(rng), r = pv(rng);
      return same_point(pmul(pmul(p, q), r), pmul(p, pmul(q, r)));
    });
    s.check("product distributes over addition" + tag, n, [&](rng_t& rng) {
      V p = pv(rng), q = pv(rng), r = pv(rng);
      return same_point(pmul(padd(p, q), r), padd(pmul(p, r), pmul(q, r)));
    });
    // Further module properties.
    s.check("argument(rotate(t, p)) = argument(p) + t" + tag, n, [&](rng_t& rng) {
      V p = std::bernoulli_distribution(0.5)(rng) ? random_affine_pvec(rng, f) : pv(rng);
      rational t = random_rational(rng);
      return argument(rotate(t, p)) == argument(p) + t;
    });
    s.check("rotation is multiplication by a unit-norm point" + tag, n, [&](rng_t& rng) {
      V p = f == Flavor::N ? random_affine_pvec(rng, f) : pv(rng);
      rational t = random_rational(rng);
      return same_point(rotate(t, p), pmul(from_arg_mod(f, t, rational(1)), p));
    });
    s.check("norm(w conj(w)) = norm(w)^2" + tag, n, [&](rng_t& rng) {
      V p = pv(rng);
      return norm(pmul(p, pconj(p))) == norm(p) * norm(p);
    });
    s.check("zero is neutral and -w is the additive inverse" + tag, n, [&](rng_t& rng) {
      V p = pv(rng);
      return same_point(padd(p, zero<rational>(f)), p) && same_point(padd(p, pneg(p)), zero<rational>(f));
    });
    s.check("affine and polar charts agree off the null set" + tag, n, [&](rng_t& rng) {
      V p = random_affine_pvec(rng, f);
      // The polar chart collapses the N null parabola to one point.
      if (f == Flavor::N && norm(p) == 0) p = V::affine(f, p.affine_coords().u, p.affine_coords().v + 1);
      return p.as_polar().to_affine() == p.affine_coords() && norm(p) == norm(p.as_polar()) &&
             argument(p) == argument(p.as_polar());
    });
  }
  s.check("tropical addition commutes with N rotations", n, [&](rng_t& rng) {
    V p = random_affine_pvec(rng, Flavor::N), q = random_affine_pvec(rng, Flavor::N);
    rational t = random_rational(rng);
    TropicalMode m = std::bernoulli_distribution(0.5)(rng) ? TropicalMode::Min : TropicalMode::Max;
    return same_point(rotate(t, tropical_add(p, q, m)), tropical_add(rotate(t, p), rotate(t, q), m)) &&
           same_point(tropical_add(p, q, m), tropical_add(q, p, m));
  });
  return s.take();
}

inline std::vector<CheckResult> verify_induced(std::uint64_t seed = 5) {
  using namespace verify_detail;
  Suite s("induced", seed);
  constexpr int n = 200;
  s.check("chi_k is multiplicative on K (exact)", n, [&](rng_t& rng) {
    int k = std::uniform_int_distribution<int>(-4, 4)(rng);
    auto spec = CharacterSpec<rational>::K(k);
    SL2<rational> h1 = random_rational_k(rng), h2 = random_rational_k(rng);
    return chi(spec, h1 * h2) == chi(spec, h1) * chi(spec, h2);
  });
  s.check("chi_tau is multiplicative on N', parab-alg (exact)", n, [&](rng_t& rng) {
    auto spec = CharacterSpec<rational>::Nprime(CharFlavor::parab_alg, random_rational(rng));
    auto h1 = subgroup_element(Subgroup::Nprime, random_rational(rng));
    auto h2 = subgroup_element(Subgroup::Nprime, random_rational(rng));
    return chi(spec, h1 * h2) == chi(spec, h1) * chi(spec, h2);
  });
  s.check("chi_tau is multiplicative on N', complex (1e-12)", n, [&](rng_t& rng) {
    auto spec = CharacterSpec<double>::Nprime(CharFlavor::complex, uniform(rng, -2, 2));
    auto h1 = subgroup_element(Subgroup::Nprime, uniform(rng, -2, 2));
    auto h2 = subgroup_element(Subgroup::Nprime, uniform(rng, -2, 2));
    return close(chi(spec, h1 * h2), chi(spec, h1) * chi(spec, h2), 1e-12);
  });

  SampledFunction<rational> f_exact{[](const HalfPlanePoint<rational>& w) {
                                      return HNum<rational>(w.u * w.u + w.v, w.u - w.v, Sigma::parabolic);
                                    },
                                    {-100, 100, 0, 100}};
  auto f_float = [](Sigma sg) {
    return SampledFunction<double>{[sg](const HalfPlanePoint<double>& w) {
                                     return HNum<double>(std::cos(w.u) + w.v, w.u * w.v, sg);
                                   },
                                   {-100, 100, 1e-3, 100}};
  };
  for (CharFlavor fl : {CharFlavor::parab_alg, CharFlavor::parab_geom}) {
    s.check(std::string("rho(g1 g2) = rho(g1) rho(g2), N' ") + name(fl) + " (exact)", n, [&](rng_t& rng) {
      auto spec = CharacterSpec<rational>::Nprime(fl, random_rational(rng));
      SL2<rational> g1 = random_rational_sl2(rng), g2 = random_rational_sl2(rng);
      HalfPlanePoint<rational> w = random_point(rng);
      return rep(spec, g1 * g2, f_exact, w) == rep(spec, g1, transport(spec, g2, f_exact), w);
    });
  }
  s.check("rho(g1 g2) = rho(g1) rho(g2), N' complex (1e-10)", n, [&](rng_t& rng) {
    auto spec = CharacterSpec<double>::Nprime(CharFlavor::complex, uniform(rng, -2, 2));
    auto f = f_float(Sigma::elliptic);
    SL2<double> g1 = random_float_sl2(rng), g2 = random_float_sl2(rng);
    HalfPlanePoint<double> w = random_float_point(rng);
    return close(rep(spec, g1 * g2, f, w), rep(spec, g1, transport(spec, g2, f), w), 1e-10);
  });
  s.check("rho(g1 g2) = rho(g1) rho(g2), K discrete series (1e-10)", n, [&](rng_t& rng) {
    auto spec = CharacterSpec<double>::K(std::uniform_int_distribution<int>(1, 5)(rng));
    auto f = f_float(Sigma::elliptic);
    SL2<double> g1 = random_float_sl2(rng), g2 = random_float_sl2(rng);
    HalfPlanePoint<double> w = random_float_point(rng);
    return close(rep(spec, g1 * g2, f, w), rep(spec, g1, transport(spec, g2, f), w), 1e-10);
  });
  s.check("section formula gives the N' parab-alg multiplier (exact)", n, [&](rng_t& rng) {
    auto spec = CharacterSpec<rational>::Nprime(CharFlavor::parab_alg, random_rational(rng));
    SL2<rational> g = random_rational_sl2(rng);
    HalfPlanePoint<rational> w = random_point(rng);
    return rep_from_section(spec, g, f_exact, w) == rep(spec, g, f_exact, w);
  });
  s.check("section formula gives the discrete-series multiplier (1e-10)", n, [&](rng_t& rng) {
    auto spec = CharacterSpec<double>::K(std::uniform_int_distribution<int>(1, 5)(rng));
    auto f = f_float(Sigma::elliptic);
    SL2<double> g = random_float_sl2(rng);
    HalfPlanePoint<double> w = random_float_point(rng);
    return close(rep_from_section(spec, g, f, w), rep(spec, g, f, w), 1e-10);
  });
  s.check("f_k is an eigenvector of rho_k(h), h in K (1e-10)", 1, [&](rng_t& rng) {
    for (int k = 1; k <= 4; ++k) {
      auto spec = CharacterSpec<double>::K(k);
      auto fk = f_k<double>(k);
      for (int i = -30; i <= 30; ++i) {
        SL2<double> h = subgroup_element(Subgroup::K, i * 0.1);
        for (int j = 0; j < 5; ++j) {
          HalfPlanePoint<double> w = random_float_point(rng);
          if (!close(rep_K(k, h, fk, w), chi(spec, h) * fk(w), 1e-10)) return false;
        }
      }
    }
    return true;
  });
  s.check("discrete-series multiplier has modulus 1 (1e-12)", n, [&](rng_t& rng) {
    int k = std::uniform_int_distribution<int>(1, 5)(rng);
    RepTerms<double> r = rep_K_terms(k, random_float_sl2(rng), random_float_point(rng));
    return std::abs(modulus_sq(r.multiplier) - 1) <= 1e-12;
  });
  s.check("parab-alg multiplier has modulus 1 (exact)", n, [&](rng_t& rng) {
    RepTerms<rational> r = rep_Nprime_terms(CharFlavor::parab_alg, random_rational(rng),
                                            random_rational_sl2(rng), random_point(rng));
    return modulus_sq(r.multiplier) == 1;
  });
  s.check("parab-geom values move by a unit-norm point (exact)", n, [&](rng_t& rng) {
    RepTerms<rational> r = rep_Nprime_terms(CharFlavor::parab_geom, random_rational(rng),
                                            random_rational_sl2(rng), random_point(rng));
    rational sft = r.shift.re();
    auto rot = from_arg_mod(Flavor::N, sft, rational(1));
    HNum<rational> x = random_hnum(rng, Sigma::parabolic);
    HNum<rational> moved = r.multiplier * x + r.shift;
    auto want = pmul(rot, PVec<rational>::affine(Flavor::N, x.re(), x.im())).affine_coords();
    return norm(rot) == 1 && moved.re() == want.u && moved.im() == want.v;
  });
  return s.take();
}

inline std::vector<CheckResult> verify_ladder_suite(std::uint64_t seed = 6) {
  using namespace verify_detail;
  using R = rational;
  using Tr = LieTriple<R>;
  Suite s("ladder", seed);
  const Tr Z{0, 0, 1}, B{0, 1, 0}, P{0, -1, R(1) / 2};
  auto squares_are = [](const Tr& x, Sigma sg, R want) {
    for (const auto& pair : solve_ladder(x, sg))
      if (pair.lambda * pair.lambda != HNum<R>::real(want, sg)) return false;
    return true;
  };
  s.check("lambda^2 = -4 for Z, sigma = -1", 1, [&](rng_t&) { return squares_are(Z, Sigma::elliptic, -4); });
  s.check("lambda^2 = 1 for B, all sigma", 1, [&](rng_t&) {
    return squares_are(B, Sigma::elliptic, 1) && squares_are(B, Sigma::parabolic, 1) &&
           squares_are(B, Sigma::hyperbolic, 1);
  });
  s.check("lambda^2 = 0 for -B + Z/2, sigma = 0", 1, [&](rng_t&) { return squares_are(P, Sigma::parabolic, 0); });
  s.check("B has four eigen-pairs for sigma = +1 and two for sigma = -1", 1, [&](rng_t&) {
    return solve_ladder(B, Sigma::hyperbolic).size() == 4 && solve_ladder(B, Sigma::elliptic).size() == 2;
  });
  s.check("every returned pair satisfies [X, L] = lambda L (exact)", 1, [&](rng_t&) {
    for (auto [x, sg] : {std::pair{Z, Sigma::elliptic}, {B, Sigma::elliptic}, {B, Sigma::parabolic},
                         {B, Sigma::hyperbolic}, {P, Sigma::parabolic}}) {
      for (const auto& pair : solve_ladder(x, sg)) {
        if (!eigen_relation(x, pair.lambda, pair.L)) return false;
        AdMatrix<R> m = ad(x);
        std::array<HNum<R>, 3> c{pair.L.cA, pair.L.cB, pair.L.cZ};
        for (int i = 0; i < 3; ++i) {
          HNum<R> row = HNum<R>::real(0, sg);
          for (int j = 0; j < 3; ++j) row += m[i][j] * c[j];
          if (row != pair.lambda * c[i]) return false;
        }
      }
    }
    return true;
  });
  s.check("ad agrees with the matrix commutator (exact)", 300, [&](rng_t& rng) {
    Tr x = random_triple(rng), y = random_triple(rng);
    Mat2<R> mx = to_matrix(x), my = to_matrix(y);
    return bracket(x, y) == from_matrix(Mat2<R>(mx * my - my * mx));
  });
  s.check("Killing form equals 4 tr(XY) (exact)", 300, [&](rng_t& rng) {
    Tr x = random_triple(rng), y = random_triple(rng);
    return killing_form(x, y) == 4 * (to_matrix(x) * to_matrix(y)).trace();
  });
  s.check("elliptic pair satisfies the final relations with X = Z/2", 1, [&](rng_t&) {
    Sigma e = Sigma::elliptic;
    HNum<R> i = HNum<R>::unit(e), one = HNum<R>::real(1, e), zero = HNum<R>::real(0, e);
    HLieVector<R> plus{i, one, zero}, minus{-i, one, zero};
    return verify_ladder(Tr{0, 0, R(1) / 2}, plus, minus, e).all() && !verify_ladder(Z, plus, minus, e).all();
  });
  s.check("Y = [A, X] has [A, Y] = X and K(X, Y) = 0 (exact)", 1, [&](rng_t&) {
    Tr A{1, 0, 0};
    for (const Tr& x : {Z, B, P}) {
      Tr y = find_Y(x);
      if (bracket(A, y) != x || killing_form(x, y) != 0) return false;
    }
    return true;
  });
  s.check("Y is unique up to a real factor", 1, [&](rng_t&) {
    // Unknowns (y_B, y_Z, mu) with [A, y_B B + y_Z Z] = mu X.
    Tr A{1, 0, 0};
    for (const Tr& x : {Z, B, P}) {
      Tr cb = bracket(A, Tr{0, 1, 0}), cz = bracket(A, Tr{0, 0, 1});
      detail::Matrix<R> sys{{cb.a, cz.a, -x.a}, {cb.b, cz.b, -x.b}, {cb.z, cz.z, -x.z}};
      auto basis = detail::nullspace(sys);
      if (basis.size() != 1) return false;
      Tr y = find_Y(x);
      const auto& v = basis.front();
      // find_Y's (y_B, y_Z) must be proportional to the kernel vector.
      if (y.a != 0 || y.b * v[1] != y.z * v[0]) return false;
    }
    return true;
  });
  s.check("the nilpotent generator is Killing-isotropic", 1, [&](rng_t&) { return killing_form(P, P) == 0; });
  return s.take();
}

inline std::vector<CheckResult> verify_orbitgen(std::uint64_t seed = 7) {
  using namespace verify_detail;
  Suite s("orbitgen", seed);
  for (int figure : {1, 2}) {
    for (bool geodesic : {false, true}) {
      if (figure == 1 && geodesic) continue;
      std::string tag = " (figure " + std::to_string(figure) + (geodesic ? ", geodesic" : "") + ")";
      auto curves = figure_curves(figure, geodesic);
      s.check("every sample satisfies its equation within 1e-9" + tag, 1, [&](rng_t&) {
        for (const auto& c : curves)
          for (auto [x, y] : c.samples)
            if (!(std::abs(residual(c, x, y)) <= 1e-9)) return false;
        return true;
      });
      s.check("orbits are invariant under their rotations" + tag, 1, [&](rng_t&) {
        for (const auto& c : curves) {
          if (c.kind == CurveKind::spoke) continue;
          for (double t : {0.3, -0.7}) {
            for (auto [x, y] : c.samples) {
              double rx = x, ry = y;
              HalfPlanePoint<double> p{x, y};
              switch (c.case_label) {
                case CaseLabel::E:
                case CaseLabel::P0:
                case CaseLabel::H: {
                  Sigma sg = c.case_label == CaseLabel::E ? Sigma::elliptic
                             : c.case_label == CaseLabel::H ? Sigma::hyperbolic
                                                            : Sigma::parabolic;
                  HNum<double> w = HNum<double>(x, y, sg) * exp_unit(sg, t);
                  rx = w.re(), ry = w.im();
                  break;
                }
                case CaseLabel::P: {
                  auto q = geodesic ? geodesic_rotate_N(t, p) : parab_rotate_N(t, p);
                  rx = q.u, ry = q.v;
                  break;
                }
                case CaseLabel::Pprime: {
                  if (std::abs(1 + t * x) < 1e-3) continue;
                  auto q = geodesic ? geodesic_rotate_Nprime(t, p) : parab_rotate_Nprime(t, p);
                  rx = q.u, ry = q.v;
                  break;
                }
              }
              double scale = std::max({1.0, rx * rx, std::abs(ry)});
              if (!(std::abs(residual(c, rx, ry)) <= 1e-9 * scale)) return false;
            }
          }
        }
        return true;
      });
    }
  }
  s.check("rotating a P spoke by t lands on the spoke at u0 + t", 100, [&](rng_t& rng) {
    double u0 = uniform(rng, -1.5, 1.5), t = uniform(rng, -1, 1);
    OrbitCurve moved{CaseLabel::P, u0 + t, CurveKind::spoke, Family::standard, {}};
    auto q = parab_rotate_N(t, HalfPlanePoint<double>{u0, uniform(rng, -2, 2)});
    return std::abs(residual(moved, q.u, q.v)) <= 1e-12;
  });
  return s.take();
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hypercomplex", "sl2",     "homogeneous", "dualalg",
                                              "induced",      "ladder", "orbitgen"};
  return names;
}

inline std::vector<CheckResult> run_suite(std::string_view suite, std::uint64_t seed = 20240601) {
  std::vector<CheckResult> out;
  auto add = [&](std::vector<CheckResult> more) {
    for (auto& r : more) out.push_back(std::move(r));
  };
  bool all = suite == "all", known = all;
  if (all || suite == "hypercomplex") known = true, add(verify_hypercomplex(seed + 1));
  if (all || suite == "sl2") known = true, add(verify_sl2(seed + 2));
  if (all || suite == "homogeneous") known = true, add(verify_homogeneous(seed + 3));
  if (all || suite == "dualalg") known = true, add(verify_dualalg(seed + 4));
  if (all || suite == "induced") known = true, add(verify_induced(seed + 5));
  if (all || suite == "ladder") known = true, add(verify_ladder_suite(seed + 6));
  if (all || suite == "orbitgen") known = true, add(verify_orbitgen(seed + 7));
  if (!known) throw error(errc::domain_error, "unknown suite '" + std::string(suite) + "'");
  return out;
}

}  // namespace eph
