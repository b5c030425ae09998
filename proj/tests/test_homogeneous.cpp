#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace eph;
using Q = rational;
using P = HalfPlanePoint<Q>;
using HQ = HNum<Q>;

namespace {

constexpr Sigma all_sigmas[] = {Sigma::elliptic, Sigma::parabolic, Sigma::hyperbolic};

P random_point(rng_t& rng) { return {random_rational(rng), random_positive_rational(rng)}; }

HQ dual(Q re, Q im) { return {re, im, Sigma::parabolic}; }

}  // namespace

TEST(Section, Examples) {
  EXPECT_EQ(s_map(P{0, 1}), SL2<Q>::identity());
  EXPECT_EQ(s_map(P{Q(5, 2), 1}), SL2<Q>(1, Q(5, 2), 0, 1));
  EXPECT_EQ(s_map(P{0, 4}), SL2<Q>(2, 0, 0, Q(1, 2)));
  EXPECT_EQ(s_map_unnormalized(P{3, 2}), (Mat2<Q>{2, 3, 0, 1}));
  EXPECT_THROW(s_map(P{0, 2}), error);  // sqrt 2 is not rational
  EXPECT_THROW(s_map_unnormalized(P{0, 0}), error);
}

TEST(Projection, Examples) {
  for (Sigma s : all_sigmas) {
    EXPECT_EQ(p_map(SL2<Q>::identity(), s), (P{0, 1}));
    EXPECT_EQ(p_map(SL2<Q>(1, 3, 0, 1), s), (P{3, 1}));
    EXPECT_EQ(p_map(s_map(P{Q(-7, 3), Q(9, 4)}), s), (P{Q(-7, 3), Q(9, 4)}));
  }
  EXPECT_THROW(p_map(SL2<Q>(0, 1, -1, 0), Sigma::parabolic), error);
}

TEST(Projection, SectionPropertyOnRandomPoints) {
  rng_t rng(31);
  for (int i = 0; i < 300; ++i) {
    P p = random_point(rng);
    for (Sigma s : all_sigmas) ASSERT_EQ(p_map(s_map_unnormalized(p), s), p);
  }
}

TEST(Factor, Examples) {
  SL2<double> g(2, 1, 3, 2);
  double n = std::sqrt(13.0);
  EXPECT_LE(max_abs_diff(r_map(g, Subgroup::K).mat(), Mat2<double>{2 / n, -3 / n, 3 / n, 2 / n}), 1e-15);
  EXPECT_EQ(r_map(SL2<Q>(2, 1, 3, 2), Subgroup::Nprime), SL2<Q>(1, 0, Q(3, 2), 1));
  EXPECT_EQ(r_map(s_map(P{Q(1, 2), Q(1, 4)}), Subgroup::K), SL2<Q>::identity());
  EXPECT_EQ(r_map(s_map(P{Q(1, 2), Q(1, 4)}), Subgroup::Nprime), SL2<Q>::identity());
  EXPECT_EQ(r_map(s_map(P{Q(1, 2), Q(1, 4)}), Subgroup::Aprime), SL2<Q>::identity());
  EXPECT_THROW(r_map(SL2<Q>(1, 1, 0, 1), Subgroup::N), error);
}

// s(p(g)) r(g) = g for the subgroups paired with each sigma.
TEST(Factor, Recomposes) {
  rng_t rng(32);
  for (int i = 0; i < 300; ++i) {
    SL2<double> g = random_float_sl2(rng);
    SL2<double> k = s_map(p_map(g, Sigma::elliptic)) * r_map(g, Subgroup::K);
    ASSERT_LE(max_abs_diff(k.mat(), g.mat()), 1e-9);
    Mat2<double> r = r_map(g, Subgroup::K).mat();
    ASSERT_NEAR(r.a, r.d, 1e-12);
    ASSERT_NEAR(r.b, -r.c, 1e-12);
    if (g.d() > 0) {
      SL2<double> n = s_map(p_map(g, Sigma::parabolic)) * r_map(g, Subgroup::Nprime);
      ASSERT_LE(max_abs_diff(n.mat(), g.mat()), 1e-9);
    }
    if (g.d() > std::abs(g.c())) {
      SL2<double> a = s_map(p_map(g, Sigma::hyperbolic)) * r_map(g, Subgroup::Aprime);
      ASSERT_LE(max_abs_diff(a.mat(), g.mat()), 1e-9);
    }
  }
}

TEST(ActBrute, Examples) {
  for (Sigma s : all_sigmas) EXPECT_EQ(act_brute(SL2<Q>(1, 1, 0, 1), P{Q(2, 3), 5}, s), (P{Q(5, 3), 5}));
  EXPECT_EQ(act_brute(SL2<Q>(0, 1, -1, 0), P{0, 1}, Sigma::elliptic), (P{0, 1}));
  EXPECT_EQ(act_brute(SL2<Q>(1, 0, 1, 1), P{1, 1}, Sigma::parabolic), (P{Q(1, 2), Q(1, 4)}));
  // Hyperbolic denominator (cu+d)^2 - (cv)^2 vanishes on the light cone.
  EXPECT_THROW(act_brute(SL2<Q>(1, 0, 1, 1), P{0, 1}, Sigma::hyperbolic), error);
}

// act_brute against (aw+b)/(cw+d) computed in the real 2x2 model of the
// algebra, so the oracle shares no code with the library.
TEST(ActBrute, MatchesMatrixModelMoebius) {
  rng_t rng(33);
  int done = 0;
  while (done < 1000) {
    SL2<Q> g = random_rational_sl2(rng);
    P p = random_point(rng);
    Sigma s = all_sigmas[done % 3];
    auto den = oracle::add(oracle::mul(oracle::rep(g.c(), Q(0), value(s)), oracle::rep(p.u, p.v, value(s))),
                           oracle::rep(g.d(), Q(0), value(s)));
    if (oracle::det(den) == 0) continue;
    auto [u, v] = oracle::moebius(g.mat(), p.u, p.v, value(s));
    ASSERT_EQ(act_brute(g, p, s), (P{u, v}));
    ++done;
  }
}

TEST(ActBrute, IsAnAction) {
  rng_t rng(34);
  int done = 0;
  while (done < 1000) {
    Sigma s = all_sigmas[done % 3];
    SL2<Q> g1 = random_rational_sl2(rng), g2 = random_rational_sl2(rng);
    P p = random_point(rng);
    try {
      ASSERT_EQ(act_brute(g1 * g2, p, s), act_brute(g1, act_brute(g2, p, s), s));
      ++done;
    } catch (const error& e) {
      ASSERT_EQ(e.code(), errc::ideal_point);
    }
  }
}

TEST(ActBrute, CommutesWithSectionAndProjection) {
  rng_t rng(35);
  int done = 0;
  while (done < 600) {
    Sigma s = all_sigmas[done % 3];
    SL2<Q> g = random_rational_sl2(rng);
    P p = random_point(rng);
    try {
      ASSERT_EQ(act_brute(g, p, s), p_map(g.mat() * s_map_unnormalized(p), s));
      ++done;
    } catch (const error& e) {
      ASSERT_EQ(e.code(), errc::ideal_point);
    }
  }
}

TEST(Moebius, AgreesWithBrute) {
  rng_t rng(36);
  int done = 0;
  while (done < 1000) {
    Sigma s = all_sigmas[done % 3];
    SL2<Q> g = random_rational_sl2(rng);
    P p = random_point(rng);
    ProjPoint<Q> w = act_moebius(g, embed(p, s));
    if (w.is_ideal()) {
      EXPECT_THROW(act_brute(g, p, s), error);
      continue;
    }
    ASSERT_EQ(affine(w), act_brute(g, p, s));
    ++done;
  }
}

TEST(Moebius, IdentityAndIdealPoints) {
  ProjPoint<Q> w = embed(P{3, 4}, Sigma::hyperbolic);
  EXPECT_EQ(act_moebius(SL2<Q>::identity(), w), w);
  ProjPoint<Q> ideal = nprime_reference_point<Q>();
  EXPECT_TRUE(ideal.is_ideal());
  EXPECT_EQ(act_moebius(SL2<Q>::identity(), ideal), ideal);
  EXPECT_THROW(affine(ideal), error);
  ProjPoint<Q> zero{HQ(0, 1, Sigma::parabolic), HQ(0, 2, Sigma::parabolic)};
  EXPECT_THROW(normalize(zero), error);
}

TEST(Cayley, InverseMatrices) {
  // Up to the scalar prefactor, C * C^-1 is a real multiple of I.
  for (Sigma s : all_sigmas) {
    auto m = cayley<Q>(s) * cayley_inverse<Q>(s);
    EXPECT_EQ(m.b, HQ::real(0, s));
    EXPECT_EQ(m.c, HQ::real(0, s));
    EXPECT_EQ(m.a, m.d);
    EXPECT_EQ(m.a.im(), 0);
    EXPECT_NE(m.a.re(), 0);
  }
}

TEST(Cayley, Diagonalizes) {
  for (double t : {-2.5, -0.3, 0.0, 0.8, 3.0}) {
    auto k = cayley_conjugate(subgroup_element(Subgroup::K, t), Sigma::elliptic);
    EXPECT_LE(max_abs_diff(k, Mat2<HNum<double>>{exp_unit(Sigma::elliptic, t), HNum<double>::real(0, Sigma::elliptic),
                                                 HNum<double>::real(0, Sigma::elliptic), exp_unit(Sigma::elliptic, -t)}),
              1e-12);
    if (std::abs(t) > 2) continue;
    auto a = cayley_conjugate(subgroup_element(Subgroup::Aprime, t), Sigma::hyperbolic);
    EXPECT_LE(max_abs_diff(a, Mat2<HNum<double>>{exp_unit(Sigma::hyperbolic, t), HNum<double>::real(0, Sigma::hyperbolic),
                                                 HNum<double>::real(0, Sigma::hyperbolic), exp_unit(Sigma::hyperbolic, -t)}),
              1e-12);
  }
  for (Q t : {Q(-3), Q(1, 7), Q(5, 2)})
    EXPECT_EQ(cayley_conjugate(subgroup_element(Subgroup::N, t), Sigma::parabolic),
              (Mat2<HQ>{dual(1, t), dual(t, 0), dual(0, 0), dual(1, -t)}));
}

TEST(ParabolicRotation, NExamples) {
  for (Q t : {Q(-2), Q(1, 3), Q(4)}) EXPECT_EQ(parab_rotate_N(t, P{0, -1}), (P{t, t * t - 1}));
  EXPECT_EQ(parab_rotate_N(Q(0), P{Q(2, 5), 7}), (P{Q(2, 5), 7}));
  EXPECT_EQ(parab_rotate_N(Q(1), P{1, 0}), (P{2, 3}));
}

TEST(ParabolicRotation, NprimeExamples) {
  EXPECT_EQ(parab_rotate_Nprime(Q(0), P{Q(2, 5), 7}), (P{Q(2, 5), 7}));
  EXPECT_EQ(parab_rotate_Nprime(Q(1), P{1, 1}), (P{Q(1, 2), Q(-1, 2)}));
  EXPECT_THROW(parab_rotate_Nprime(Q(-1), P{1, 1}), error);
}

// The closed forms against the Mobius action of independently expanded
// matrices: [[1+et, t], [0, 1-et]] for N and [[1-et, 0], [t, 1+et]] for N'.
TEST(ParabolicRotation, ClosedFormsMatchMoebius) {
  rng_t rng(37);
  for (int i = 0; i < 500; ++i) {
    Q t = random_rational(rng);
    P p{random_rational(rng), random_rational(rng)};
    std::array<std::pair<Q, Q>, 4> n{{{1, t}, {t, 0}, {0, 0}, {1, -t}}};
    auto [u, v] = oracle::moebius(n, p.u, p.v, 0);
    ASSERT_EQ(parab_rotate_N(t, p), (P{u, v}));
    ASSERT_EQ(rotation_matrix_N(t), (Mat2<HQ>{dual(1, t), dual(t, 0), dual(0, 0), dual(1, -t)}));
    ASSERT_EQ(rotation_matrix_Nprime(t), (Mat2<HQ>{dual(1, -t), dual(0, 0), dual(t, 0), dual(1, t)}));
    if (1 + t * p.u == 0) continue;
    std::array<std::pair<Q, Q>, 4> np{{{1, -t}, {0, 0}, {t, 0}, {1, t}}};
    auto [u2, v2] = oracle::moebius(np, p.u, p.v, 0);
    ASSERT_EQ(parab_rotate_Nprime(t, p), (P{u2, v2}));
  }
}

TEST(ParabolicRotation, AreFlows) {
  rng_t rng(38);
  int done = 0;
  while (done < 500) {
    Q t = random_rational(rng), s = random_rational(rng);
    P p{random_rational(rng), random_rational(rng)};
    ASSERT_EQ(parab_rotate_N(t, parab_rotate_N(s, p)), parab_rotate_N(Q(t + s), p));
    try {
      ASSERT_EQ(parab_rotate_Nprime(t, parab_rotate_Nprime(s, p)), parab_rotate_Nprime(Q(t + s), p));
      ++done;
    } catch (const error& e) {
      ASSERT_EQ(e.code(), errc::ideal_point);
    }
  }
}

// The image of [1 : e] under the N' rotation matrix. The oracle multiplies
// the pair by the expanded matrix and divides in the real model:
// (1 - et) / (t + e) = 1/t - e (1 + 1/t^2).
TEST(ParabolicRotation, NprimeIdealPointImage) {
  for (Q t : {Q(1), Q(2), Q(-1, 3), Q(5, 4)}) {
    auto num = oracle::rep(Q(1), Q(-t), 0);
    auto den = oracle::rep(t, Q(1), 0);
    auto [u, v] = oracle::coords(oracle::mul(num, oracle::inv(den)));
    EXPECT_EQ(u, 1 / t);
    EXPECT_EQ(v, -1 - 1 / (t * t));
    EXPECT_EQ(parab_rotate_Nprime_ideal(t), (P{u, v}));
  }
  EXPECT_THROW(parab_rotate_Nprime_ideal(Q(0)), error);
}

// The images form one orbit of the flow and keep the N' norm u^2/(v+1).
TEST(ParabolicRotation, NprimeIdealPointOrbit) {
  for (Q t : {Q(1), Q(3, 2), Q(-2)}) {
    P p = parab_rotate_Nprime_ideal(t);
    for (Q s : {Q(1, 5), Q(2)}) {
      if (t + s == 0) continue;
      EXPECT_EQ(parab_rotate_Nprime(s, p), parab_rotate_Nprime_ideal(Q(t + s)));
    }
    EXPECT_EQ(p.u * p.u / (p.v + 1), -1);
  }
}

TEST(ParabolicTrig, Pythagoras) {
  rng_t rng(39);
  for (int i = 0; i < 200; ++i) {
    Q t = random_rational(rng);
    ASSERT_EQ(sin_p(t) * sin_p(t) + cos_p(t), 1);
    // (sin_p, -cos_p) is the N orbit of (0, -1).
    ASSERT_EQ(parab_rotate_N(t, P{0, -1}), (P{sin_p(t), -cos_p(t)}));
  }
}
