#pragma once

// Ladder operators: eigenvectors of ad_X with eigenvalues in the complex,
// dual or double numbers, found by solving over the reals.

#include <array>
#include <optional>
#include <vector>

#include "eph/sl2.hpp"

namespace eph {

// x_A A + x_B B + x_Z Z with real coefficients.
template <scalar T>
struct LieTriple {
  T a{0}, b{0}, z{0};

  friend LieTriple operator+(const LieTriple& x, const LieTriple& y) {
    return {x.a + y.a, x.b + y.b, x.z + y.z};
  }
  friend LieTriple operator*(const T& k, const LieTriple& x) { return {k * x.a, k * x.b, k * x.z}; }
  friend bool operator==(const LieTriple&, const LieTriple&) = default;
};

template <scalar T>
struct HLieVector {
  HNum<T> cA, cB, cZ;

  Sigma sigma() const { return cA.sigma(); }
  bool is_zero() const {
    HNum<T> z = HNum<T>::real(T(0), sigma());
    return cA == z && cB == z && cZ == z;
  }
  friend bool operator==(const HLieVector&, const HLieVector&) = default;
};

template <scalar T>
HLieVector<T> lift(const LieTriple<T>& x, Sigma s) {
  return {HNum<T>::real(x.a, s), HNum<T>::real(x.b, s), HNum<T>::real(x.z, s)};
}

// 2x2 realisation through A = 1/2 diag(-1, 1), B = 1/2 [[0,1],[1,0]], Z = [[0,1],[-1,0]].
template <class E>
Mat2<E> to_matrix(const E& ca, const E& cb, const E& cz, const E& half) {
  return {-(half * ca), half * cb + cz, half * cb - cz, half * ca};
}

template <scalar T>
Mat2<T> to_matrix(const LieTriple<T>& x) {
  return to_matrix<T>(x.a, x.b, x.z, T(1) / T(2));
}

template <scalar T>
Mat2<HNum<T>> to_matrix(const HLieVector<T>& x) {
  return to_matrix<HNum<T>>(x.cA, x.cB, x.cZ, HNum<T>::real(T(1) / T(2), x.sigma()));
}

// Inverse of to_matrix on traceless [[p, q], [r, -p]]: (-2p, q + r, (q - r)/2).
template <class E>
std::array<E, 3> from_matrix(const Mat2<E>& m, const E& half) {
  return {-(m.a + m.a), m.b + m.c, half * (m.b - m.c)};
}

template <scalar T>
LieTriple<T> from_matrix(const Mat2<T>& m) {
  auto [a, b, z] = from_matrix<T>(m, T(1) / T(2));
  return {a, b, z};
}

template <scalar T>
HLieVector<T> from_matrix(const Mat2<HNum<T>>& m) {
  auto [a, b, z] = from_matrix<HNum<T>>(m, HNum<T>::real(T(1) / T(2), m.a.sigma()));
  return {a, b, z};
}

template <scalar T>
using AdMatrix = std::array<std::array<T, 3>, 3>;

// Columns are [X, A], [X, B], [X, Z] from [Z,A] = 2B, [Z,B] = -2A, [A,B] = -Z/2.
template <scalar T>
AdMatrix<T> ad(const LieTriple<T>& x) {
  T h = T(1) / T(2);
  return {{{T(0), T(-2) * x.z, T(2) * x.b},
           {T(2) * x.z, T(0), T(-2) * x.a},
           {h * x.b, -h * x.a, T(0)}}};
}

template <scalar T>
LieTriple<T> apply(const AdMatrix<T>& m, const LieTriple<T>& y) {
  std::array<T, 3> v{y.a, y.b, y.z}, r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i] += m[i][j] * v[j];
  return {r[0], r[1], r[2]};
}

template <scalar T>
LieTriple<T> bracket(const LieTriple<T>& x, const LieTriple<T>& y) {
  return eph::apply(ad(x), y);
}

// tr(ad_X ad_Y), which equals 4 tr(XY) on sl2.
template <scalar T>
T killing_form(const LieTriple<T>& x, const LieTriple<T>& y) {
  AdMatrix<T> p = ad(x), q = ad(y);
  T tr(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) tr += p[i][j] * q[j][i];
  return tr;
}

namespace detail {

template <scalar T>
using Matrix = std::vector<std::vector<T>>;

// Null space basis by reduced row echelon form. Floats pivot on the largest
// entry and treat entries below tol * max|entry| as zero.
template <scalar T>
std::vector<std::vector<T>> nullspace(Matrix<T> m) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  double scale = 0;
  for (auto& row : m)
    for (auto& x : row) scale = std::max(scale, std::abs(to_double(x)));
  auto negligible = [&](const T& x) {
    if constexpr (is_exact_v<T>) return x == 0;
    else return std::abs(x) <= 1e-10 * std::max(1.0, scale);
  };
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = r;
    for (std::size_t i = r; i < rows; ++i)
      if (std::abs(to_double(m[i][c])) > std::abs(to_double(m[best][c]))) best = i;
    if (negligible(m[best][c])) continue;
    std::swap(m[r], m[best]);
    T p = m[r][c];
    for (auto& x : m[r]) x /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      T f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(int(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(cols, T(0));
    v[free] = T(1);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

template <scalar T>
struct LadderPair {
  HNum<T> lambda;
  HLieVector<T> L;
};

// Characteristic polynomial of ad_X is -lambda (lambda^2 + E2), E2 the sum of
// the principal 2x2 minors. Ladder eigenvalues are the nonzero roots of
// lambda^2 = -E2 inside the sigma-algebra; in the dual numbers a zero right
// side gives the line lambda = y*e, represented by y = +-1.
template <scalar T>
std::vector<HNum<T>> ladder_eigenvalues(const LieTriple<T>& x, Sigma s) {
  AdMatrix<T> m = ad(x);
  T e2 = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] +
         m[1][1] * m[2][2] - m[1][2] * m[2][1];
  T q = -e2;
  std::vector<HNum<T>> out;
  auto push = [&](T re, T im) {
    out.emplace_back(re, im, s);
    out.emplace_back(T(-re), T(-im), s);
  };
  double scale = 0;
  for (auto& row : m)
    for (auto& v : row) scale = std::max(scale, std::abs(to_double(v)));
  bool q_zero = is_zero<T>(q, scale * scale);
  if (q_zero) {
    if (s == Sigma::parabolic) push(T(0), T(1));
  } else if (q > 0) {
    T r = sc::sqrt(q);
    push(r, T(0));
    if (s == Sigma::hyperbolic) push(T(0), r);
  } else if (s == Sigma::elliptic) {
    push(T(0), sc::sqrt(T(-q)));
  }
  return out;
}

// Solves (ad_X - lambda) L = 0 as a real system in (re, im) parts and picks a
// solution that no zero divisor annihilates, so it generates the module of
// solutions. Returns nothing if every solution is torsion.
template <scalar T>
std::optional<HLieVector<T>> ladder_vector(const LieTriple<T>& x, const HNum<T>& lambda) {
  Sigma s = lambda.sigma();
  T sig(value(s));
  AdMatrix<T> m = ad(x);
  const T &lr = lambda.re(), &li = lambda.im();
  detail::Matrix<T> sys(6, std::vector<T>(6, T(0)));
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      sys[j][k] = m[j][k];
      sys[3 + j][3 + k] = m[j][k];
    }
    sys[j][j] -= lr;
    sys[j][3 + j] -= sig * li;
    sys[3 + j][3 + j] -= lr;
    sys[3 + j][j] -= li;
  }
  auto basis = detail::nullspace(sys);
  auto to_vec = [s](const std::vector<T>& v) {
    return HLieVector<T>{HNum<T>(v[0], v[3], s), HNum<T>(v[1], v[4], s), HNum<T>(v[2], v[5], s)};
  };
  auto nonzero = [](const std::vector<T>& v, auto part) {
    for (int i = 0; i < 3; ++i)
      if (!is_zero<T>(part(v, i))) return true;
    return false;
  };
  std::optional<HLieVector<T>> found;
  switch (s) {
    case Sigma::elliptic:
      if (!basis.empty()) found = to_vec(basis.front());
      break;
    case Sigma::parabolic:
      for (auto& v : basis)
        if (nonzero(v, [](auto& w, int i) { return w[i]; })) {
          found = to_vec(v);
          break;
        }
      break;
    case Sigma::hyperbolic: {
      // Components along the idempotents (1 +- h)/2 are re + im and re - im.
      const std::vector<T>*plus = nullptr, *minus = nullptr;
      for (auto& v : basis) {
        if (!plus && nonzero(v, [](auto& w, int i) { return T(w[i] + w[3 + i]); })) plus = &v;
        if (!minus && nonzero(v, [](auto& w, int i) { return T(w[i] - w[3 + i]); })) minus = &v;
      }
      if (plus && minus) {
        std::vector<T> v(6);
        T h = T(1) / T(2);
        for (int i = 0; i < 3; ++i) {
          T p = (*plus)[i] + (*plus)[3 + i], q = (*minus)[i] - (*minus)[3 + i];
          v[i] = h * (p + q);
          v[3 + i] = h * (p - q);
        }
        found = to_vec(v);
      }
      break;
    }
  }
  if (!found) return found;
  // Scale so that the first invertible coefficient becomes 1.
  HLieVector<T>& L = *found;
  for (const HNum<T>* c : {&L.cA, &L.cB, &L.cZ}) {
    if (is_invertible(*c)) {
      HNum<T> k = invert(*c);
      L = {k * L.cA, k * L.cB, k * L.cZ};
      break;
    }
  }
  return found;
}

template <scalar T>
std::vector<LadderPair<T>> solve_ladder(const LieTriple<T>& x, Sigma s) {
  std::vector<LadderPair<T>> out;
  for (const HNum<T>& lambda : ladder_eigenvalues(x, s))
    if (auto L = ladder_vector(x, lambda)) out.push_back({lambda, *L});
  if (out.empty())
    throw error(errc::no_nontrivial_solution, "no ladder operator in this algebra");
  return out;
}

template <scalar T>
Mat2<HNum<T>> commutator(const Mat2<HNum<T>>& x, const Mat2<HNum<T>>& y) {
  return x * y - y * x;
}

// [X, L] == lambda L, checked on the 2x2 matrices.
template <scalar T>
bool eigen_relation(const LieTriple<T>& x, const HNum<T>& lambda, const HLieVector<T>& L) {
  Mat2<HNum<T>> X = to_matrix(lift(x, L.sigma())), M = to_matrix(L);
  Mat2<HNum<T>> lhs = commutator(X, M), rhs = lambda * M;
  if constexpr (is_exact_v<T>) return lhs == rhs;
  else return max_abs_diff(lhs, rhs) <= 1e-10;
}

struct LadderReport {
  bool raising;   // [X, L+] = iota L+
  bool lowering;  // [X, L-] = -iota L-
  bool bracket;   // [L-, L+] = 2 iota X
  bool all() const { return raising && lowering && bracket; }
};

template <scalar T>
LadderReport verify_ladder(const LieTriple<T>& x, const HLieVector<T>& plus,
                           const HLieVector<T>& minus, Sigma s) {
  if (plus.sigma() != s || minus.sigma() != s)
    throw error(errc::sigma_mismatch, "ladder operators and iota disagree on sigma");
  HNum<T> iota = HNum<T>::unit(s);
  Mat2<HNum<T>> X = to_matrix(lift(x, s)), P = to_matrix(plus), M = to_matrix(minus);
  auto eq = [](const Mat2<HNum<T>>& p, const Mat2<HNum<T>>& q) {
    if constexpr (is_exact_v<T>) return p == q;
    else return max_abs_diff(p, q) <= 1e-10;
  };
  HNum<T> two_iota = HNum<T>::real(T(2), s) * iota;
  return {eq(commutator(X, P), iota * P), eq(commutator(X, M), -iota * M),
          eq(commutator(M, P), two_iota * X)};
}

// Y = [A, X]; requires [A, Y] = X and K(X, Y) = 0.
template <scalar T>
LieTriple<T> find_Y(const LieTriple<T>& x) {
  LieTriple<T> A{T(1), T(0), T(0)};
  LieTriple<T> y = bracket(A, x);
  auto same = [](const LieTriple<T>& p, const LieTriple<T>& q) {
    return approx_eq<T>(p.a, q.a) && approx_eq<T>(p.b, q.b) && approx_eq<T>(p.z, q.z);
  };
  if (!same(bracket(A, y), x)) throw error(errc::property_violation, "[A, [A, X]] != X");
  if (!is_zero<T>(killing_form(x, y))) throw error(errc::property_violation, "K(X, Y) != 0");
  return y;
}

}  // namespace eph
