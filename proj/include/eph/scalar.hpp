#pragma once

// Two scalar backends: exact rationals for identity checks and doubles for
// anything transcendental. Transcendental helpers in `sc` throw
// NotExactlyRepresentable on rationals unless the answer is trivially exact.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <concepts>
#include <numbers>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "eph/error.hpp"

namespace eph {

using rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using bigint = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

template <class T>
concept scalar = std::same_as<T, double> || std::same_as<T, rational>;

template <class T>
inline constexpr bool is_exact_v = std::same_as<T, rational>;

template <scalar T>
double to_double(const T& x) {
  if constexpr (is_exact_v<T>)
    return x.template convert_to<double>();
  else
    return x;
}

// Tolerance used wherever float mode needs a zero test. Scales with the
// magnitude of the operands that produced x.
inline constexpr double float_tol = 1e-12;

template <scalar T>
bool is_zero(const T& x, double scale = 1.0) {
  if constexpr (is_exact_v<T>)
    return x == 0;
  else
    return std::abs(x) <= float_tol * std::max(1.0, scale);
}

template <scalar T>
bool approx_eq(const T& x, const T& y, double scale = 1.0) {
  return is_zero<T>(x - y, scale);
}

template <scalar T>
int sign(const T& x) {
  return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

namespace sc {

[[noreturn]] inline void inexact(const char* what) {
  throw error(errc::not_exactly_representable, std::string(what) + " in exact mode");
}

// Exact square root of a rational that is a perfect square; anything else throws.
inline rational exact_sqrt(const rational& x) {
  if (x < 0) throw error(errc::domain_error, "sqrt of negative value");
  bigint n = boost::multiprecision::numerator(x);
  bigint d = boost::multiprecision::denominator(x);
  bigint rn = boost::multiprecision::sqrt(n);
  bigint rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) inexact("sqrt of a non-square");
  return rational(rn) / rational(rd);
}

template <scalar T>
T sqrt(const T& x) {
  if constexpr (is_exact_v<T>) {
    return exact_sqrt(x);
  } else {
    if (x < 0) throw error(errc::domain_error, "sqrt of negative value");
    return std::sqrt(x);
  }
}

template <scalar T>
T cos(const T& x) {
  if constexpr (is_exact_v<T>) {
    if (x == 0) return T(1);
    inexact("cos");
  } else {
    return std::cos(x);
  }
}

template <scalar T>
T sin(const T& x) {
  if constexpr (is_exact_v<T>) {
    if (x == 0) return T(0);
    inexact("sin");
  } else {
    return std::sin(x);
  }
}

template <scalar T>
T cosh(const T& x) {
  if constexpr (is_exact_v<T>) {
    if (x == 0) return T(1);
    inexact("cosh");
  } else {
    return std::cosh(x);
  }
}

template <scalar T>
T sinh(const T& x) {
  if constexpr (is_exact_v<T>) {
    if (x == 0) return T(0);
    inexact("sinh");
  } else {
    return std::sinh(x);
  }
}

template <scalar T>
T exp(const T& x) {
  if constexpr (is_exact_v<T>) {
    if (x == 0) return T(1);
    inexact("exp");
  } else {
    return std::exp(x);
  }
}

template <scalar T>
T atanh(const T& x) {
  if constexpr (is_exact_v<T>) {
    if (x == 0) return T(0);
    inexact("atanh");
  } else {
    return std::atanh(x);
  }
}

// atan2 on the (-pi, pi] branch: the -pi that atan2 returns for a negative
// zero is folded onto pi.
template <scalar T>
T atan2(const T& y, const T& x) {
  if constexpr (is_exact_v<T>) {
    if (y == 0 && x > 0) return T(0);
    inexact("atan2");
  } else {
    double a = std::atan2(y, x);
    return a <= -std::numbers::pi ? std::numbers::pi : a;
  }
}

}  // namespace sc

// Parses "3", "-7/4", "0.125", "1e-3". Rationals keep the decimal exactly.
template <scalar T>
T parse_scalar(std::string_view s) {
  auto bad = [&] { return error(errc::domain_error, "malformed number '" + std::string(s) + "'"); };
  if (s.empty()) throw bad();
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    T num = parse_scalar<T>(s.substr(0, slash));
    T den = parse_scalar<T>(s.substr(slash + 1));
    if (den == 0) throw error(errc::division_by_zero, "zero denominator in '" + std::string(s) + "'");
    return num / den;
  }
  if constexpr (is_exact_v<T>) {
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
    std::string digits;
    long long frac = 0;
    bool seen_point = false;
    for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
      if (s[i] == '.' && !seen_point) {
        seen_point = true;
      } else if (s[i] >= '0' && s[i] <= '9') {
        digits += s[i];
        if (seen_point) ++frac;
      } else {
        throw bad();
      }
    }
    if (digits.empty()) throw bad();
    long long expo = 0;
    if (i < s.size()) {
      auto rest = s.substr(i + 1);
      auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), expo);
      if (ec != std::errc() || p != rest.data() + rest.size()) throw bad();
    }
    // A leading zero would make the bigint parser read octal.
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    rational v{bigint(digits)};
    long long shift = expo - frac;
    rational ten = 10;
    for (long long k = 0; k < std::abs(shift); ++k) v = shift > 0 ? v * ten : v / ten;
    return neg ? -v : v;
  } else {
    double v = 0;
    const char* first = s.data();
    if (*first == '+') ++first;
    auto [p, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw bad();
    return v;
  }
}

// Rationals print as "p" or "p/q"; doubles use the shortest round-trip form.
template <scalar T>
std::string to_string(const T& x) {
  if constexpr (is_exact_v<T>) {
    return x.str();
  } else {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, p);
  }
}

}  // namespace eph
