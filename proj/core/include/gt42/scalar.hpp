#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <type_traits>

#include <gmpxx.h>

#include "gt42/errors.hpp"

namespace gt42 {

using Complex = std::complex<double>;
using Rational = mpq_class;

// Element of Q(i): exact Gaussian rational arithmetic on top of GMP.
struct GaussianRational {
  Rational re{0}, im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit like complex
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r) {}  // NOLINT

  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    const Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw Error("division by zero Gaussian rational");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }
};

// Parses "num/den", "num", or a decimal integer string into an exact rational.
inline Rational parse_rational(const std::string& s) {
  try {
    Rational q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw InputError("not a rational: '" + s + "'");
  }
}

inline std::string rational_string(const Rational& q) { return q.get_str(); }

enum class ScalarMode { ComplexF64, RealF64, GaussianRationalExact };

inline const char* scalar_mode_name(ScalarMode m) {
  switch (m) {
    case ScalarMode::ComplexF64: return "complex-f64";
    case ScalarMode::RealF64: return "real-f64";
    case ScalarMode::GaussianRationalExact: return "gaussian-rational";
  }
  return "?";
}

inline ScalarMode parse_scalar_mode(const std::string& s) {
  if (s == "complex-f64") return ScalarMode::ComplexF64;
  if (s == "real-f64") return ScalarMode::RealF64;
  if (s == "gaussian-rational") return ScalarMode::GaussianRationalExact;
  throw InputError("unknown scalar mode: '" + s + "'");
}

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  using Real = double;
  static constexpr bool exact = false;
  static constexpr ScalarMode mode = ScalarMode::ComplexF64;
  static Complex conj(const Complex& z) { return std::conj(z); }
  static Real abs_sq(const Complex& z) { return std::norm(z); }
  static Complex from_int(long n) { return Complex(double(n), 0.0); }
  static double to_double(Real r) { return r; }
};

template <>
struct ScalarTraits<double> {
  using Real = double;
  static constexpr bool exact = false;
  static constexpr ScalarMode mode = ScalarMode::RealF64;
  static double conj(double x) { return x; }
  static Real abs_sq(double x) { return x * x; }
  static double from_int(long n) { return double(n); }
  static double to_double(Real r) { return r; }
};

template <>
struct ScalarTraits<GaussianRational> {
  using Real = Rational;
  static constexpr bool exact = true;
  static constexpr ScalarMode mode = ScalarMode::GaussianRationalExact;
  static GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }
  static Real abs_sq(const GaussianRational& z) { return z.re * z.re + z.im * z.im; }
  static GaussianRational from_int(long n) { return GaussianRational(n); }
  static double to_double(const Real& r) { return r.get_d(); }
};

template <class S>
using RealOf = typename ScalarTraits<S>::Real;

// Relative zero test used for zero-pattern extraction: |value| <= eps * scale,
// phrased on squared magnitudes so exact scalars never need square roots.
// Exact mode ignores eps entirely.
template <class S>
bool is_zero_rel(const RealOf<S>& value_abs_sq, const RealOf<S>& scale_abs_sq, double eps) {
  if constexpr (ScalarTraits<S>::exact) {
    (void)scale_abs_sq;
    (void)eps;
    return value_abs_sq == 0;
  } else {
    return value_abs_sq <= eps * eps * scale_abs_sq;
  }
}

// Default relative tolerance for floating-point zero classification.
inline constexpr double kDefaultEps = 1e-9;

}  // namespace gt42
