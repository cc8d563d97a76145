#pragma once

// Scalar fields the whole library is templated over:
//   ExactScalar — complex number with exact rational real/imaginary parts
//                 (a Gaussian rational); the default, all identities exact.
//   FloatScalar — std::complex<double> with a relative-tolerance policy,
//                 for large-n performance sweeps.

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace bgdc {

using Rational = boost::multiprecision::cpp_rational;

struct ExactScalar {
  Rational re;
  Rational im;

  ExactScalar() : re(0), im(0) {}
  ExactScalar(int v) : re(v), im(0) {}
  ExactScalar(long long v) : re(v), im(0) {}
  ExactScalar(const Rational& r) : re(r), im(0) {}
  ExactScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  ExactScalar operator-() const { return ExactScalar(-re, -im); }

  ExactScalar& operator+=(const ExactScalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ExactScalar& operator-=(const ExactScalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ExactScalar& operator*=(const ExactScalar& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  ExactScalar& operator/=(const ExactScalar& o) {
    Rational d = o.re * o.re + o.im * o.im;
    if (d == 0) throw std::domain_error("ExactScalar: division by zero");
    Rational r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }
};

using FloatScalar = std::complex<double>;

// "p/q" or "p"; sign on the numerator.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int num(s.substr(0, slash));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

inline std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

template <class F>
struct field_traits;

template <>
struct field_traits<ExactScalar> {
  static constexpr bool exact = true;
  static ExactScalar zero() { return ExactScalar(); }
  static ExactScalar one() { return ExactScalar(1); }
  static ExactScalar i() { return ExactScalar(Rational(0), Rational(1)); }
  static ExactScalar from_rational(const Rational& r) { return ExactScalar(r); }
  static ExactScalar from_int(long long v) { return ExactScalar(v); }
  static bool is_zero(const ExactScalar& x) { return x.is_zero(); }
  static bool eq(const ExactScalar& a, const ExactScalar& b) { return a == b; }
  static std::string str(const ExactScalar& x) {
    if (x.is_real()) return format_rational(x.re);
    return "(" + format_rational(x.re) + ") + (" + format_rational(x.im) + ")i";
  }
};

template <>
struct field_traits<FloatScalar> {
  static constexpr bool exact = false;
  static constexpr double rel_tol = 1e-10;
  static FloatScalar zero() { return {0.0, 0.0}; }
  static FloatScalar one() { return {1.0, 0.0}; }
  static FloatScalar i() { return {0.0, 1.0}; }
  static FloatScalar from_rational(const Rational& r) {
    return {r.convert_to<double>(), 0.0};
  }
  static FloatScalar from_int(long long v) { return {double(v), 0.0}; }
  // Pruning predicate for formal sums: exact zeros only, never tolerance.
  static bool is_zero(const FloatScalar& x) { return x.real() == 0.0 && x.imag() == 0.0; }
  static bool eq(const FloatScalar& a, const FloatScalar& b) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= rel_tol * scale;
  }
  static std::string str(const FloatScalar& x) {
    if (x.imag() == 0.0) return std::to_string(x.real());
    return "(" + std::to_string(x.real()) + ") + (" + std::to_string(x.imag()) + ")i";
  }
};

template <class F>
F scalar_pow(const F& base, int n) {
  F acc = field_traits<F>::one();
  for (int k = 0; k < n; ++k) acc = acc * base;
  return acc;
}

}  // namespace bgdc
