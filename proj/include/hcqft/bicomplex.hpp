#pragma once

#include <cmath>
#include <complex>
#include <ostream>
#include <utility>

#include <boost/multiprecision/gmp.hpp>

#include "hcqft/errors.hpp"

namespace hcqft {

/// Element x + i y + j u + ij v of the commutative ring H, with
/// i^2 = -1, j^2 = 1, (ij)^2 = -1 and ij = ji.
///
/// The scalar type is double for the numeric layers and an exact rational for
/// the ring-axiom suite. Products are evaluated with the terms grouped so that
/// elements of the form c*J+ (x == u, y == v) and c*J- (x == -u, y == -v)
/// keep that shape exactly in floating point; J+ * J- style products
/// therefore cancel to an exact zero.
template <typename T>
struct BasicBicomplex {
  T x{};  // 1-part
  T y{};  // i-part
  T u{};  // j-part
  T v{};  // ij-part

  constexpr BasicBicomplex() = default;
  constexpr BasicBicomplex(T x_, T y_ = T{}, T u_ = T{}, T v_ = T{})  // NOLINT
      : x(std::move(x_)), y(std::move(y_)), u(std::move(u_)), v(std::move(v_)) {}

  static BasicBicomplex one() { return {T(1)}; }
  static BasicBicomplex i() { return {T(0), T(1), T(0), T(0)}; }
  static BasicBicomplex j() { return {T(0), T(0), T(1), T(0)}; }
  static BasicBicomplex ij() { return {T(0), T(0), T(0), T(1)}; }

  BasicBicomplex& operator+=(const BasicBicomplex& o) {
    x += o.x;
    y += o.y;
    u += o.u;
    v += o.v;
    return *this;
  }
  BasicBicomplex& operator-=(const BasicBicomplex& o) {
    x -= o.x;
    y -= o.y;
    u -= o.u;
    v -= o.v;
    return *this;
  }
  BasicBicomplex& operator*=(const T& s) {
    x *= s;
    y *= s;
    u *= s;
    v *= s;
    return *this;
  }
  BasicBicomplex& operator*=(const BasicBicomplex& o) { return *this = *this * o; }

  friend BasicBicomplex operator+(BasicBicomplex a, const BasicBicomplex& b) { return a += b; }
  friend BasicBicomplex operator-(BasicBicomplex a, const BasicBicomplex& b) { return a -= b; }
  friend BasicBicomplex operator-(const BasicBicomplex& a) { return {-a.x, -a.y, -a.u, -a.v}; }
  friend BasicBicomplex operator*(BasicBicomplex a, const T& s) { return a *= s; }
  friend BasicBicomplex operator*(const T& s, BasicBicomplex a) { return a *= s; }

  friend BasicBicomplex operator*(const BasicBicomplex& a, const BasicBicomplex& b) {
    BasicBicomplex r;
    r.x = (a.x * b.x + a.u * b.u) - (a.y * b.y + a.v * b.v);
    r.y = (a.x * b.y + a.u * b.v) + (a.y * b.x + a.v * b.u);
    r.u = (a.x * b.u + a.u * b.x) - (a.y * b.v + a.v * b.y);
    r.v = (a.x * b.v + a.u * b.y) + (a.y * b.u + a.v * b.x);
    return r;
  }

  friend bool operator==(const BasicBicomplex& a, const BasicBicomplex& b) {
    return a.x == b.x && a.y == b.y && a.u == b.u && a.v == b.v;
  }

  [[nodiscard]] bool is_zero() const { return x == T(0) && y == T(0) && u == T(0) && v == T(0); }

  friend std::ostream& operator<<(std::ostream& os, const BasicBicomplex& a) {
    return os << '(' << a.x << ", " << a.y << ", " << a.u << ", " << a.v << ')';
  }
};

using Bicomplex = BasicBicomplex<double>;
using Rational = boost::multiprecision::mpq_rational;
using ExactBicomplex = BasicBicomplex<Rational>;
using Complex = std::complex<double>;

template <typename T>
BasicBicomplex<T> add(const BasicBicomplex<T>& a, const BasicBicomplex<T>& b) {
  return a + b;
}

template <typename T>
BasicBicomplex<T> mul(const BasicBicomplex<T>& a, const BasicBicomplex<T>& b) {
  return a * b;
}

/// x - iy - ju + ijv: flips i and j, leaves ij fixed.
template <typename T>
BasicBicomplex<T> conj_bar(const BasicBicomplex<T>& a) {
  return {a.x, -a.y, -a.u, a.v};
}

/// a * conj_bar(a) = x^2 + y^2 - u^2 - v^2 + 2ij(xv - yu).
template <typename T>
BasicBicomplex<T> modulus(const BasicBicomplex<T>& a) {
  return {a.x * a.x + a.y * a.y - a.u * a.u - a.v * a.v, T(0), T(0),
          T(2) * (a.x * a.v - a.y * a.u)};
}

template <typename T>
BasicBicomplex<T> j_plus() {
  return {T(1) / T(2), T(0), T(1) / T(2), T(0)};
}

template <typename T>
BasicBicomplex<T> j_minus() {
  return {T(1) / T(2), T(0), -T(1) / T(2), T(0)};
}

inline Bicomplex Jplus() { return j_plus<double>(); }
inline Bicomplex Jminus() { return j_minus<double>(); }

template <typename T>
struct IdempotentPair {
  BasicBicomplex<T> plus = j_plus<T>();
  BasicBicomplex<T> minus = j_minus<T>();
};

/// Standard-complex components over the idempotent basis, a = J+ a+ + J- a-.
struct IdempotentParts {
  Complex plus;
  Complex minus;
};

inline IdempotentParts idempotent_decompose(const Bicomplex& a) {
  return {{a.x + a.u, a.y + a.v}, {a.x - a.u, a.y - a.v}};
}

inline Bicomplex idempotent_recompose(const Complex& plus, const Complex& minus) {
  return {0.5 * (plus.real() + minus.real()), 0.5 * (plus.imag() + minus.imag()),
          0.5 * (plus.real() - minus.real()), 0.5 * (plus.imag() - minus.imag())};
}

inline Bicomplex idempotent_recompose(const IdempotentParts& p) {
  return idempotent_recompose(p.plus, p.minus);
}

/// Exact-rational variant: returns ((x+u), (y+v)) and ((x-u), (y-v)).
inline std::pair<std::pair<Rational, Rational>, std::pair<Rational, Rational>>
idempotent_decompose(const ExactBicomplex& a) {
  return {{a.x + a.u, a.y + a.v}, {a.x - a.u, a.y - a.v}};
}

/// Embeds a standard complex number as x + i y.
inline Bicomplex from_complex(const Complex& z) { return {z.real(), z.imag(), 0.0, 0.0}; }

/// e^{i alpha + j beta} = cos a cosh b + i sin a cosh b + j cos a sinh b + ij sin a sinh b.
inline Bicomplex exp_bicomplex(double alpha, double beta) {
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  const double cb = std::cosh(beta), sb = std::sinh(beta);
  return {ca * cb, sa * cb, ca * sb, sa * sb};
}

/// e^{j chi} via the idempotent split e^{chi} J+ + e^{-chi} J-.
inline Bicomplex exp_hyperbolic_split(double chi) {
  return idempotent_recompose(Complex(std::exp(chi), 0.0), Complex(std::exp(-chi), 0.0));
}

/// Inverse through the idempotent components; throws NotInvertible when either
/// component vanishes (a is then a zero divisor).
inline Bicomplex inverse(const Bicomplex& a) {
  const auto parts = idempotent_decompose(a);
  if (parts.plus == Complex(0.0) || parts.minus == Complex(0.0)) {
    throw NotInvertible("bicomplex element is a zero divisor");
  }
  return idempotent_recompose(1.0 / parts.plus, 1.0 / parts.minus);
}

/// Euclidean size of the four components; used for tolerances only.
inline double magnitude(const Bicomplex& a) {
  return std::sqrt(a.x * a.x + a.y * a.y + a.u * a.u + a.v * a.v);
}

}  // namespace hcqft
