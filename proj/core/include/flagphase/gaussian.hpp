#pragma once

#include <string>

#include "flagphase/rational.hpp"

namespace flagphase {

// Exact element of Q(i).
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational real, Rational imag = 0) : re(std::move(real)), im(std::move(imag)) {}

  static GaussianRational i() { return {0, 1}; }

  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }

  // Principal argument in (-pi, pi].
  double arg() const;

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
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussianRational& operator*=(const Rational& s) {
    re *= s;
    im *= s;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator*(GaussianRational a, const Rational& s) { return a *= s; }
  friend GaussianRational operator-(GaussianRational a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re == b.re && a.im == b.im; }

  // Throws Error(InvalidArgument) on division by zero.
  GaussianRational operator/(const GaussianRational& o) const;
};

// (-i)^k for k >= 0.
GaussianRational minus_i_power(int k);

std::string to_string(const GaussianRational& z);

}  // namespace flagphase
